// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hyperkey/capacity.hpp"
#include "hyperkey/error.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/partitions.hpp"
#include "hyperkey/polymatroid.hpp"
#include "hyperkey/properties.hpp"
#include "hyperkey/scheme.hpp"
#include "hyperkey/simkit.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperkey;

namespace {

struct Ledger {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool holds, const std::string& what) {
    if (holds) return;
    if (!ok) notes << "; ";
    notes << what;
    ok = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Ledger&)>& body) {
  Ledger ledger;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(ledger);
  } catch (const std::exception& e) {
    ledger.expect(false, std::string("threw ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!ledger.ok) ++failures;
  std::cout << (ledger.ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  std::cout << " (" << static_cast<long long>(seconds * 1000) << " ms)";
  if (!ledger.ok) std::cout << " -- " << ledger.notes.str();
  std::cout << std::endl;
}

Partition blocks(std::vector<VertexSet> b) { return Partition(std::move(b)); }

std::vector<Hypergraph> random_pool(std::size_t count, std::uint64_t seed, std::size_t max_edges, unsigned max_weight,
                                    bool vary_weight) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + rng() % 7;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(max_edges, n - 1);
    const unsigned w = vary_weight ? 1 + static_cast<unsigned>(rng() % max_weight) : max_weight;
    out.push_back(random_mch({n, k, w, rng()}).hypergraph);
  }
  return out;
}

std::vector<Hypergraph> end_to_end_pool() {
  std::vector<Hypergraph> pool = {fixtures::h1(), fixtures::h2(), fixtures::h3(), fixtures::h5(),
                                  fixtures::path3(), fixtures::single_edge()};
  for (auto& h : random_pool(150, 1010, 5, 2, false)) pool.push_back(std::move(h));
  return pool;
}

}  // namespace

int main() {
  criterion(1, "H1 partition connectivity and fundamental partition", [](Ledger& l) {
    const auto h = fixtures::h1();
    const ConnectivityReport r = partition_connectivity(h);
    l.expect(r.value == 1, "I(H1)=" + to_string(r.value));
    l.expect(r.fundamental == blocks({{"1", "2", "3"}, {"4"}, {"5"}, {"6"}}), "P*=" + to_string(r.fundamental));
    const Hypergraph inner = induced(h, {"1", "2", "3"});
    const ConnectivityReport ri = partition_connectivity(inner);
    l.expect(ri.value == Rational(3, 2), "I(H_123)=" + to_string(ri.value));
    l.expect(ri.fundamental == Partition::singletons(inner.vertices()), "P*(H_123)=" + to_string(ri.fundamental));
    const Partition p = blocks({{"1", "2", "3"}, {"4", "5"}, {"6"}});
    const Rational ratio(static_cast<long long>(crossing_count(h, p)), static_cast<long long>(p.size() - 1));
    l.expect(ratio == Rational(3, 2), "crossing ratio " + to_string(ratio));
  });

  criterion(2, "H1 rate region", [](Ledger& l) {
    const RegionSpec spec = region_spec(fixtures::h1());
    l.expect(spec.key_cap == 1, "key_cap " + to_string(spec.key_cap));
    const std::vector<SubsetConstraint> want = {
        {{"1", "2"}, 1}, {{"1", "3"}, 1}, {{"2", "3"}, 1}, {{"1", "2", "3"}, 2}};
    auto got = spec.constraints;
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
      return std::pair(a.subset.size(), a.subset) < std::pair(b.subset.size(), b.subset);
    });
    l.expect(got == want, std::to_string(got.size()) + " constraints");
  });

  criterion(3, "H1 capacities", [](Ledger& l) {
    const auto h = fixtures::h1();
    l.expect(unconstrained_capacity(h) == 1, "C_S(inf)");
    const std::vector<std::pair<Rational, Rational>> table = {{0, 0}, {1, Rational(1, 2)}, {2, 1}, {5, 1}};
    for (const auto& [r, c] : table)
      l.expect(constrained_capacity(h, r) == c, "C_S(" + to_string(r) + ")=" + to_string(constrained_capacity(h, r)));
    l.expect(communication_complexity(h) == 2, "R_S");
  });

  criterion(4, "H2 hypertree region and component counts", [](Ledger& l) {
    const auto h = fixtures::h2();
    const RegionSpec spec = region_spec(h);
    l.expect(spec.key_cap == 1, "key_cap");
    const std::vector<SubsetConstraint> want = {{{"1"}, 1}, {{"3"}, 1}};
    l.expect(spec.constraints == want, std::to_string(spec.constraints.size()) + " constraints");
    for (const auto& v : h.vertices()) {
      const std::size_t kappa = count_components(remove_vertices(h, {v}));
      l.expect(kappa == ((v == "1" || v == "3") ? 2U : 1U), "kappa(H2/" + v + ")=" + std::to_string(kappa));
    }
  });

  criterion(5, "H3 fundamental partition, restriction degrees, supermodularity", [](Ledger& l) {
    const auto h = fixtures::h3();
    const Partition p = partition_connectivity(h).fundamental;
    l.expect(p == blocks({{"1", "2"}, {"3", "4", "8"}, {"5"}, {"6"}, {"7"}, {"9"}}), "P*=" + to_string(p));
    const Hypergraph r = incident_restriction(h, {"1", "2"});
    const std::map<VertexId, std::size_t> want = {{"1", 2}, {"2", 3}, {"3", 1}, {"5", 1}, {"6", 1}};
    for (const auto& [v, d] : want) l.expect(degree(r, v) == d, "deg " + v);
    l.expect(r.vertices() == VertexSet{"1", "2", "3", "5", "6"}, "restriction vertices");
    auto kappa = [&](const VertexSet& b) { return count_components(remove_vertices(h, b)); };
    const VertexSet s{"3", "4"}, t{"4", "8"}, u{"3", "4", "8"}, i{"4"};
    l.expect(kappa(s) == 2 && kappa(t) == 1 && kappa(u) == 3 && kappa(i) == 1, "kappa values");
    const RankFunction fn(h, {"3", "4", "8"}, 1);
    l.expect(rank(fn, s) + rank(fn, t) <= rank(fn, u) + rank(fn, i), "supermodular instance");
  });

  criterion(6, "H4 tree with loops", [](Ledger& l) {
    const auto h = fixtures::h4();
    l.expect(is_connected(h) && is_cycle_free(h) && has_loop(h), "shape");
    const ConnectivityReport r = partition_connectivity(h);
    l.expect(r.value == 1, "I(H4)");
    l.expect(r.fundamental == Partition::singletons(h.vertices()), "P*");
    l.expect(!is_hypertree(h), "is_hypertree");
  });

  criterion(7, "H5 scheme replay", [](Ledger& l) {
    const auto h = fixtures::h5();
    const DiscussionScheme s = synthesize(h, {{fixtures::h5_block(), {"1", "2", "3", "4", "5"}}}).scheme;
    const std::vector<std::tuple<VertexId, EdgeId, EdgeId>> want = {
        {"2", "e1", "e2"}, {"3", "e2", "e3"}, {"3", "e3", "e4"}, {"4", "e5", "e6"}, {"5", "e4", "e6"}};
    std::vector<std::tuple<VertexId, EdgeId, EdgeId>> got;
    for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
      const auto [x, y] = s.row_edges(r);
      got.emplace_back(s.attribution[r].speaker, x, y);
    }
    l.expect(got == want, "rows");
    l.expect(s.matrix.rank() == 5, "rank A");
    for (std::size_t k = 0; k < s.matrix.cols(); ++k)
      l.expect(s.matrix.with_row(indicator(s.matrix.cols(), k)).rank() == 6, "rank [A;b_" + std::to_string(k) + "]");
    l.expect(verify(s).ok(), "verify");
  });

  criterion(8, "structural identities on 200 random MCHs", [](Ledger& l) {
    const auto pool = random_pool(200, 8, kMaxRandomEdges, 3, true);
    std::size_t checks = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const PropertyReport r = check_structure(pool[i], 1000 + i);
      checks += r.checks;
      for (const auto& f : r.failures) l.expect(false, "case " + std::to_string(i) + " " + f.property + " " + f.detail);
      const Rational brute = oracle::connectivity(pool[i], true).value;
      l.expect(unconstrained_capacity(pool[i]) == brute, "case " + std::to_string(i) + " capacity vs oracle MMI");
    }
    std::cout << "  " << pool.size() << " hypergraphs, " << checks << " checks" << std::endl;
  });

  criterion(9, "census |V|<=5, |E|<=4", [](Ledger& l) {
    const CensusResult c = tree_connectivity_census(5, 4);
    std::cout << "  " << c.hypergraphs << " hypergraphs, " << c.tree_like << " connected and cycle-free" << std::endl;
    l.expect(c.exceptions.empty(), std::to_string(c.exceptions.size()) + " exceptions");
    l.expect(c.tree_like > 0 && c.hypergraphs > c.tree_like, "degenerate census");
  });

  const auto pool = end_to_end_pool();
  std::vector<PropertyReport> reports;
  EndToEndStats stats;
  criterion(10, "end-to-end synthesis, region, outer bound, exhaustive simulation", [&](Ledger& l) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      reports.push_back(check_end_to_end(pool[i], {}, &stats));
      for (const auto& f : reports.back().failures)
        if (f.property != "rank_matches_brute_force")
          l.expect(false, "case " + std::to_string(i) + " " + f.property + " " + f.detail);
    }
    std::cout << "  " << pool.size() << " hypergraphs, " << stats.schemes << " schemes, " << stats.simulations
              << " exhaustive simulations" << std::endl;
    l.expect(stats.skipped_simulations == 0, std::to_string(stats.skipped_simulations) + " simulations above the cap");
  });

  criterion(11, "rank criterion agrees with brute-force secrecy", [&](Ledger& l) {
    l.expect(reports.size() == pool.size(), "criterion 10 did not complete");
    for (std::size_t i = 0; i < reports.size(); ++i)
      for (const auto& f : reports[i].failures)
        if (f.property == "rank_matches_brute_force") l.expect(false, "case " + std::to_string(i) + " " + f.detail);
    // Leaky variants: publishing the key edge itself must fail both tests.
    std::size_t leaky = 0;
    for (const auto& h : pool) {
      const Rational key_rate = unconstrained_capacity(h);
      DiscussionScheme s = synthesize(h).scheme;
      s.matrix = s.matrix.with_row(indicator(s.matrix.cols(), s.edge_index(s.key_edge)));
      if (quantize(h, key_rate).total_bits() > kDefaultStateBitCap) continue;
      const bool by_rank = secrecy_by_rank(s);
      const bool by_count = brute_force_secrecy(h, s, key_rate).perfect;
      l.expect(!by_rank && !by_count, "leaky variant judged secret");
      ++leaky;
    }
    std::cout << "  " << stats.simulations << " agreeing verdicts, " << leaky << " leaky variants rejected" << std::endl;
  });

  return failures == 0 ? 0 : 1;
}
