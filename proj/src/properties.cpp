#include "hyperkey/properties.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "hyperkey/capacity.hpp"
#include "hyperkey/error.hpp"
#include "hyperkey/incidence.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/partitions.hpp"
#include "hyperkey/polymatroid.hpp"
#include "hyperkey/scheme.hpp"

namespace hyperkey {

void PropertyReport::expect(bool holds, const std::string& property, const std::string& detail) {
  ++checks;
  if (!holds) failures.push_back({property, detail});
}

void PropertyReport::merge(const PropertyReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

void check_incident_restriction(PropertyReport& report, const Hypergraph& h, const VertexSet& c) {
  const Hypergraph restricted = incident_restriction(h, c);
  const std::string where = "C=" + to_string(c);
  report.expect(is_mch(restricted), "restriction_is_mch", where);
  for (const auto& v : restricted.vertices()) {
    const std::size_t d = degree(restricted, v);
    if (!c.count(v))
      report.expect(d == 1, "outside_degree_one", where + " v=" + v + " degree " + std::to_string(d));
    else if (c.size() > 1)
      report.expect(d >= 2, "inside_degree_two", where + " v=" + v + " degree " + std::to_string(d));
  }
  for (const auto& e : restricted.edges()) {
    bool leaf = false, inner = false;
    for (const auto& v : e.members) (degree(restricted, v) == 1 ? leaf : inner) = true;
    report.expect(leaf, "edge_has_leaf", where + " e=" + e.id);
    if (c.size() > 1) report.expect(inner, "edge_has_inner", where + " e=" + e.id);
  }
}

// Odometer over one order per block.
class OrderProduct {
 public:
  OrderProduct(const std::vector<VertexSet>& blocks, std::size_t cap) {
    for (const auto& block : blocks) {
      std::vector<VertexId> order(block.begin(), block.end());
      std::vector<std::vector<VertexId>> choices;
      if (block.size() <= cap) {
        do choices.push_back(order);
        while (std::next_permutation(order.begin(), order.end()));
      } else {
        choices.push_back(order);
      }
      blocks_.push_back(block);
      choices_.push_back(std::move(choices));
    }
    digits_.assign(blocks_.size(), 0);
  }

  BlockOrders current() const {
    BlockOrders out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) out[blocks_[b]] = choices_[b][digits_[b]];
    return out;
  }

  bool advance() {
    for (std::size_t b = 0; b < digits_.size(); ++b) {
      if (++digits_[b] < choices_[b].size()) return true;
      digits_[b] = 0;
    }
    return false;
  }

 private:
  std::vector<VertexSet> blocks_;
  std::vector<std::vector<std::vector<VertexId>>> choices_;
  std::vector<std::size_t> digits_;
};

std::string describe(const BlockOrders& orders) {
  std::string out;
  for (const auto& [block, order] : orders) {
    if (block.size() < 2) continue;
    out += to_string(block) + "=";
    for (std::size_t i = 0; i < order.size(); ++i) out += (i ? "," : "") + order[i];
    out += " ";
  }
  return out.empty() ? "ascending" : out.substr(0, out.size() - 1);
}

// Rows of one block pair up the edges meeting it; they must form a spanning
// tree on those edges.
void check_block_rows(PropertyReport& report, const Hypergraph& h, const DiscussionScheme& scheme,
                      const VertexSet& block, const std::string& where) {
  std::vector<EdgeId> incident;
  for (const auto& e : h.edges())
    if (std::any_of(e.members.begin(), e.members.end(), [&](const VertexId& v) { return block.count(v); }))
      incident.push_back(e.id);
  std::vector<std::size_t> parent(incident.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto slot = [&](const EdgeId& id) -> std::optional<std::size_t> {
    const auto it = std::find(incident.begin(), incident.end(), id);
    if (it == incident.end()) return std::nullopt;
    return static_cast<std::size_t>(it - incident.begin());
  };
  std::size_t rows = 0;
  bool acyclic = true, inside = true;
  for (std::size_t r = 0; r < scheme.matrix.rows(); ++r) {
    if (scheme.attribution[r].block != block) continue;
    ++rows;
    const auto [x, y] = scheme.row_edges(r);
    const auto sx = slot(x), sy = slot(y);
    if (!sx || !sy) {
      inside = false;
      continue;
    }
    const std::size_t a = find(*sx), b = find(*sy);
    if (a == b) acyclic = false;
    parent[a] = b;
  }
  const std::string at = where + " C=" + to_string(block);
  report.expect(inside, "block_rows_use_incident_edges", at);
  report.expect(acyclic, "block_rows_acyclic", at);
  report.expect(incident.empty() || rows + 1 == incident.size(), "block_rows_span",
                at + " rows " + std::to_string(rows) + " over " + std::to_string(incident.size()) + " edges");
}

}  // namespace

PropertyReport check_structure(const Hypergraph& h, std::uint64_t seed, std::size_t subset_samples) {
  PropertyReport report;
  report.expect(is_mch(h), "is_mch", "input is not minimally connected");
  if (!report.ok()) return report;

  const Partition fundamental = partition_connectivity(h).fundamental;
  std::size_t excess = 0;
  for (const auto& c : fundamental.blocks()) {
    const std::size_t kappa = count_components(remove_vertices(h, c));
    const std::size_t d = degree(h, c);
    report.expect(kappa == d, "components_equal_degree",
                  "C=" + to_string(c) + " kappa " + std::to_string(kappa) + " degree " + std::to_string(d));
    excess += d - 1;
    check_incident_restriction(report, h, c);
    if (c.size() <= kVerifyBlockCap) {
      const auto cp = verify_contra_polymatroid(RankFunction(h, c, 1));
      report.expect(cp.ok, "contra_polymatroid", "C=" + to_string(c) + " " + cp.failed_property);
    }
  }
  report.expect(excess + 1 == h.num_edges(), "degree_excess_sum",
                std::to_string(excess) + " vs |E|-1 = " + std::to_string(h.num_edges() - 1));
  report.expect(is_hypertree(merge(h, fundamental)), "merged_is_hypertree", to_string(fundamental));

  const IncidenceMasks masks(h);
  std::vector<std::uint64_t> block_masks;
  for (const auto& c : fundamental.blocks()) block_masks.push_back(masks.mask_of(c));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < subset_samples; ++s) {
    // Nonempty proper subsets only; the whole vertex set has no H/B.
    const std::uint64_t b = 1 + rng() % (masks.full() - 1);
    std::size_t parts = 0;
    for (std::uint64_t c : block_masks)
      if (b & c) parts += masks.components_without(b & c) - 1;
    const std::size_t whole = masks.components_without(b) - 1;
    report.expect(whole <= parts, "subadditive",
                  "B=" + to_string(masks.set_of(b)) + " " + std::to_string(whole) + " > " + std::to_string(parts));
  }

  const Rational cap = unconstrained_capacity(h);
  const Rational info = mmi(h).value;
  report.expect(cap == info, "capacity_equals_mmi", to_string(cap) + " vs " + to_string(info));
  return report;
}

PropertyReport check_end_to_end(const Hypergraph& h, const EndToEndOptions& options, EndToEndStats* stats) {
  PropertyReport report;
  EndToEndStats local;
  EndToEndStats& tally = stats ? *stats : local;
  report.expect(is_mch(h), "is_mch", "input is not minimally connected");
  if (!report.ok()) return report;

  const Partition fundamental = partition_connectivity(h).fundamental;
  const Rational cap = unconstrained_capacity(h);
  const std::vector<Rational> key_rates = {cap, cap / 2};
  OrderProduct product(fundamental.blocks(), options.permutation_block_cap);
  do {
    const BlockOrders orders = product.current();
    const std::string where = describe(orders);
    const DiscussionScheme scheme = synthesize(h, orders).scheme;
    ++tally.schemes;
    const SchemeReport verdict = verify(scheme);
    report.expect(verdict.ok(), "scheme_verifies", where);
    report.expect(scheme.matrix.rows() + 1 == h.num_edges(), "row_count", where);
    report.expect(verdict.rank == scheme.matrix.rows(), "rows_independent", where);
    for (const auto& c : fundamental.blocks()) check_block_rows(report, h, scheme, c, where);
    const bool rank_secret = secrecy_by_rank(scheme);
    report.expect(rank_secret, "secrecy_by_rank", where);

    for (const auto& key_rate : key_rates) {
      const std::string at = where + " r_K=" + to_string(key_rate);
      const RateTuple rates = rates_of(scheme, key_rate);
      for (const auto& c : fundamental.blocks()) {
        const ExtremePoint point = telescoping_point(RankFunction(h, c, key_rate), orders.at(c));
        for (const auto& [v, r] : point.rates)
          report.expect(rates.per_user.at(v) == r, "rates_match_extreme_point",
                        at + " v=" + v + " " + to_string(rates.per_user.at(v)) + " vs " + to_string(r));
      }
      const RegionCheck region = in_region(h, rates);
      report.expect(region.inside, "rates_in_region", at);
      for (const auto& entry : converse_sweep(h, rates))
        report.expect(entry.deficit >= 0, "outer_bound", at + " B=" + to_string(entry.subset));

      if (!options.simulate) continue;
      const Quantization q = quantize(h, key_rate);
      if (q.total_bits() > options.state_bit_cap) {
        ++tally.skipped_simulations;
        continue;
      }
      ++tally.simulations;
      const ExhaustiveReport run = exhaustive_check(h, scheme, key_rate, options.state_bit_cap);
      const Rational key_bits(static_cast<long long>(q.key_bits));
      report.expect(run.zero_error, "zero_error", at);
      report.expect(run.secrecy.perfect, "perfect_secrecy", at);
      report.expect(run.secrecy.key_entropy == key_bits, "key_entropy", at);
      report.expect(run.secrecy.conditional_entropy == key_bits, "conditional_key_entropy", at);
      report.expect(run.secrecy.perfect == rank_secret, "rank_matches_brute_force", at);
    }
  } while (product.advance());
  return report;
}

CensusResult tree_connectivity_census(std::size_t max_vertices, std::size_t max_edges) {
  if (max_vertices > kDefaultGroundCap) throw Error(ErrorKind::GroundTooLarge, "census ground too large");
  CensusResult out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<VertexId> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    const VertexSet vertices(ids.begin(), ids.end());
    const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
    // Nondecreasing sequences of member masks enumerate edge multisets once.
    std::vector<std::uint64_t> chosen;
    std::function<void(std::uint64_t)> extend = [&](std::uint64_t from) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        VertexSet members;
        for (std::size_t i = 0; i < n; ++i)
          if (chosen[k] >> i & 1U) members.insert(ids[i]);
        edges.push_back({"e" + std::to_string(k + 1), std::move(members), Rational(1)});
      }
      const Hypergraph h(vertices, std::move(edges));
      ++out.hypergraphs;
      const bool tree_like = is_connected_and_cycle_free(h);
      const auto report = partition_connectivity(h);
      const bool strength_one = report.value == 1 && report.fundamental == Partition::singletons(vertices);
      if (tree_like) ++out.tree_like;
      if (tree_like != strength_one) out.exceptions.push_back(h);
      if (chosen.size() == max_edges) return;
      for (std::uint64_t m = from; m <= subsets; ++m) {
        chosen.push_back(m);
        extend(m);
        chosen.pop_back();
      }
    };
    extend(1);
  }
  return out;
}

}  // namespace hyperkey
