#include "hyperkey/scheme.hpp"

#include <algorithm>
#include <numeric>

#include "hyperkey/error.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/partitions.hpp"

namespace hyperkey {

std::size_t DiscussionScheme::edge_index(const EdgeId& id) const {
  const auto it = std::find(edge_order.begin(), edge_order.end(), id);
  if (it == edge_order.end()) throw Error(ErrorKind::InvalidHypergraph, "scheme has no edge " + id);
  return static_cast<std::size_t>(it - edge_order.begin());
}

std::pair<EdgeId, EdgeId> DiscussionScheme::row_edges(std::size_t r) const {
  std::vector<EdgeId> hit;
  const BitRow& row = matrix.row(r);
  for (auto c = row.find_first(); c != BitRow::npos; c = row.find_next(c)) hit.push_back(edge_order[c]);
  if (hit.size() != 2) throw Error(ErrorKind::RankDefect, "row " + std::to_string(r) + " is not a pair");
  return {hit[0], hit[1]};
}

namespace {

VertexSet unchecked_representatives(const Hypergraph& restricted, const VertexSet& c) {
  VertexSet reps;
  for (const auto& comp : components(remove_vertices(restricted, c))) reps.insert(*comp.begin());
  return reps;
}

std::vector<VertexSet> classes_for(const Hypergraph& restricted, const VertexSet& reps, const VertexId& i,
                                   const VertexSet& removed) {
  VertexSet shared;
  for (const auto& e : restricted.edges()) {
    if (!e.members.count(i)) continue;
    for (const auto& r : reps)
      if (e.members.count(r)) shared.insert(r);
  }
  std::vector<VertexSet> classes;
  if (shared.empty()) return classes;
  for (const auto& comp : components(remove_vertices(restricted, removed))) {
    VertexSet cls;
    std::set_intersection(comp.begin(), comp.end(), shared.begin(), shared.end(),
                          std::inserter(cls, cls.end()));
    if (!cls.empty()) classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); });
  return classes;
}

const Edge& least_shared_edge(const Hypergraph& restricted, const VertexId& a, const VertexId& b) {
  for (const auto& e : restricted.edges())
    if (e.members.count(a) && e.members.count(b)) return e;
  throw Error(ErrorKind::RankDefect, "representative " + b + " shares no edge with " + a);
}

void require_block(const Partition& fundamental, const VertexSet& c) {
  const auto& blocks = fundamental.blocks();
  if (std::find(blocks.begin(), blocks.end(), c) == blocks.end())
    throw Error(ErrorKind::NotFundamentalBlock, to_string(c) + " is not a block of " + to_string(fundamental));
}

}  // namespace

VertexSet representatives(const Hypergraph& h, const VertexSet& c) {
  require_mch(h);
  require_block(partition_connectivity(h).fundamental, c);
  return unchecked_representatives(incident_restriction(h, c), c);
}

std::vector<VertexSet> shared_representatives(const Hypergraph& h, const VertexSet& c, const VertexId& i,
                                              const VertexSet& removed) {
  if (!c.count(i)) throw Error(ErrorKind::VertexNotInBlock, i + " is not in " + to_string(c));
  const Hypergraph restricted = incident_restriction(h, c);
  return classes_for(restricted, unchecked_representatives(restricted, c), i, removed);
}

SynthesisResult synthesize(const Hypergraph& h, const BlockOrders& orders) {
  require_mch(h);
  const Partition fundamental = partition_connectivity(h).fundamental;
  for (const auto& [block, order] : orders) {
    require_block(fundamental, block);
    if (VertexSet(order.begin(), order.end()) != block || order.size() != block.size())
      throw Error(ErrorKind::InvalidOrder, "order for " + to_string(block) + " is not a permutation of it");
  }

  SynthesisResult out;
  DiscussionScheme& scheme = out.scheme;
  for (const auto& e : h.edges()) scheme.edge_order.push_back(e.id);
  const std::size_t mu = scheme.edge_order.size();
  scheme.matrix = Gf2Matrix(mu);
  scheme.key_edge = scheme.edge_order.front();
  for (const auto& v : h.vertices())
    for (const auto& e : h.edges())
      if (e.members.count(v)) {
        scheme.recovery.emplace(v, e.id);
        break;
      }

  for (const auto& block : fundamental.blocks()) {
    BlockTrace trace;
    trace.block = block;
    if (auto it = orders.find(block); it != orders.end())
      trace.order = it->second;
    else
      trace.order.assign(block.begin(), block.end());
    const Hypergraph restricted = incident_restriction(h, block);
    trace.representatives = unchecked_representatives(restricted, block);

    VertexSet removed;
    for (std::size_t step = 0; step < trace.order.size(); ++step) {
      const VertexId& i = trace.order[step];
      removed.insert(i);
      IterationRecord record;
      record.vertex = i;
      record.classes = classes_for(restricted, trace.representatives, i, removed);
      for (const auto& cls : record.classes) record.shared.insert(cls.begin(), cls.end());
      std::vector<EdgeId> picked;
      for (const auto& cls : record.classes) picked.push_back(least_shared_edge(restricted, i, *cls.begin()).id);
      for (std::size_t k = 0; k + 1 < picked.size(); ++k) {
        record.pairs.emplace_back(picked[k], picked[k + 1]);
        BitRow row(mu);
        row.set(scheme.edge_index(picked[k]));
        row.flip(scheme.edge_index(picked[k + 1]));
        scheme.matrix.append_row(std::move(row));
        scheme.attribution.push_back({i, block, step + 1});
      }
      trace.iterations.push_back(std::move(record));
    }
    out.traces.push_back(std::move(trace));
  }

  const SchemeReport report = verify(scheme);
  if (scheme.matrix.rows() + 1 != mu || !report.ok()) {
    std::string why = "synthesized scheme failed verification";
    for (const auto& f : report.failures) why += "; " + f;
    throw Error(ErrorKind::RankDefect, why);
  }
  return out;
}

SchemeReport verify(const DiscussionScheme& scheme) {
  SchemeReport report;
  const Gf2Matrix& a = scheme.matrix;
  const std::size_t mu = scheme.edge_order.size();
  if (a.cols() != mu) {
    report.rank_ok = report.recovery_ok = report.secrecy_ok = false;
    report.failures.push_back("matrix has " + std::to_string(a.cols()) + " columns for " + std::to_string(mu) +
                              " edges");
    return report;
  }
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.row(r).count() != 2) {
      report.row_weights_ok = false;
      report.failures.push_back("row " + std::to_string(r) + " has weight " + std::to_string(a.row(r).count()));
    }
  report.rank = a.rank();
  if (mu == 0 || report.rank + 1 != mu) {
    report.rank_ok = false;
    report.failures.push_back("rank " + std::to_string(report.rank) + ", expected " +
                              std::to_string(mu == 0 ? 0 : mu - 1));
  }
  for (std::size_t k = 0; k < mu; ++k)
    if (a.with_row(indicator(mu, k)).rank() != mu) {
      report.recovery_ok = false;
      report.failures.push_back("[A; b_" + scheme.edge_order[k] + "] is rank deficient");
    }
  const auto key = std::find(scheme.edge_order.begin(), scheme.edge_order.end(), scheme.key_edge);
  if (key == scheme.edge_order.end()) {
    report.secrecy_ok = false;
    report.failures.push_back("key edge " + scheme.key_edge + " is not a column");
  } else if (a.with_row(indicator(mu, static_cast<std::size_t>(key - scheme.edge_order.begin()))).rank() !=
             report.rank + 1) {
    report.secrecy_ok = false;
    report.failures.push_back("key edge " + scheme.key_edge + " lies in the message span");
  }
  return report;
}

RateTuple rates_of(const DiscussionScheme& scheme, const Rational& key_rate) {
  RateTuple rates;
  rates.key_rate = key_rate;
  for (const auto& [v, pivot] : scheme.recovery) rates.per_user[v] = 0;
  for (const auto& row : scheme.attribution) rates.per_user[row.speaker] += key_rate;
  return rates;
}

CompositeScheme compose_time_shared(const Hypergraph& h, const std::vector<TimeSharingEntry>& plan,
                                    const Rational& key_rate) {
  if (plan.empty()) throw Error(ErrorKind::WeightsNotConvex, "empty time-sharing plan");
  Rational sum = 0;
  BigInt blocklength = 1;
  for (const auto& entry : plan) {
    if (entry.weight <= 0) throw Error(ErrorKind::WeightsNotConvex, "weight " + to_string(entry.weight));
    sum += entry.weight;
    blocklength = lcm(blocklength, denominator_of(entry.weight));
  }
  if (sum != 1) throw Error(ErrorKind::WeightsNotConvex, "weights sum to " + to_string(sum));

  CompositeScheme out;
  out.blocklength = blocklength;
  out.rates.key_rate = key_rate;
  for (const auto& v : h.vertices()) out.rates.per_user[v] = 0;
  for (const auto& entry : plan) {
    DiscussionScheme part = synthesize(h, entry.orders).scheme;
    for (const auto& [v, r] : rates_of(part, key_rate).per_user) out.rates.per_user[v] += entry.weight * r;
    out.parts.emplace_back(numerator_of(entry.weight) * (blocklength / denominator_of(entry.weight)),
                           std::move(part));
  }
  return out;
}

}  // namespace hyperkey
