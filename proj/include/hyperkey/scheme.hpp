#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperkey/capacity.hpp"
#include "hyperkey/gf2.hpp"
#include "hyperkey/hypergraph.hpp"
#include "hyperkey/rational.hpp"

namespace hyperkey {

struct RowAttribution {
  VertexId speaker;
  VertexSet block;
  std::size_t iteration = 0;  // 1-based position of the speaker in the block order

  friend bool operator==(const RowAttribution&, const RowAttribution&) = default;
};

/// Linear non-interactive public discussion F = A x over the truncated edge
/// variables x (one column per edge, in edge_order). Each row XORs two edges.
struct DiscussionScheme {
  std::vector<EdgeId> edge_order;
  Gf2Matrix matrix;
  std::vector<RowAttribution> attribution;
  EdgeId key_edge;
  std::map<VertexId, EdgeId> recovery;  // pivot edge each user stacks onto A

  std::size_t edge_index(const EdgeId& id) const;
  /// The two edge ids XORed by row r.
  std::pair<EdgeId, EdgeId> row_edges(std::size_t r) const;

  friend bool operator==(const DiscussionScheme&, const DiscussionScheme&) = default;
};

struct IterationRecord {
  VertexId vertex;
  VertexSet shared;                 // representatives sharing an edge with vertex
  std::vector<VertexSet> classes;   // their reachability classes after removal
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
};

struct BlockTrace {
  VertexSet block;
  std::vector<VertexId> order;
  VertexSet representatives;
  std::vector<IterationRecord> iterations;
};

/// Per-block vertex order; blocks without an entry use ascending order.
using BlockOrders = std::map<VertexSet, std::vector<VertexId>>;

/// One degree-1 vertex (the least id) per component of H_{E_C} / C.
/// Checks that h is minimally connected and c is a fundamental block.
VertexSet representatives(const Hypergraph& h, const VertexSet& c);

/// Representatives sharing an edge with i in H_{E_C}, grouped by
/// reachability in H_{E_C} / removed.
std::vector<VertexSet> shared_representatives(const Hypergraph& h, const VertexSet& c, const VertexId& i,
                                              const VertexSet& removed);

struct SynthesisResult {
  DiscussionScheme scheme;
  std::vector<BlockTrace> traces;
};

SynthesisResult synthesize(const Hypergraph& h, const BlockOrders& orders = {});

struct SchemeReport {
  bool row_weights_ok = true;
  bool rank_ok = true;
  bool recovery_ok = true;
  bool secrecy_ok = true;
  std::size_t rank = 0;
  std::vector<std::string> failures;

  bool ok() const { return row_weights_ok && rank_ok && recovery_ok && secrecy_ok; }
};

/// Never throws; each failed check is listed in failures.
SchemeReport verify(const DiscussionScheme& scheme);

/// r_i = (rows spoken by i) * r_K.
RateTuple rates_of(const DiscussionScheme& scheme, const Rational& key_rate);

struct TimeSharingEntry {
  Rational weight;
  BlockOrders orders;
};

struct CompositeScheme {
  BigInt blocklength;  // common denominator of the weights
  std::vector<std::pair<BigInt, DiscussionScheme>> parts;  // (repetitions, scheme)
  RateTuple rates;
};

CompositeScheme compose_time_shared(const Hypergraph& h, const std::vector<TimeSharingEntry>& plan,
                                    const Rational& key_rate);

}  // namespace hyperkey
