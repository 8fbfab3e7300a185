#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperkey/rational.hpp"

namespace hyperkey {

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;

class Partition;

struct Edge {
  EdgeId id;
  VertexSet members;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted hypergraph H = (V, E, xi) with edge weights w(e) > 0.
///
/// Immutable value. Edges are kept sorted by id; repeated member sets under
/// distinct ids are allowed. Every operation below returns a new value.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexSet vertices, std::vector<Edge> edges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  bool contains(const VertexId& v) const { return vertices_.count(v) != 0; }
  const Edge& edge(const EdgeId& id) const;

  Hypergraph with_unit_weights() const;
  /// Deletes one edge and keeps every vertex (isolated ones included).
  Hypergraph without_edge(const EdgeId& id) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

std::string to_string(const VertexSet& s);

/// Throws Error(UnknownVertex) unless s is a subset of h's vertices.
void require_subset(const Hypergraph& h, const VertexSet& s);

std::size_t degree(const Hypergraph& h, const VertexSet& c);
std::size_t degree(const Hypergraph& h, const VertexId& v);

/// H/C: drop the vertices of c, intersect member sets, discard emptied edges.
Hypergraph remove_vertices(const Hypergraph& h, const VertexSet& c);
/// H_C = H/(V \ C).
Hypergraph induced(const Hypergraph& h, const VertexSet& c);
/// H[P]: vertices become the blocks of p (labelled by to_string(block)).
Hypergraph merge(const Hypergraph& h, const Partition& p);
/// H_{E_C}: the edges meeting c together with every vertex they cover.
Hypergraph incident_restriction(const Hypergraph& h, const VertexSet& c);

/// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Hypergraph& h);
std::size_t count_components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

struct BergeCycle {
  std::vector<VertexId> vertices;  // v_1 .. v_l with v_1 == v_l
  std::vector<EdgeId> edges;       // e_1 .. e_{l-1}
};

std::optional<BergeCycle> find_berge_cycle(const Hypergraph& h);
bool is_valid_berge_cycle(const Hypergraph& h, const BergeCycle& cycle);

bool has_loop(const Hypergraph& h);
bool is_cycle_free(const Hypergraph& h);
/// Connected and free of Berge cycles; loops are permitted.
bool is_connected_and_cycle_free(const Hypergraph& h);
/// Connected, loopless and free of Berge cycles.
bool is_hypertree(const Hypergraph& h);
/// Connected, and deleting any single edge disconnects it.
bool is_mch(const Hypergraph& h);

}  // namespace hyperkey
