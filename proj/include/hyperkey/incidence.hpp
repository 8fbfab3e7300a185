#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperkey/hypergraph.hpp"

namespace hyperkey {

/// Bitmask view of a hypergraph with at most 64 vertices. Bit i stands for
/// the i-th vertex in canonical (sorted) order; edge masks follow h.edges().
class IncidenceMasks {
 public:
  explicit IncidenceMasks(const Hypergraph& h);

  std::size_t num_vertices() const noexcept { return ids_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  std::span<const std::uint64_t> edge_masks() const noexcept { return edges_; }
  std::uint64_t full() const noexcept { return full_; }

  std::size_t index_of(const VertexId& v) const;
  std::uint64_t mask_of(const VertexSet& s) const;
  VertexSet set_of(std::uint64_t mask) const;

  /// Number of edges meeting the vertex mask.
  std::size_t degree(std::uint64_t mask) const;
  /// kappa(H/removed), i.e. components of the hypergraph left after removal.
  std::size_t components_without(std::uint64_t removed) const;
  std::vector<std::uint64_t> component_masks_without(std::uint64_t removed) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::uint64_t> edges_;
  std::uint64_t full_ = 0;
};

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }
inline std::uint64_t lowest_bit(std::uint64_t x) { return x & (~x + 1); }

}  // namespace hyperkey
