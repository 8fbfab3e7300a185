#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperkey/hypergraph.hpp"

namespace hyperkey {

/// Disjoint nonempty blocks. Canonical form: blocks sorted by least member.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(InvalidPartition) on empty or overlapping blocks.
  explicit Partition(std::vector<VertexSet> blocks);

  static Partition singletons(const VertexSet& ground);
  static Partition trivial(const VertexSet& ground);

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  VertexSet ground() const;

  bool is_partition_of(const VertexSet& ground) const;
  /// Refinement order: every block of *this lies inside a block of other.
  bool is_finer_or_equal(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) { return a.blocks_ < b.blocks_; }

 private:
  std::vector<VertexSet> blocks_;
};

/// Common refinement: all nonempty pairwise block intersections.
Partition meet(const Partition& a, const Partition& b);

/// Throws Error(InvalidPartition) unless p partitions ground.
void require_partition_of(const Partition& p, const VertexSet& ground);

std::string to_string(const Partition& p);

}  // namespace hyperkey
