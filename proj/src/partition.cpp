#include "hyperkey/partition.hpp"

#include <algorithm>

#include "hyperkey/error.hpp"

namespace hyperkey {

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  std::size_t total = 0;
  VertexSet seen;
  for (const auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
    total += b.size();
    seen.insert(b.begin(), b.end());
  }
  if (seen.size() != total) throw Error(ErrorKind::InvalidPartition, "overlapping blocks");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); });
}

Partition Partition::singletons(const VertexSet& ground) {
  std::vector<VertexSet> blocks;
  for (const auto& v : ground) blocks.push_back({v});
  return Partition(std::move(blocks));
}

Partition Partition::trivial(const VertexSet& ground) {
  if (ground.empty()) return Partition();
  return Partition({ground});
}

VertexSet Partition::ground() const {
  VertexSet out;
  for (const auto& b : blocks_) out.insert(b.begin(), b.end());
  return out;
}

bool Partition::is_partition_of(const VertexSet& ground) const { return this->ground() == ground; }

bool Partition::is_finer_or_equal(const Partition& other) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const VertexSet& b) {
    return std::any_of(other.blocks_.begin(), other.blocks_.end(), [&](const VertexSet& c) {
      return std::includes(c.begin(), c.end(), b.begin(), b.end());
    });
  });
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) throw Error(ErrorKind::InvalidPartition, "meet of partitions of different sets");
  std::vector<VertexSet> blocks;
  for (const auto& x : a.blocks()) {
    for (const auto& y : b.blocks()) {
      VertexSet common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(common, common.end()));
      if (!common.empty()) blocks.push_back(std::move(common));
    }
  }
  return Partition(std::move(blocks));
}

void require_partition_of(const Partition& p, const VertexSet& ground) {
  if (!p.is_partition_of(ground))
    throw Error(ErrorKind::InvalidPartition, to_string(p) + " does not partition " + to_string(ground));
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.blocks()[i]);
  }
  return out + "}";
}

}  // namespace hyperkey
