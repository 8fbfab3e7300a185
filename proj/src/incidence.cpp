#include "hyperkey/incidence.hpp"

#include <algorithm>

#include "hyperkey/error.hpp"

namespace hyperkey {

IncidenceMasks::IncidenceMasks(const Hypergraph& h) : ids_(h.vertices().begin(), h.vertices().end()) {
  if (ids_.size() > 64) throw Error(ErrorKind::GroundTooLarge, "bitmask view supports at most 64 vertices");
  full_ = ids_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ids_.size()) - 1;
  edges_.reserve(h.num_edges());
  for (const auto& e : h.edges()) edges_.push_back(mask_of(e.members));
}

std::size_t IncidenceMasks::index_of(const VertexId& v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) throw Error(ErrorKind::UnknownVertex, "'" + v + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

std::uint64_t IncidenceMasks::mask_of(const VertexSet& s) const {
  std::uint64_t mask = 0;
  for (const auto& v : s) mask |= std::uint64_t{1} << index_of(v);
  return mask;
}

VertexSet IncidenceMasks::set_of(std::uint64_t mask) const {
  VertexSet out;
  for (std::size_t i = 0; i < ids_.size(); ++i)
    if (mask >> i & 1) out.insert(ids_[i]);
  return out;
}

std::size_t IncidenceMasks::degree(std::uint64_t mask) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & mask) != 0; }));
}

std::vector<std::uint64_t> IncidenceMasks::component_masks_without(std::uint64_t removed) const {
  std::vector<std::uint64_t> out;
  std::uint64_t left = full_ & ~removed;
  while (left) {
    std::uint64_t comp = lowest_bit(left);
    for (bool grew = true; grew;) {
      grew = false;
      for (std::uint64_t e : edges_) {
        const std::uint64_t part = e & ~removed;
        if ((part & comp) && (part & ~comp)) {
          comp |= part;
          grew = true;
        }
      }
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::size_t IncidenceMasks::components_without(std::uint64_t removed) const {
  return component_masks_without(removed).size();
}

}  // namespace hyperkey
