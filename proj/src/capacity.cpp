#include "hyperkey/capacity.hpp"

#include <algorithm>

#include "hyperkey/error.hpp"
#include "hyperkey/incidence.hpp"
#include "hyperkey/partitions.hpp"

namespace hyperkey {

Rational RateTuple::sum_over(const VertexSet& b) const {
  Rational sum = 0;
  for (const auto& v : b)
    if (auto it = per_user.find(v); it != per_user.end()) sum += it->second;
  return sum;
}

Rational RateTuple::total() const {
  Rational sum = 0;
  for (const auto& [v, r] : per_user) sum += r;
  return sum;
}

void require_mch(const Hypergraph& h) {
  if (!is_mch(h)) throw Error(ErrorKind::NotMCH, "hypergraph is not minimally connected");
}

Rational unconstrained_capacity(const Hypergraph& h) {
  require_mch(h);
  return std::min_element(h.edges().begin(), h.edges().end(),
                          [](const Edge& a, const Edge& b) { return a.weight < b.weight; })
      ->weight;
}

Rational constrained_capacity(const Hypergraph& h, const Rational& total_rate) {
  if (total_rate < 0) throw Error(ErrorKind::NegativeRate, "total discussion rate " + to_string(total_rate));
  const Rational cap = unconstrained_capacity(h);
  if (h.num_edges() == 1) return cap;
  const Rational limited = total_rate / static_cast<long long>(h.num_edges() - 1);
  return std::min(limited, cap);
}

Rational communication_complexity(const Hypergraph& h) {
  return unconstrained_capacity(h) * static_cast<long long>(h.num_edges() - 1);
}

namespace {

// Nonempty submasks of `block`, ordered by size then lexicographically by
// member ids (bit order equals id order).
std::vector<std::uint64_t> subsets_by_size(std::uint64_t block) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = block; s; s = (s - 1) & block) out.push_back(s);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    // Lexicographic on the sorted member lists: compare lowest differing bit.
    const std::uint64_t diff = a ^ b;
    return (a & lowest_bit(diff)) != 0;
  });
  return out;
}

}  // namespace

RegionSpec region_spec(const Hypergraph& h, std::size_t block_cap) {
  RegionSpec spec;
  spec.key_cap = unconstrained_capacity(h);
  const auto report = partition_connectivity(h);
  const IncidenceMasks masks(h);
  for (const auto& block : report.fundamental.blocks()) {
    if (block.size() > block_cap)
      throw Error(ErrorKind::GroundTooLarge, "fundamental block " + to_string(block) + " exceeds subset cap");
    spec.generator_blocks.push_back(block);
    for (std::uint64_t b : subsets_by_size(masks.mask_of(block))) {
      const std::size_t kappa = masks.components_without(b);
      if (kappa > 1) spec.constraints.push_back({masks.set_of(b), kappa - 1});
    }
  }
  return spec;
}

RegionCheck in_region(const RegionSpec& spec, const RateTuple& rates) {
  if (rates.key_rate > spec.key_cap)
    return {false, RegionViolation{true, std::nullopt, spec.key_cap, rates.key_rate}};
  for (const auto& c : spec.constraints) {
    const Rational required = rates.key_rate * static_cast<long long>(c.coefficient);
    const Rational actual = rates.sum_over(c.subset);
    if (actual < required) return {false, RegionViolation{false, c, required, actual}};
  }
  return {true, std::nullopt};
}

RegionCheck in_region(const Hypergraph& h, const RateTuple& rates) {
  require_mch(h);
  for (const auto& [v, r] : rates.per_user) {
    if (!h.contains(v)) throw Error(ErrorKind::UnknownVertex, "rate for '" + v + "'");
    if (r < 0) throw Error(ErrorKind::NegativeRate, "rate of user '" + v + "'");
  }
  if (rates.key_rate < 0) throw Error(ErrorKind::NegativeRate, "key rate");
  return in_region(region_spec(h), rates);
}

Rational outer_bound_deficit(const Hypergraph& h, const RateTuple& rates, const VertexSet& b, const Partition& p) {
  require_subset(h, b);
  if (b.size() + 1 >= h.num_vertices())
    throw Error(ErrorKind::SubsetTooLarge, "need |B| < |V| - 1, got " + std::to_string(b.size()));
  const Hypergraph rest = remove_vertices(h, b);
  require_partition_of(p, rest.vertices());
  if (p.size() < 2) throw Error(ErrorKind::InvalidPartition, "outer bound needs a proper partition");
  // (|P| - 1) I_P = sum_C H(Z_C) - H(Z_{V\B}).
  Rational scaled_info = -entropy(rest, rest.vertices());
  for (const auto& block : p.blocks()) scaled_info += entropy(rest, block);
  const long long parts_minus_one = static_cast<long long>(p.size()) - 1;
  return rates.sum_over(b) - (rates.key_rate * parts_minus_one - scaled_info);
}

std::vector<DeficitEntry> converse_sweep(const Hypergraph& h, const RateTuple& rates, std::size_t block_cap) {
  require_mch(h);
  const auto report = partition_connectivity(h);
  const IncidenceMasks masks(h);
  std::vector<DeficitEntry> out;
  for (const auto& block : report.fundamental.blocks()) {
    if (block.size() > block_cap)
      throw Error(ErrorKind::GroundTooLarge, "fundamental block " + to_string(block) + " exceeds subset cap");
    for (std::uint64_t mask : subsets_by_size(masks.mask_of(block))) {
      const VertexSet b = masks.set_of(mask);
      if (b.size() + 1 >= h.num_vertices()) continue;
      const auto parts = masks.component_masks_without(mask);
      if (parts.size() < 2) continue;
      std::vector<VertexSet> blocks;
      for (std::uint64_t part : parts) blocks.push_back(masks.set_of(part));
      Partition p(std::move(blocks));
      Rational deficit = outer_bound_deficit(h, rates, b, p);
      out.push_back({b, std::move(p), std::move(deficit)});
    }
  }
  return out;
}

}  // namespace hyperkey
