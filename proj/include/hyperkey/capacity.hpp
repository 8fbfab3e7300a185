#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hyperkey/hypergraph.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/rational.hpp"

namespace hyperkey {

/// Key rate r_K and per-user public discussion rates r_i.
struct RateTuple {
  Rational key_rate;
  std::map<VertexId, Rational> per_user;

  /// r(B); users absent from per_user count as rate 0.
  Rational sum_over(const VertexSet& b) const;
  Rational total() const;

  friend bool operator==(const RateTuple&, const RateTuple&) = default;
};

struct SubsetConstraint {
  VertexSet subset;
  std::size_t coefficient;  // kappa(H/B) - 1, always >= 1

  friend bool operator==(const SubsetConstraint&, const SubsetConstraint&) = default;
};

/// The rate region of a minimally connected hypergraphical source:
/// r_K <= key_cap and r(B) >= coefficient * r_K for every listed B.
struct RegionSpec {
  Rational key_cap;
  std::vector<SubsetConstraint> constraints;
  std::vector<VertexSet> generator_blocks;
};

/// Largest fundamental-partition block whose subsets region_spec enumerates.
inline constexpr std::size_t kDefaultBlockCap = 16;

/// Throws Error(NotMCH) unless is_mch(h).
void require_mch(const Hypergraph& h);

/// C_S(infinity) = min_e w(e).
Rational unconstrained_capacity(const Hypergraph& h);
/// C_S(R) = min{R / (|E| - 1), C_S(infinity)}; a single edge needs no discussion.
Rational constrained_capacity(const Hypergraph& h, const Rational& total_rate);
/// R_S = (|E| - 1) C_S(infinity).
Rational communication_complexity(const Hypergraph& h);

RegionSpec region_spec(const Hypergraph& h, std::size_t block_cap = kDefaultBlockCap);

struct RegionViolation {
  bool key_cap = false;          // r_K exceeded the cap
  std::optional<SubsetConstraint> constraint;
  Rational required;             // cap, or coefficient * r_K
  Rational actual;               // r_K, or r(B)
};

struct RegionCheck {
  bool inside = false;
  std::optional<RegionViolation> witness;
};

RegionCheck in_region(const Hypergraph& h, const RateTuple& rates);
RegionCheck in_region(const RegionSpec& spec, const RateTuple& rates);

/// r(B) - (|P| - 1)(r_K - I_P(Z_{V\B})), the slack in the general outer bound
/// for one choice of (B, P). Nonnegative iff that bound holds.
Rational outer_bound_deficit(const Hypergraph& h, const RateTuple& rates, const VertexSet& b, const Partition& p);

struct DeficitEntry {
  VertexSet subset;
  Partition partition;
  Rational deficit;
};

/// Evaluates the outer bound at every nonempty B inside a fundamental block
/// with kappa(H/B) > 1, taking P = components(H/B).
std::vector<DeficitEntry> converse_sweep(const Hypergraph& h, const RateTuple& rates,
                                         std::size_t block_cap = kDefaultBlockCap);

}  // namespace hyperkey
