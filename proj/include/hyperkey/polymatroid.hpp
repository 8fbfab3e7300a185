#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperkey/hypergraph.hpp"
#include "hyperkey/incidence.hpp"
#include "hyperkey/rational.hpp"

namespace hyperkey {

/// f(B) = (kappa(H/B) - 1) r_K on subsets B of one fundamental block C.
class RankFunction {
 public:
  RankFunction(Hypergraph h, VertexSet block, Rational key_rate);

  const Hypergraph& hypergraph() const noexcept { return h_; }
  const VertexSet& block() const noexcept { return block_; }
  const Rational& key_rate() const noexcept { return key_rate_; }

  /// kappa(H/B) - 1 for a vertex mask of the backing hypergraph.
  std::size_t unit_rank(std::uint64_t mask) const;
  const IncidenceMasks& masks() const noexcept { return masks_; }

 private:
  Hypergraph h_;
  VertexSet block_;
  Rational key_rate_;
  IncidenceMasks masks_;
};

/// Throws Error(SubsetOutsideBlock) unless b lies inside the block.
Rational rank(const RankFunction& fn, const VertexSet& b);

struct ContraPolymatroidReport {
  bool ok = true;
  std::string failed_property;  // "normalized", "nondecreasing" or "supermodular"
  std::optional<VertexSet> s;
  std::optional<VertexSet> t;
};

inline constexpr std::size_t kVerifyBlockCap = 10;
inline constexpr std::size_t kPermutationBlockCap = 8;

ContraPolymatroidReport verify_contra_polymatroid(const RankFunction& fn, std::size_t cap = kVerifyBlockCap);

struct ExtremePoint {
  std::vector<VertexId> order;  // first permutation producing this point
  std::map<VertexId, Rational> rates;
};

/// r_{pi_j} = f({pi_1..pi_j}) - f({pi_1..pi_{j-1}}).
ExtremePoint telescoping_point(const RankFunction& fn, const std::vector<VertexId>& order);

/// One telescoping point per permutation of the block, duplicates merged.
std::vector<ExtremePoint> extreme_points(const RankFunction& fn, std::size_t cap = kPermutationBlockCap);

struct Decomposition {
  bool feasible = false;
  std::vector<std::pair<Rational, ExtremePoint>> combination;  // weights sum to 1
  std::optional<VertexSet> violated;                            // when infeasible
};

/// Certificate that target lies in the contra-polymatroid: a convex
/// combination of extreme points dominated componentwise by target.
Decomposition decompose(const RankFunction& fn, const std::map<VertexId, Rational>& target,
                        std::size_t cap = kPermutationBlockCap);

}  // namespace hyperkey
