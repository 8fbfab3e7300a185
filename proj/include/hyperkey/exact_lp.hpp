#pragma once

#include <optional>
#include <vector>

#include "hyperkey/rational.hpp"

namespace hyperkey {

/// Finds x >= 0 with A x = b by a phase-one simplex over exact rationals
/// (Bland's rule, so it terminates). Rows of A with negative b are negated
/// internally. Returns nullopt when the system is infeasible.
std::optional<std::vector<Rational>> find_nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                               const std::vector<Rational>& b);

}  // namespace hyperkey
