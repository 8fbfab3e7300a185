#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperkey/hypergraph.hpp"
#include "hyperkey/simkit.hpp"

namespace hyperkey {

struct PropertyFailure {
  std::string property;
  std::string detail;
};

struct PropertyReport {
  std::size_t checks = 0;
  std::vector<PropertyFailure> failures;

  bool ok() const { return failures.empty(); }
  void expect(bool holds, const std::string& property, const std::string& detail);
  void merge(const PropertyReport& other);
};

/// Structural identities of a minimally connected hypergraph: block degrees
/// against component counts, the merged hypergraph being a hypertree, degree
/// laws of each H_{E_C}, supermodularity of the block rank functions,
/// subadditivity over subset_samples random B, and C_S(infinity) = MMI.
PropertyReport check_structure(const Hypergraph& h, std::uint64_t seed, std::size_t subset_samples = 50);

struct EndToEndOptions {
  std::size_t permutation_block_cap = 4;  // larger blocks use ascending order only
  std::size_t state_bit_cap = kDefaultStateBitCap;
  bool simulate = true;
};

struct EndToEndStats {
  std::size_t schemes = 0;
  std::size_t simulations = 0;
  std::size_t skipped_simulations = 0;  // state space above the cap
};

/// For every per-block order assignment and r_K in {C_S, C_S/2}: the scheme
/// verifies, its rates equal the telescoping points and pass the region and
/// outer-bound checks, and exhaustive simulation shows zero error and perfect
/// secrecy that agrees with the rank criterion.
PropertyReport check_end_to_end(const Hypergraph& h, const EndToEndOptions& options = {},
                                EndToEndStats* stats = nullptr);

struct CensusResult {
  std::size_t hypergraphs = 0;
  std::size_t tree_like = 0;  // connected and cycle-free
  std::vector<Hypergraph> exceptions;
};

/// Every unit-weight hypergraph with 2..max_vertices vertices and up to
/// max_edges edges (one per multiset of nonempty member sets): connected and
/// cycle-free exactly when I(H) = 1 with the singleton fundamental partition.
CensusResult tree_connectivity_census(std::size_t max_vertices, std::size_t max_edges);

}  // namespace hyperkey
