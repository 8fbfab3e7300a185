#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperkey/hypergraph.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/rational.hpp"

namespace hyperkey {

/// Largest ground set the exhaustive routines will enumerate (Bell(12) ~ 4.2M).
inline constexpr std::size_t kDefaultGroundCap = 12;

/// Every partition of a ground set exactly once, in restricted-growth-string
/// order: the one-block partition first, the singleton partition last.
class PartitionStream {
 public:
  PartitionStream(VertexSet ground, bool proper_only, std::size_t cap = kDefaultGroundCap);

  std::optional<Partition> next();

 private:
  std::vector<VertexId> ids_;
  std::vector<std::size_t> labels_;
  bool proper_only_;
  bool started_ = false;
  bool done_ = false;

  bool advance();
};

std::vector<Partition> enumerate_partitions(const VertexSet& ground, bool proper_only,
                                            std::size_t cap = kDefaultGroundCap);

/// Mask-level enumeration over {0..n-1}; blocks are passed sorted by lowest bit.
void for_each_partition_mask(std::size_t n, bool proper_only,
                             const std::function<void(std::span<const std::uint64_t>)>& visit);

/// Number of edges crossing p: sum of block degrees minus |E|.
std::size_t crossing_count(const Hypergraph& h, const Partition& p);

struct ConnectivityReport {
  Rational value;
  std::vector<Partition> optimizers;
  Partition fundamental;
};

/// I(H) with all minimizing partitions and the fundamental partition P*(H).
/// Edge weights are ignored (every edge counts once).
ConnectivityReport partition_connectivity(const Hypergraph& h, std::size_t cap = kDefaultGroundCap);

/// H(Z_B): total weight of the edges meeting b.
Rational entropy(const Hypergraph& h, const VertexSet& b);

/// Weighted multivariate mutual information of the source on h, optionally
/// restricted to the subhypergraph induced by restrict_to.
ConnectivityReport mmi(const Hypergraph& h, const std::optional<VertexSet>& restrict_to = std::nullopt,
                       std::size_t cap = kDefaultGroundCap);

enum class ChainMode {
  AtLeastOne,  // C_i shares an edge with the union of the later blocks
  ExactlyOne,  // C_{i+1} shares exactly one edge with the union of the earlier blocks
};

std::vector<VertexSet> chain_order(const Hypergraph& h, const Partition& p, ChainMode mode);
bool satisfies_chain(const Hypergraph& h, const std::vector<VertexSet>& order, ChainMode mode);

}  // namespace hyperkey
