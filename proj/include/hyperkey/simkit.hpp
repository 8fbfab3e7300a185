#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hyperkey/gf2.hpp"
#include "hyperkey/hypergraph.hpp"
#include "hyperkey/rational.hpp"
#include "hyperkey/scheme.hpp"

namespace hyperkey {

/// Exhaustive enumeration is refused above this many realized bits.
inline constexpr std::size_t kDefaultStateBitCap = 20;

/// Bit lengths after scaling every rate by m.
struct Quantization {
  BigInt scale;                               // m
  std::map<EdgeId, std::size_t> edge_bits;    // m * w(e)
  std::size_t key_bits = 0;                   // m * r_K, also the truncated length

  std::size_t total_bits() const;
};

Quantization quantize(const Hypergraph& h, const Rational& key_rate);

struct BitBlock {
  EdgeId edge;
  BitRow bits;

  friend bool operator==(const BitBlock&, const BitBlock&) = default;
};

struct ProtocolRun {
  std::uint64_t seed = 0;
  BigInt scale;
  std::vector<BitBlock> blocks;               // full edge realizations, in scheme edge order
  std::vector<BitRow> messages;               // one per matrix row
  BitRow key;                                 // leading bits of the key edge
  std::map<VertexId, BitRow> recovered;
  bool zero_error = false;
  bool secrecy_rank_ok = false;
};

struct RunOptions {
  bool require_verified = true;  // false lets broken schemes run, for negative tests
};

/// One sampled realization from std::mt19937_64 seeded with seed.
ProtocolRun run(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate, std::uint64_t seed,
                const RunOptions& options = {});

struct SecrecyReport {
  std::uint64_t realizations = 0;
  std::size_t key_values = 0;       // distinct K
  std::size_t message_values = 0;   // distinct F
  std::size_t cells = 0;            // distinct (F, K)
  std::optional<std::uint64_t> cell_count;  // shared count of every cell, when uniform
  // Exact in bits when every distribution involved is uniform on a
  // power-of-two support; empty otherwise.
  std::optional<Rational> key_entropy;
  std::optional<Rational> conditional_entropy;
  bool perfect = false;  // K uniform on all 2^{m r_K} values and independent of F
};

struct ExhaustiveReport {
  std::uint64_t realizations = 0;
  std::uint64_t decoding_failures = 0;           // realizations where some vertex got the key wrong
  std::optional<std::uint64_t> first_failure;    // edge k fills bits [offset_k, offset_k + len_k)
  bool zero_error = false;
  SecrecyReport secrecy;
};

/// Every realization of every edge block, within cap total bits.
ExhaustiveReport exhaustive_check(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate,
                                  std::size_t cap = kDefaultStateBitCap, const RunOptions& options = {});

SecrecyReport brute_force_secrecy(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate,
                                  std::size_t cap = kDefaultStateBitCap);

/// rank([A; b_key]) == rank(A) + 1.
bool secrecy_by_rank(const DiscussionScheme& scheme);

inline constexpr std::size_t kMaxRandomVertices = 8;
inline constexpr std::size_t kMaxRandomEdges = 6;

struct RandomMchParams {
  std::size_t vertices = 4;
  std::size_t edges = 2;
  unsigned max_weight = 1;
  std::uint64_t seed = 0;
  std::size_t budget = 1'000'000;  // attempts before giving up
};

struct GenerationStats {
  std::size_t attempts = 0;
  std::size_t rejected_uncovered = 0;     // some vertex lies in no edge
  std::size_t rejected_disconnected = 0;
  std::size_t rejected_redundant = 0;     // connected but some edge is not a bridge
};

struct GeneratedMch {
  Hypergraph hypergraph;
  GenerationStats stats;
};

/// Vertices "1".."n", edges "e1".."ek", integer weights in [1, max_weight].
GeneratedMch random_mch(const RandomMchParams& params);

}  // namespace hyperkey
