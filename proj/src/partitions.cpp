#include "hyperkey/partitions.hpp"

#include <algorithm>

#include "hyperkey/error.hpp"
#include "hyperkey/incidence.hpp"

namespace hyperkey {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::GroundTooLarge,
                "ground set of " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
}

// Advances a restricted growth string a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
bool next_rgs(std::vector<std::size_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> prefix_max(n, 0);
  for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], a[i - 1]);
  for (std::size_t i = n; i-- > 1;) {
    if (a[i] <= prefix_max[i]) {
      ++a[i];
      std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
      return true;
    }
  }
  return false;
}

}  // namespace

PartitionStream::PartitionStream(VertexSet ground, bool proper_only, std::size_t cap)
    : ids_(ground.begin(), ground.end()), labels_(ids_.size(), 0), proper_only_(proper_only) {
  if (ids_.empty()) throw Error(ErrorKind::EmptyVertexSet, "partitions of the empty set");
  if (proper_only && ids_.size() < 2) throw Error(ErrorKind::InvalidPartition, "no proper partition of one vertex");
  check_cap(ids_.size(), cap);
}

bool PartitionStream::advance() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!proper_only_) return true;
  }
  if (!next_rgs(labels_)) {
    done_ = true;
    return false;
  }
  return true;
}

std::optional<Partition> PartitionStream::next() {
  if (!advance()) return std::nullopt;
  const std::size_t blocks = *std::max_element(labels_.begin(), labels_.end()) + 1;
  std::vector<VertexSet> out(blocks);
  for (std::size_t i = 0; i < ids_.size(); ++i) out[labels_[i]].insert(ids_[i]);
  return Partition(std::move(out));
}

std::vector<Partition> enumerate_partitions(const VertexSet& ground, bool proper_only, std::size_t cap) {
  PartitionStream stream(ground, proper_only, cap);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

void for_each_partition_mask(std::size_t n, bool proper_only,
                             const std::function<void(std::span<const std::uint64_t>)>& visit) {
  if (n == 0 || n > 64) throw Error(ErrorKind::GroundTooLarge, "mask enumeration needs 1..64 elements");
  std::vector<std::size_t> a(n, 0);
  std::vector<std::uint64_t> blocks(n);
  do {
    const std::size_t count = *std::max_element(a.begin(), a.end()) + 1;
    if (proper_only && count == 1) continue;
    std::fill(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(count), 0);
    for (std::size_t i = 0; i < n; ++i) blocks[a[i]] |= std::uint64_t{1} << i;
    // RGS labels are assigned in order of first appearance, so blocks are
    // already sorted by lowest bit.
    visit(std::span<const std::uint64_t>(blocks.data(), count));
  } while (next_rgs(a));
}

std::size_t crossing_count(const Hypergraph& h, const Partition& p) {
  require_partition_of(p, h.vertices());
  std::size_t total = 0;
  for (const auto& block : p.blocks()) total += degree(h, block);
  return total - h.num_edges();
}

Rational entropy(const Hypergraph& h, const VertexSet& b) {
  require_subset(h, b);
  Rational total = 0;
  for (const auto& e : h.edges())
    if (std::any_of(b.begin(), b.end(), [&](const VertexId& v) { return e.members.count(v) != 0; }))
      total += e.weight;
  return total;
}

namespace {

// Exhaustive minimization of (sum_C f(C) - f(V)) / (|P| - 1) over proper
// partitions, where f(B) is the total (integer-scaled) weight of edges
// meeting B.
class PartitionFunctional {
 public:
  PartitionFunctional(const Hypergraph& h, bool unit_weights) : masks_(h) {
    BigInt scale = 1;
    if (!unit_weights)
      for (const auto& e : h.edges()) scale = lcm(scale, denominator_of(e.weight));
    for (const auto& e : h.edges()) {
      const BigInt w = unit_weights ? BigInt(1) : BigInt(numerator_of(e.weight) * (scale / denominator_of(e.weight)));
      if (w > BigInt(std::int64_t{1} << 40)) throw Error(ErrorKind::GroundTooLarge, "edge weights too fine-grained");
      weights_.push_back(static_cast<std::int64_t>(w));
    }
    scale_ = scale;
    total_ = evaluate_block(masks_.full());
  }

  const IncidenceMasks& masks() const { return masks_; }
  const BigInt& scale() const { return scale_; }

  std::int64_t evaluate_block(std::uint64_t block) const {
    std::int64_t sum = 0;
    const auto edges = masks_.edge_masks();
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (edges[j] & block) sum += weights_[j];
    return sum;
  }

  // Numerator of the partition value (denominator is |P| - 1).
  std::int64_t numerator(std::span<const std::uint64_t> blocks) const {
    std::int64_t sum = -total_;
    for (std::uint64_t b : blocks) sum += evaluate_block(b);
    return sum;
  }

 private:
  IncidenceMasks masks_;
  std::vector<std::int64_t> weights_;
  BigInt scale_;
  std::int64_t total_ = 0;
};

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

int compare(const Fraction& a, const Fraction& b) {
  const __int128 lhs = static_cast<__int128>(a.num) * b.den;
  const __int128 rhs = static_cast<__int128>(b.num) * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::vector<std::uint64_t> mask_meet(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : a)
    for (std::uint64_t y : b)
      if (x & y) out.push_back(x & y);
  std::sort(out.begin(), out.end(), [](std::uint64_t x, std::uint64_t y) { return lowest_bit(x) < lowest_bit(y); });
  return out;
}

Partition to_partition(const IncidenceMasks& masks, std::span<const std::uint64_t> blocks) {
  std::vector<VertexSet> sets;
  sets.reserve(blocks.size());
  for (std::uint64_t b : blocks) sets.push_back(masks.set_of(b));
  return Partition(std::move(sets));
}

// Above this many optimizers the pairwise closure check is skipped and only
// the fold of all meets is verified.
constexpr std::size_t kPairwiseClosureLimit = 400;

ConnectivityReport minimize(const Hypergraph& h, bool unit_weights, std::size_t cap) {
  if (h.num_vertices() < 2) throw Error(ErrorKind::InvalidPartition, "need at least two vertices");
  check_cap(h.num_vertices(), cap);
  const PartitionFunctional functional(h, unit_weights);

  Fraction best{0, 0};
  std::vector<std::vector<std::uint64_t>> optimizers;
  for_each_partition_mask(h.num_vertices(), true, [&](std::span<const std::uint64_t> blocks) {
    const Fraction value{functional.numerator(blocks), static_cast<std::int64_t>(blocks.size()) - 1};
    const int cmp = best.den == 0 ? -1 : compare(value, best);
    if (cmp < 0) {
      best = value;
      optimizers.clear();
    }
    if (cmp <= 0) optimizers.emplace_back(blocks.begin(), blocks.end());
  });

  auto value_of = [&](std::span<const std::uint64_t> blocks) {
    return Fraction{functional.numerator(blocks), static_cast<std::int64_t>(blocks.size()) - 1};
  };
  auto is_optimal = [&](std::span<const std::uint64_t> blocks) {
    return blocks.size() > 1 && compare(value_of(blocks), best) == 0;
  };

  // The optimizers form a lower semi-lattice under refinement; confirm it
  // instead of assuming it, then the meet of all of them is the unique
  // finest optimizer.
  if (optimizers.size() <= kPairwiseClosureLimit) {
    for (std::size_t i = 0; i < optimizers.size(); ++i)
      for (std::size_t j = i + 1; j < optimizers.size(); ++j)
        if (!is_optimal(mask_meet(optimizers[i], optimizers[j])))
          throw Error(ErrorKind::LatticeViolation, "meet of two optimal partitions is not optimal");
  }
  std::vector<std::uint64_t> finest = optimizers.front();
  for (const auto& p : optimizers) finest = mask_meet(finest, p);
  if (!is_optimal(finest)) throw Error(ErrorKind::LatticeViolation, "no unique finest optimal partition");

  ConnectivityReport report;
  report.value = Rational(BigInt(best.num), BigInt(best.den) * functional.scale());
  report.optimizers.reserve(optimizers.size());
  for (const auto& p : optimizers) report.optimizers.push_back(to_partition(functional.masks(), p));
  std::sort(report.optimizers.begin(), report.optimizers.end());
  report.fundamental = to_partition(functional.masks(), finest);
  return report;
}

}  // namespace

ConnectivityReport partition_connectivity(const Hypergraph& h, std::size_t cap) { return minimize(h, true, cap); }

ConnectivityReport mmi(const Hypergraph& h, const std::optional<VertexSet>& restrict_to, std::size_t cap) {
  if (restrict_to) return minimize(induced(h, *restrict_to), false, cap);
  return minimize(h, false, cap);
}

namespace {

std::size_t shared_edges(const Hypergraph& h, const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  for (const auto& e : h.edges()) {
    auto hits = [&](const VertexSet& s) {
      return std::any_of(s.begin(), s.end(), [&](const VertexId& v) { return e.members.count(v) != 0; });
    };
    if (hits(a) && hits(b)) ++count;
  }
  return count;
}

}  // namespace

std::vector<VertexSet> chain_order(const Hypergraph& h, const Partition& p, ChainMode mode) {
  require_partition_of(p, h.vertices());
  const Hypergraph merged = merge(h, p);
  if (!is_connected(merged)) throw Error(ErrorKind::Disconnected, "chain order needs a connected hypergraph");
  if (mode == ChainMode::ExactlyOne && !is_cycle_free(merged))
    throw Error(ErrorKind::NotCycleFree, "exactly-one chain order needs H[P] free of Berge cycles");

  std::vector<VertexSet> remaining = p.blocks();
  std::vector<VertexSet> picked{remaining.front()};
  remaining.erase(remaining.begin());
  VertexSet covered = picked.front();
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](const VertexSet& block) {
      const std::size_t shared = shared_edges(h, block, covered);
      return mode == ChainMode::AtLeastOne ? shared >= 1 : shared == 1;
    });
    if (it == remaining.end())
      throw Error(mode == ChainMode::AtLeastOne ? ErrorKind::Disconnected : ErrorKind::NotCycleFree,
                  "no admissible next block");
    covered.insert(it->begin(), it->end());
    picked.push_back(*it);
    remaining.erase(it);
  }
  // At-least-one orders are built from the back.
  if (mode == ChainMode::AtLeastOne) std::reverse(picked.begin(), picked.end());
  return picked;
}

bool satisfies_chain(const Hypergraph& h, const std::vector<VertexSet>& order, ChainMode mode) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    VertexSet rest;
    if (mode == ChainMode::AtLeastOne) {
      for (std::size_t j = i + 1; j < order.size(); ++j) rest.insert(order[j].begin(), order[j].end());
      if (shared_edges(h, order[i], rest) < 1) return false;
    } else {
      for (std::size_t j = 0; j <= i; ++j) rest.insert(order[j].begin(), order[j].end());
      if (shared_edges(h, order[i + 1], rest) != 1) return false;
    }
  }
  return true;
}

}  // namespace hyperkey
