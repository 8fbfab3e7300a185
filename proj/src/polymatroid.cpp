#include "hyperkey/polymatroid.hpp"

#include <algorithm>

#include "hyperkey/error.hpp"
#include "hyperkey/exact_lp.hpp"

namespace hyperkey {

RankFunction::RankFunction(Hypergraph h, VertexSet block, Rational key_rate)
    : h_(std::move(h)), block_(std::move(block)), key_rate_(std::move(key_rate)), masks_(h_) {
  if (block_.empty()) throw Error(ErrorKind::EmptyVertexSet, "rank function on an empty block");
  require_subset(h_, block_);
  if (block_.size() == h_.num_vertices()) throw Error(ErrorKind::EmptyResult, "block covers every vertex");
  if (key_rate_ < 0) throw Error(ErrorKind::NegativeRate, "key rate " + to_string(key_rate_));
}

std::size_t RankFunction::unit_rank(std::uint64_t mask) const { return masks_.components_without(mask) - 1; }

Rational rank(const RankFunction& fn, const VertexSet& b) {
  for (const auto& v : b)
    if (!fn.block().count(v)) throw Error(ErrorKind::SubsetOutsideBlock, "'" + v + "' not in " + to_string(fn.block()));
  return fn.key_rate() * static_cast<long long>(fn.unit_rank(fn.masks().mask_of(b)));
}

namespace {

// Maps the k-bit index space of a block onto vertex masks.
struct BlockSubsets {
  std::vector<std::uint64_t> bits;  // one vertex bit per block element

  explicit BlockSubsets(const RankFunction& fn) {
    for (const auto& v : fn.block()) bits.push_back(std::uint64_t{1} << fn.masks().index_of(v));
  }
  std::size_t count() const { return std::size_t{1} << bits.size(); }
  std::uint64_t mask(std::size_t index) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (index >> i & 1) m |= bits[i];
    return m;
  }
};

void check_block(const RankFunction& fn, std::size_t cap) {
  if (fn.block().size() > cap)
    throw Error(ErrorKind::GroundTooLarge, "block of " + std::to_string(fn.block().size()) + " exceeds cap " +
                                               std::to_string(cap));
}

}  // namespace

ContraPolymatroidReport verify_contra_polymatroid(const RankFunction& fn, std::size_t cap) {
  check_block(fn, cap);
  const BlockSubsets subsets(fn);
  std::vector<Rational> f(subsets.count());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = fn.key_rate() * static_cast<long long>(fn.unit_rank(subsets.mask(i)));

  ContraPolymatroidReport report;
  auto fail = [&](const char* property, std::size_t s, std::size_t t) {
    report.ok = false;
    report.failed_property = property;
    report.s = fn.masks().set_of(subsets.mask(s));
    report.t = fn.masks().set_of(subsets.mask(t));
    return report;
  };
  if (f[0] != 0) return fail("normalized", 0, 0);
  for (std::size_t t = 0; t < f.size(); ++t)
    for (std::size_t s = t;; s = (s - 1) & t) {
      if (f[s] > f[t]) return fail("nondecreasing", s, t);
      if (s == 0) break;
    }
  for (std::size_t s = 0; s < f.size(); ++s)
    for (std::size_t t = s + 1; t < f.size(); ++t)
      if (f[s] + f[t] > f[s | t] + f[s & t]) return fail("supermodular", s, t);
  return report;
}

ExtremePoint telescoping_point(const RankFunction& fn, const std::vector<VertexId>& order) {
  if (VertexSet(order.begin(), order.end()) != fn.block() || order.size() != fn.block().size())
    throw Error(ErrorKind::InvalidOrder, "order is not a permutation of " + to_string(fn.block()));
  ExtremePoint point;
  point.order = order;
  std::uint64_t prefix = 0;
  std::size_t previous = fn.unit_rank(0);
  for (const auto& v : order) {
    prefix |= std::uint64_t{1} << fn.masks().index_of(v);
    const std::size_t current = fn.unit_rank(prefix);
    point.rates[v] = fn.key_rate() * static_cast<long long>(current - previous);
    previous = current;
  }
  return point;
}

std::vector<ExtremePoint> extreme_points(const RankFunction& fn, std::size_t cap) {
  check_block(fn, cap);
  std::vector<VertexId> order(fn.block().begin(), fn.block().end());
  std::vector<ExtremePoint> out;
  do {
    ExtremePoint point = telescoping_point(fn, order);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ExtremePoint& p) { return p.rates == point.rates; });
    if (!seen) out.push_back(std::move(point));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Decomposition decompose(const RankFunction& fn, const std::map<VertexId, Rational>& target, std::size_t cap) {
  check_block(fn, cap);
  for (const auto& [v, r] : target) {
    if (!fn.block().count(v)) throw Error(ErrorKind::SubsetOutsideBlock, "'" + v + "' not in " + to_string(fn.block()));
    if (r < 0) throw Error(ErrorKind::NegativeRate, "target rate of '" + v + "'");
  }
  auto target_of = [&](const VertexId& v) {
    auto it = target.find(v);
    return it == target.end() ? Rational(0) : it->second;
  };

  Decomposition result;
  // Membership first: r(B) >= f(B) for every nonempty B, scanned by size then
  // lexicographically so the reported witness is canonical.
  const BlockSubsets subsets(fn);
  std::vector<std::size_t> indices;
  for (std::size_t i = 1; i < subsets.count(); ++i) indices.push_back(i);
  std::stable_sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    const int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    const std::size_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
  });
  for (std::size_t i : indices) {
    const VertexSet b = fn.masks().set_of(subsets.mask(i));
    Rational sum = 0;
    for (const auto& v : b) sum += target_of(v);
    if (sum < rank(fn, b)) {
      result.violated = b;
      return result;
    }
  }

  // Feasibility: lambda >= 0, sum lambda = 1, sum lambda_j p_j + slack = target.
  const auto points = extreme_points(fn, cap);
  const std::vector<VertexId> ids(fn.block().begin(), fn.block().end());
  const std::size_t n = points.size();
  std::vector<std::vector<Rational>> a(ids.size() + 1, std::vector<Rational>(n + ids.size()));
  std::vector<Rational> b(ids.size() + 1);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = points[j].rates.at(ids[i]);
    a[i][n + i] = 1;
    b[i] = target_of(ids[i]);
  }
  for (std::size_t j = 0; j < n; ++j) a[ids.size()][j] = 1;
  b[ids.size()] = 1;

  const auto solution = find_nonnegative_solution(a, b);
  if (!solution) throw Error(ErrorKind::RankDefect, "point satisfies every rank inequality but no certificate found");
  result.feasible = true;
  for (std::size_t j = 0; j < n; ++j)
    if ((*solution)[j] > 0) result.combination.emplace_back((*solution)[j], points[j]);
  return result;
}

}  // namespace hyperkey
