#include "hyperkey/simkit.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "hyperkey/error.hpp"

namespace hyperkey {

namespace {

// Refuses blocks that could not be sampled in memory.
constexpr std::size_t kMaxEdgeBits = std::size_t{1} << 26;

std::size_t to_bits(const Rational& value) {
  if (!is_integer(value) || value > static_cast<long long>(kMaxEdgeBits))
    throw Error(ErrorKind::StateSpaceTooLarge, "block length " + to_string(value) + " bits");
  return static_cast<std::size_t>(static_cast<long long>(numerator_of(value)));
}

void require_matching_edges(const Hypergraph& h, const DiscussionScheme& scheme) {
  std::vector<EdgeId> ids;
  for (const auto& e : h.edges()) ids.push_back(e.id);
  if (ids != scheme.edge_order) throw Error(ErrorKind::InvalidHypergraph, "scheme edges differ from hypergraph edges");
}

// Per-vertex recipe for the key: XOR of the messages listed in `messages`,
// plus the vertex's own pivot block when `uses_pivot`.
struct KeyRecipe {
  VertexId vertex;
  std::size_t pivot = 0;
  std::vector<std::size_t> messages;
  bool uses_pivot = false;
};

std::vector<KeyRecipe> key_recipes(const DiscussionScheme& scheme) {
  const std::size_t mu = scheme.edge_order.size();
  const std::size_t key = scheme.edge_index(scheme.key_edge);
  std::vector<KeyRecipe> out;
  for (const auto& [v, pivot_edge] : scheme.recovery) {
    KeyRecipe recipe;
    recipe.vertex = v;
    recipe.pivot = scheme.edge_index(pivot_edge);
    const LinearDecoder decoder(scheme.matrix.with_row(indicator(mu, recipe.pivot)));
    const BitRow& combo = decoder.combination(key);
    for (auto r = combo.find_first(); r != BitRow::npos; r = combo.find_next(r)) {
      if (r == scheme.matrix.rows())
        recipe.uses_pivot = true;
      else
        recipe.messages.push_back(r);
    }
    out.push_back(std::move(recipe));
  }
  return out;
}

std::vector<std::vector<std::size_t>> row_supports(const Gf2Matrix& a) {
  std::vector<std::vector<std::size_t>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (auto c = a.row(r).find_first(); c != BitRow::npos; c = a.row(r).find_next(c)) out[r].push_back(c);
  return out;
}

template <class Value>
Value decode(const KeyRecipe& recipe, const std::vector<Value>& messages, const std::vector<Value>& truncated,
             Value zero) {
  Value out = zero;
  for (std::size_t r : recipe.messages) out ^= messages[r];
  if (recipe.uses_pivot) out ^= truncated[recipe.pivot];
  return out;
}

bool is_power_of_two(std::uint64_t x) { return x && !(x & (x - 1)); }

long long log2_exact(std::uint64_t x) { return std::countr_zero(x); }

}  // namespace

std::size_t Quantization::total_bits() const {
  std::size_t sum = 0;
  for (const auto& [e, bits] : edge_bits) sum += bits;
  return sum;
}

Quantization quantize(const Hypergraph& h, const Rational& key_rate) {
  if (key_rate < 0) throw Error(ErrorKind::NegativeRate, "key rate " + to_string(key_rate));
  if (h.num_edges() == 0) throw Error(ErrorKind::InvalidHypergraph, "no edges to quantize");
  Rational least = h.edges().front().weight;
  BigInt m = denominator_of(key_rate);
  for (const auto& e : h.edges()) {
    least = std::min(least, e.weight);
    m = lcm(m, denominator_of(e.weight));
  }
  if (key_rate > least)
    throw Error(ErrorKind::KeyRateExceedsCapacity, "key rate " + to_string(key_rate) + " exceeds " + to_string(least));
  Quantization q;
  q.scale = m;
  const Rational scale(m);
  for (const auto& e : h.edges()) q.edge_bits[e.id] = to_bits(scale * e.weight);
  q.key_bits = to_bits(scale * key_rate);
  return q;
}

bool secrecy_by_rank(const DiscussionScheme& scheme) {
  const std::size_t mu = scheme.edge_order.size();
  const auto key = std::find(scheme.edge_order.begin(), scheme.edge_order.end(), scheme.key_edge);
  if (key == scheme.edge_order.end() || scheme.matrix.cols() != mu) return false;
  const auto k = static_cast<std::size_t>(key - scheme.edge_order.begin());
  return scheme.matrix.with_row(indicator(mu, k)).rank() == scheme.matrix.rank() + 1;
}

ProtocolRun run(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate, std::uint64_t seed,
                const RunOptions& options) {
  require_matching_edges(h, scheme);
  if (options.require_verified && !verify(scheme).ok())
    throw Error(ErrorKind::SchemeUnverified, "scheme failed verification");
  const Quantization q = quantize(h, key_rate);

  ProtocolRun out;
  out.seed = seed;
  out.scale = q.scale;
  std::mt19937_64 rng(seed);
  std::vector<BitRow> truncated;
  for (const auto& id : scheme.edge_order) {
    BitBlock block{id, BitRow(q.edge_bits.at(id))};
    std::uint64_t draw = 0;
    for (std::size_t j = 0; j < block.bits.size(); ++j) {
      if (j % 64 == 0) draw = rng();
      block.bits[j] = (draw >> (j % 64)) & 1U;
    }
    BitRow head(q.key_bits);
    for (std::size_t j = 0; j < q.key_bits; ++j) head[j] = block.bits[j];
    truncated.push_back(std::move(head));
    out.blocks.push_back(std::move(block));
  }

  const BitRow zero(q.key_bits);
  for (const auto& support : row_supports(scheme.matrix)) {
    BitRow message = zero;
    for (std::size_t c : support) message ^= truncated[c];
    out.messages.push_back(std::move(message));
  }
  out.key = truncated[scheme.edge_index(scheme.key_edge)];
  out.zero_error = true;
  for (const auto& recipe : key_recipes(scheme)) {
    BitRow got = decode(recipe, out.messages, truncated, zero);
    if (got != out.key) out.zero_error = false;
    out.recovered.emplace(recipe.vertex, std::move(got));
  }
  out.secrecy_rank_ok = secrecy_by_rank(scheme);
  return out;
}

ExhaustiveReport exhaustive_check(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate,
                                  std::size_t cap, const RunOptions& options) {
  require_matching_edges(h, scheme);
  if (options.require_verified && !verify(scheme).ok())
    throw Error(ErrorKind::SchemeUnverified, "scheme failed verification");
  const Quantization q = quantize(h, key_rate);
  const std::size_t total = q.total_bits();
  if (total > cap || total >= 63)
    throw Error(ErrorKind::StateSpaceTooLarge,
                std::to_string(total) + " realized bits exceed the cap of " + std::to_string(cap));

  const std::size_t mu = scheme.edge_order.size();
  const std::size_t kb = q.key_bits;
  const std::uint64_t key_mask = (std::uint64_t{1} << kb) - 1;
  std::vector<std::size_t> offset(mu);
  for (std::size_t k = 1; k < mu; ++k) offset[k] = offset[k - 1] + q.edge_bits.at(scheme.edge_order[k - 1]);

  const auto supports = row_supports(scheme.matrix);
  const auto recipes = key_recipes(scheme);
  const std::size_t key = scheme.edge_index(scheme.key_edge);
  const std::size_t cell_bits = (supports.size() + 1) * kb;
  std::vector<std::uint32_t> cells(std::size_t{1} << cell_bits, 0);

  ExhaustiveReport report;
  report.realizations = std::uint64_t{1} << total;
  std::vector<std::uint64_t> truncated(mu), messages(supports.size());
  for (std::uint64_t x = 0; x < report.realizations; ++x) {
    for (std::size_t k = 0; k < mu; ++k) truncated[k] = (x >> offset[k]) & key_mask;
    std::uint64_t f = 0;
    for (std::size_t r = 0; r < supports.size(); ++r) {
      std::uint64_t m = 0;
      for (std::size_t c : supports[r]) m ^= truncated[c];
      messages[r] = m;
      f = (f << kb) | m;
    }
    const std::uint64_t k_value = truncated[key];
    bool ok = true;
    for (const auto& recipe : recipes)
      if (decode<std::uint64_t>(recipe, messages, truncated, 0) != k_value) ok = false;
    if (!ok) {
      ++report.decoding_failures;
      if (!report.first_failure) report.first_failure = x;
    }
    ++cells[(f << kb) | k_value];
  }
  report.zero_error = report.decoding_failures == 0;

  // Cells with the same F are contiguous: index = (F << kb) | K.
  SecrecyReport& s = report.secrecy;
  s.realizations = report.realizations;
  const std::size_t key_space = std::size_t{1} << kb;
  std::vector<std::uint64_t> key_counts(key_space, 0);
  bool conditional_exact = true;
  bool independent = true;
  std::optional<std::uint64_t> shared;
  bool cells_uniform = true;
  Rational conditional = 0;
  for (std::size_t f = 0; f < cells.size() / key_space; ++f) {
    std::uint64_t f_total = 0, support = 0, first = 0;
    bool uniform = true;
    for (std::size_t k = 0; k < key_space; ++k) {
      const std::uint64_t c = cells[f * key_space + k];
      if (!c) continue;
      key_counts[k] += c;
      f_total += c;
      ++support;
      ++s.cells;
      if (!first) first = c;
      if (c != first) uniform = false;
      if (!shared) shared = c;
      if (c != *shared) cells_uniform = false;
    }
    if (!f_total) continue;
    ++s.message_values;
    if (support != key_space || !uniform) independent = false;
    if (uniform && is_power_of_two(support))
      conditional += Rational(static_cast<long long>(f_total), static_cast<long long>(s.realizations)) *
                     log2_exact(support);
    else
      conditional_exact = false;
  }
  if (cells_uniform) s.cell_count = shared;
  std::uint64_t key_first = 0;
  bool key_uniform = true;
  for (std::uint64_t c : key_counts) {
    if (!c) continue;
    ++s.key_values;
    if (!key_first) key_first = c;
    if (c != key_first) key_uniform = false;
  }
  if (key_uniform && is_power_of_two(s.key_values)) s.key_entropy = Rational(log2_exact(s.key_values));
  if (conditional_exact) s.conditional_entropy = conditional;
  s.perfect = independent && key_uniform && s.key_values == key_space;
  return report;
}

SecrecyReport brute_force_secrecy(const Hypergraph& h, const DiscussionScheme& scheme, const Rational& key_rate,
                                  std::size_t cap) {
  return exhaustive_check(h, scheme, key_rate, cap, RunOptions{false}).secrecy;
}

GeneratedMch random_mch(const RandomMchParams& p) {
  if (p.vertices < 2 || p.vertices > kMaxRandomVertices || p.edges < 1 || p.edges > kMaxRandomEdges ||
      p.edges + 1 > p.vertices || p.max_weight < 1)
    throw Error(ErrorKind::InvalidParameters,
                "need 2 <= vertices <= 8, 1 <= edges <= min(6, vertices - 1), max_weight >= 1");
  std::mt19937_64 rng(p.seed);
  auto below = [&rng](std::uint64_t n) { return rng() % n; };

  VertexSet vertices;
  std::vector<VertexId> ids;
  for (std::size_t i = 1; i <= p.vertices; ++i) ids.push_back(std::to_string(i));
  vertices.insert(ids.begin(), ids.end());

  GenerationStats stats;
  while (stats.attempts < p.budget) {
    ++stats.attempts;
    std::vector<Edge> edges;
    VertexSet covered;
    for (std::size_t k = 1; k <= p.edges; ++k) {
      std::vector<VertexId> pool = ids;
      // No edge of a minimally connected hypergraph has more than n - k + 1 members.
      const std::size_t size = 1 + below(p.vertices - p.edges + 1);
      VertexSet members;
      for (std::size_t j = 0; j < size; ++j) {
        const std::size_t pick = below(pool.size());
        members.insert(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      covered.insert(members.begin(), members.end());
      const Rational weight(static_cast<long long>(1 + below(p.max_weight)));
      edges.push_back({"e" + std::to_string(k), std::move(members), weight});
    }
    if (covered.size() != p.vertices) {
      ++stats.rejected_uncovered;
      continue;
    }
    Hypergraph h(vertices, std::move(edges));
    if (!is_connected(h)) {
      ++stats.rejected_disconnected;
      continue;
    }
    if (!is_mch(h)) {
      ++stats.rejected_redundant;
      continue;
    }
    return {std::move(h), stats};
  }
  throw Error(ErrorKind::GenerationBudgetExhausted,
              "no minimally connected hypergraph after " + std::to_string(stats.attempts) + " attempts");
}

}  // namespace hyperkey
