#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

#include "hyperkey/error.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/partitions.hpp"
#include "hyperkey/polymatroid.hpp"
#include "hyperkey/scheme.hpp"
#include "hyperkey/simkit.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperkey;

namespace {

using RowList = std::vector<std::tuple<EdgeId, EdgeId, VertexId>>;

RowList rows(const DiscussionScheme& s) {
  RowList out;
  for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
    const auto [x, y] = s.row_edges(r);
    out.emplace_back(x, y, s.attribution[r].speaker);
  }
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidHypergraph;
}

const VertexSet kH1Block{"1", "2", "3"};

Gf2Matrix matrix(std::size_t cols, const std::vector<std::vector<std::size_t>>& supports) {
  Gf2Matrix m(cols);
  for (const auto& s : supports) {
    BitRow row(cols);
    for (std::size_t c : s) row.set(c);
    m.append_row(row);
  }
  return m;
}

}  // namespace

TEST_CASE("representatives") {
  CHECK(representatives(fixtures::h5(), fixtures::h5_block()) ==
        VertexSet{"v1", "v2", "v3", "v4", "v5", "v6"});
  CHECK(representatives(fixtures::h1(), {"4"}) == VertexSet{"1"});
  CHECK(representatives(fixtures::h2(), {"3"}) == VertexSet{"1", "4"});
  CHECK(kind_of([] { representatives(fixtures::h4(), {"1"}); }) == ErrorKind::NotMCH);
  CHECK(kind_of([] { representatives(fixtures::h1(), {"1", "2"}); }) == ErrorKind::NotFundamentalBlock);
}

TEST_CASE("shared representatives") {
  const auto h5 = fixtures::h5();
  const auto c = fixtures::h5_block();
  CHECK(shared_representatives(h5, c, "1", {"1"}) == std::vector<VertexSet>{{"v1", "v3"}});
  CHECK(shared_representatives(h5, c, "3", {"1", "2", "3"}) ==
        std::vector<VertexSet>{{"v2"}, {"v3"}, {"v4", "v5"}});
  CHECK(shared_representatives(h5, c, "2", {"1", "2"}) == std::vector<VertexSet>{{"v1"}, {"v2"}});
  CHECK(kind_of([&] { shared_representatives(h5, c, "v1", {}); }) == ErrorKind::VertexNotInBlock);
}

TEST_CASE("synthesis replays the five-vertex example") {
  const BlockOrders orders{{fixtures::h5_block(), {"1", "2", "3", "4", "5"}}};
  const SynthesisResult result = synthesize(fixtures::h5(), orders);
  const RowList want = {{"e1", "e2", "2"}, {"e2", "e3", "3"}, {"e3", "e4", "3"}, {"e5", "e6", "4"}, {"e4", "e6", "5"}};
  CHECK(rows(result.scheme) == want);
  CHECK(result.scheme.key_edge == "e1");
  const BlockTrace& trace = result.traces.front();
  CHECK(trace.block == fixtures::h5_block());
  REQUIRE(trace.iterations.size() == 5);
  CHECK(trace.iterations[0].pairs.empty());
  CHECK(trace.iterations[0].classes == std::vector<VertexSet>{{"v1", "v3"}});
  CHECK(trace.iterations[2].shared == VertexSet{"v2", "v3", "v4", "v5"});
  for (std::size_t t = 1; t < result.traces.size(); ++t) {
    CHECK(result.traces[t].block.size() == 1);
    for (const auto& it : result.traces[t].iterations) CHECK(it.pairs.empty());
  }
}

TEST_CASE("synthesis on the three-edge example") {
  const auto h1 = fixtures::h1();
  const RowList forward = {{"a", "b", "2"}, {"b", "c", "3"}};
  CHECK(rows(synthesize(h1).scheme) == forward);
  CHECK(rows(synthesize(h1, {{kH1Block, {"1", "2", "3"}}}).scheme) == forward);
  const RowList backward = {{"a", "b", "2"}, {"a", "c", "1"}};
  CHECK(rows(synthesize(h1, {{kH1Block, {"3", "2", "1"}}}).scheme) == backward);

  const auto single = synthesize(fixtures::single_edge()).scheme;
  CHECK(single.matrix.rows() == 0);
  CHECK(verify(single).ok());

  CHECK(kind_of([&] { synthesize(fixtures::h4()); }) == ErrorKind::NotMCH);
  CHECK(kind_of([&] { synthesize(h1, {{kH1Block, {"1", "2"}}}); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([&] { synthesize(h1, {{kH1Block, {"1", "1", "2"}}}); }) == ErrorKind::InvalidOrder);
  CHECK(kind_of([&] { synthesize(h1, {{{"1", "2"}, {"1", "2"}}}); }) == ErrorKind::NotFundamentalBlock);
}

TEST_CASE("verify") {
  const DiscussionScheme s = synthesize(fixtures::h1()).scheme;
  CHECK(s.matrix == matrix(3, {{0, 1}, {1, 2}}));
  const SchemeReport report = verify(s);
  CHECK(report.ok());
  CHECK(report.rank == 2);
  CHECK(oracle::span_rank(oracle::rows_of(s.matrix)) == 2);
  for (std::size_t k = 0; k < 3; ++k) CHECK(oracle::span_rank(oracle::rows_of(s.matrix.with_row(indicator(3, k)))) == 3);

  DiscussionScheme empty;
  empty.edge_order = {"a"};
  empty.matrix = Gf2Matrix(1);
  empty.key_edge = "a";
  empty.recovery = {{"1", "a"}, {"2", "a"}};
  CHECK(verify(empty).ok());

  DiscussionScheme dup = s;
  dup.matrix = s.matrix.without_row(1).with_row(s.matrix.row(0));
  const SchemeReport bad = verify(dup);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.rank_ok);
  CHECK_FALSE(bad.failures.empty());

  DiscussionScheme heavy = s;
  heavy.matrix = matrix(3, {{0, 1, 2}, {1, 2}});
  CHECK_FALSE(verify(heavy).row_weights_ok);

  DiscussionScheme leak = s;
  leak.matrix = s.matrix.with_row(indicator(3, 0));
  CHECK_FALSE(verify(leak).secrecy_ok);
}

TEST_CASE("rates of a scheme") {
  const DiscussionScheme s = synthesize(fixtures::h1()).scheme;
  const RateTuple r = rates_of(s, 1);
  const std::map<VertexId, Rational> want{{"1", 0}, {"2", 1}, {"3", 1}, {"4", 0}, {"5", 0}, {"6", 0}};
  CHECK(r.per_user == want);
  CHECK(r.total() == 2);
  CHECK(r.total() == communication_complexity(fixtures::h1()));
  for (const auto& [v, x] : rates_of(s, 0).per_user) CHECK(x == 0);

  const RateTuple r2 = rates_of(synthesize(fixtures::h2()).scheme, 1);
  const std::map<VertexId, Rational> want2{{"1", 1}, {"2", 0}, {"3", 1}, {"4", 0}, {"5", 0}};
  CHECK(r2.per_user == want2);
}

TEST_CASE("time sharing") {
  const auto h1 = fixtures::h1();
  const CompositeScheme one = compose_time_shared(h1, {{1, {}}}, 1);
  CHECK(one.blocklength == 1);
  REQUIRE(one.parts.size() == 1);
  CHECK(one.parts[0].second == synthesize(h1).scheme);
  CHECK(one.rates == rates_of(synthesize(h1).scheme, 1));

  const CompositeScheme half = compose_time_shared(
      h1, {{Rational(1, 2), {{kH1Block, {"1", "2", "3"}}}}, {Rational(1, 2), {{kH1Block, {"3", "2", "1"}}}}}, 1);
  CHECK(half.blocklength == 2);
  CHECK(half.rates.per_user.at("1") == Rational(1, 2));
  CHECK(half.rates.per_user.at("2") == 1);
  CHECK(half.rates.per_user.at("3") == Rational(1, 2));
  CHECK(half.rates.per_user.at("4") == 0);

  const CompositeScheme thirds = compose_time_shared(
      h1, {{Rational(2, 3), {{kH1Block, {"1", "2", "3"}}}}, {Rational(1, 3), {{kH1Block, {"3", "2", "1"}}}}}, 1);
  CHECK(thirds.blocklength == 3);
  CHECK(thirds.parts[0].first == 2);
  CHECK(thirds.parts[1].first == 1);
  CHECK(thirds.rates.per_user.at("1") == Rational(1, 3));
  CHECK(thirds.rates.per_user.at("3") == Rational(2, 3));
  CHECK(thirds.rates.total() == 2);

  CHECK(kind_of([&] { compose_time_shared(h1, {{Rational(1, 2), {}}}, 1); }) == ErrorKind::WeightsNotConvex);
  CHECK(kind_of([&] { compose_time_shared(h1, {{2, {}}, {-1, {}}}, 1); }) == ErrorKind::WeightsNotConvex);
  CHECK(kind_of([&] { compose_time_shared(h1, {}, 1); }) == ErrorKind::WeightsNotConvex);
}

TEST_CASE("every order assignment yields a valid, independent discussion") {
  std::vector<Hypergraph> pool = {fixtures::h1(), fixtures::h2(), fixtures::h3(), fixtures::path3()};
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng() % 7;
    pool.push_back(random_mch({n, 1 + rng() % std::min<std::size_t>(6, n - 1), 2, rng()}).hypergraph);
  }
  for (const auto& h : pool) {
    const Partition fundamental = partition_connectivity(h).fundamental;
    // Try every permutation of the first block of size 2..4 with the rest ascending.
    std::optional<VertexSet> varied;
    for (const auto& b : fundamental.blocks())
      if (b.size() >= 2 && b.size() <= 4) varied = b;
    std::vector<VertexId> order;
    if (varied) order.assign(varied->begin(), varied->end());
    do {
      BlockOrders orders;
      if (varied) orders[*varied] = order;
      const SynthesisResult result = synthesize(h, orders);
      const DiscussionScheme& s = result.scheme;
      CHECK(s.matrix.rows() + 1 == h.num_edges());
      CHECK(verify(s).ok());
      CHECK(oracle::span_rank(oracle::rows_of(s.matrix)) == s.matrix.rows());
      CHECK(oracle::recoverable(s));
      CHECK(oracle::key_independent_of_messages(s));
      for (const auto& trace : result.traces) {
        std::size_t pairs = 0;
        for (const auto& it : trace.iterations) {
          CHECK(it.pairs.size() + 1 == std::max<std::size_t>(it.classes.size(), 1));
          pairs += it.pairs.size();
        }
        CHECK(pairs + 1 == oracle::components(h, trace.block).size());
        const ExtremePoint point = telescoping_point(RankFunction(h, trace.block, 1), trace.order);
        const RateTuple rates = rates_of(s, 1);
        for (const auto& [v, r] : point.rates) CHECK(rates.per_user.at(v) == r);
      }
    } while (varied && std::next_permutation(order.begin(), order.end()));
  }
}
