#include <doctest.h>

#include <functional>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hyperkey/error.hpp"
#include "hyperkey/hgio.hpp"
#include "support/fixtures.hpp"

using namespace hyperkey;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(HYPERKEY_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperkey");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = invoke(args);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
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

}  // namespace

TEST_CASE("file format round trip") {
  for (const auto& h : {fixtures::h1(), fixtures::h2(), fixtures::h3(), fixtures::h4(), fixtures::h5()})
    CHECK(parse_hypergraph(serialize(h)) == h);
  CHECK(load_hypergraph(data("h1.hg")) == fixtures::h1());
  CHECK(load_hypergraph(data("h5.hg")) == fixtures::h5());

  const Hypergraph h = parse_hypergraph("vertices: x y\n\n  # note\nedge e: x y weight 3/2  # trailing\n");
  CHECK(h.edge("e").weight == Rational(3, 2));
  CHECK(parse_hypergraph(serialize(h)) == h);
  CHECK(parse_hypergraph("vertices: x y\nedge e: x y weight 0.25\n").edge("e").weight == Rational(1, 4));
}

TEST_CASE("file format errors") {
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 3 weight 1\n"); }) == ErrorKind::ParseError);
  try {
    parse_hypergraph("vertices: 1 2\nedge a: 1 3 weight 1\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 weight 1\nedge a: 2 weight 1\n"); }) ==
        ErrorKind::DuplicateEdgeId);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 2 weight 0\n"); }) == ErrorKind::NonpositiveWeight);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 2 weight -1\n"); }) == ErrorKind::NonpositiveWeight);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: weight 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedges a: 1 2 weight 1\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1\nvertices: 2\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_hypergraph("vertices: 1 2\nedge a: 1 2 weight 1 extra\n"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { load_hypergraph(data("missing.hg")); }) == ErrorKind::ParseError);
}

TEST_CASE("analyze and capacity") {
  const Json a = invoke_json({"analyze", data("h1.hg")});
  CHECK(a["schema_version"] == cli::kSchemaVersion);
  CHECK(a["command"] == "analyze");
  CHECK(a["is_mch"] == true);
  CHECK(a["is_hypertree"] == false);
  CHECK(a["partition_connectivity"] == "1");

  const Json h4 = invoke_json({"analyze", data("h4.hg")});
  CHECK(h4["is_mch"] == false);
  CHECK(h4["has_loop"] == true);

  const Json c = invoke_json({"capacity", data("h1.hg"), "--total-rate", "1"});
  CHECK(c["unconstrained_capacity"] == "1");
  CHECK(c["communication_complexity"] == "2");
  CHECK(c["constrained_capacity"] == "1/2");

  CHECK(invoke({"capacity", data("h4.hg")}).code == 1);
}

TEST_CASE("region check") {
  const Json in = invoke_json({"check", data("h1.hg"), "--key-rate", "1", "--rates", "1:1,2:1"});
  CHECK(in["in_region"] == true);
  const Json out = invoke_json({"check", data("h1.hg"), "--key-rate", "1", "--rates", "1:1"});
  CHECK(out["in_region"] == false);
  CHECK(out.contains("witness"));
  const Json over = invoke_json({"check", data("h1.hg"), "--key-rate", "2", "--rates", "1:9,2:9,3:9"});
  CHECK(over["in_region"] == false);
  CHECK(over["witness"]["constraint"] == "key_cap");
}

TEST_CASE("scheme and simulate") {
  const Json s = invoke_json({"scheme", data("h5.hg"), "--emit-matrix"});
  CHECK(s["rows"] == 5);
  CHECK(s["rank"] == 5);
  CHECK(s["verified"] == true);
  CHECK(s["key_edge"] == "e1");
  CHECK(s["matrix"].size() == 5);

  const Json back = invoke_json({"scheme", data("h1.hg"), "--order", "1,2,3=3,2,1"});
  CHECK(back["rates"]["1"] == "1");
  CHECK(back["rates"]["3"] == "0");

  const Json sim = invoke_json({"simulate", data("h1.hg")});
  CHECK(sim["mode"] == "exhaustive");
  CHECK(sim["realizations"] == 64);
  CHECK(sim["zero_error"] == true);
  CHECK(sim["perfect_secrecy"] == true);
  CHECK(sim["key_entropy"] == "1");

  const Json sampled = invoke_json({"simulate", data("h3.hg"), "--key-rate", "1/2", "--trials", "5", "--seed", "3"});
  CHECK(sampled["zero_error"] == true);

  CHECK(invoke({"scheme", data("h1.hg"), "--order", "1,2,3=1,2"}).code == 1);
  CHECK(invoke({"simulate", data("h1.hg"), "--key-rate", "5"}).code == 1);
}

TEST_CASE("exit codes and output stability") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"check", data("h1.hg")}).code == 2);
  CHECK(invoke({"analyze", data("missing.hg")}).code == 2);
  CHECK(invoke({"fuzz", "--vertices", "9"}).code == 2);

  const Outcome text = invoke({"capacity", data("h1.hg")});
  CHECK(text.code == 0);
  CHECK(text.out.find("unconstrained_capacity: 1") != std::string::npos);
  CHECK(invoke({"capacity", data("h1.hg")}).out == text.out);

  const Outcome fuzz = invoke({"fuzz", "--vertices", "6", "--edges", "4", "--seed", "5", "--cases", "5", "--json"});
  CHECK(fuzz.code == 0);
  CHECK(Json::parse(fuzz.out)["passed"] == true);
  CHECK(invoke({"fuzz", "--vertices", "6", "--edges", "4", "--seed", "5", "--cases", "5", "--json"}).out == fuzz.out);
}
