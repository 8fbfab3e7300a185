#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <random>

#include "hyperkey/capacity.hpp"
#include "hyperkey/error.hpp"
#include "hyperkey/hgio.hpp"
#include "hyperkey/partition.hpp"
#include "hyperkey/partitions.hpp"
#include "hyperkey/properties.hpp"
#include "hyperkey/scheme.hpp"
#include "hyperkey/simkit.hpp"

namespace hyperkey::cli {

namespace {

using Json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw UsageError(flag + ": not a rational number: '" + text + "'");
  }
}

Json set_json(const VertexSet& s) { return to_string(s); }

Json rates_json(const RateTuple& rates) {
  Json users = Json::object();
  for (const auto& [v, r] : rates.per_user) users[v] = to_string(r);
  return users;
}

// Canonical text form: dotted keys in sorted order, scalar arrays as
// indented "- item" lines.
void render_text(const Json& node, const std::string& key, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) render_text(v, key.empty() ? k : key + "." + k, out);
    return;
  }
  if (node.is_array()) {
    if (node.empty()) {
      out << key << ": []\n";
      return;
    }
    const bool scalars = std::none_of(node.begin(), node.end(), [](const Json& j) { return j.is_structured(); });
    if (scalars) {
      out << key << ":\n";
      for (const auto& item : node) out << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) render_text(node[i], key + "." + std::to_string(i), out);
    }
    return;
  }
  out << key << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
}

BlockOrders parse_orders(const std::vector<std::string>& specs) {
  BlockOrders orders;
  for (const auto& spec : specs) {
    const auto sides = split(spec, '=');
    if (sides.size() != 2 || sides[0].empty() || sides[1].empty())
      throw UsageError("--order expects BLOCK=perm, e.g. 1,2,3=3,1,2; got '" + spec + "'");
    const auto members = split(sides[0], ',');
    const VertexSet block(members.begin(), members.end());
    if (orders.count(block)) throw UsageError("--order given twice for " + to_string(block));
    orders[block] = split(sides[1], ',');
  }
  return orders;
}

RateTuple parse_rates(const Hypergraph& h, const Rational& key_rate, const std::string& spec) {
  RateTuple rates;
  rates.key_rate = key_rate;
  for (const auto& v : h.vertices()) rates.per_user[v] = 0;
  if (spec.empty()) return rates;
  for (const auto& item : split(spec, ',')) {
    const auto at = item.rfind(':');
    if (at == std::string::npos || at == 0) throw UsageError("--rates expects user:rate pairs; got '" + item + "'");
    const std::string user = item.substr(0, at);
    if (!h.contains(user)) throw Error(ErrorKind::UnknownVertex, "rate given for unknown user " + user);
    rates.per_user[user] = parse_flag_rational("--rates", item.substr(at + 1));
  }
  return rates;
}

Rational key_rate_or_capacity(const Hypergraph& h, const std::string& text) {
  const Rational cap = unconstrained_capacity(h);
  if (text.empty()) return cap;
  const Rational r = parse_flag_rational("--key-rate", text);
  if (r < 0) throw Error(ErrorKind::NegativeRate, "key rate " + to_string(r));
  if (r > cap) throw Error(ErrorKind::KeyRateExceedsCapacity, "key rate " + text + " exceeds C_S = " + to_string(cap));
  return r;
}

Json analyze(const Hypergraph& h) {
  Json out;
  out["vertices"] = h.num_vertices();
  out["edges"] = h.num_edges();
  out["components"] = count_components(h);
  out["connected"] = is_connected(h);
  out["has_loop"] = has_loop(h);
  out["cycle_free"] = is_cycle_free(h);
  out["is_hypertree"] = is_hypertree(h);
  out["is_mch"] = is_mch(h);
  if (auto cycle = find_berge_cycle(h)) {
    std::string text;
    for (std::size_t i = 0; i < cycle->edges.size(); ++i) text += cycle->vertices[i] + " " + cycle->edges[i] + " ";
    out["berge_cycle"] = text + cycle->vertices.back();
  }
  if (h.num_vertices() >= 2) {
    const auto unit = partition_connectivity(h);
    out["partition_connectivity"] = to_string(unit.value);
    out["fundamental_partition"] = to_string(unit.fundamental);
    out["optimal_partitions"] = unit.optimizers.size();
    const auto weighted = mmi(h);
    out["mmi"] = to_string(weighted.value);
    out["mmi_fundamental_partition"] = to_string(weighted.fundamental);
  }
  return out;
}

Json capacity(const Hypergraph& h, const std::string& total_rate) {
  Json out;
  out["unconstrained_capacity"] = to_string(unconstrained_capacity(h));
  out["communication_complexity"] = to_string(communication_complexity(h));
  if (!total_rate.empty()) {
    const Rational r = parse_flag_rational("--total-rate", total_rate);
    out["total_rate"] = to_string(r);
    out["constrained_capacity"] = to_string(constrained_capacity(h, r));
  }
  return out;
}

Json region(const Hypergraph& h) {
  const RegionSpec spec = region_spec(h);
  Json out;
  out["key_cap"] = to_string(spec.key_cap);
  Json constraints = Json::array();
  for (const auto& c : spec.constraints)
    constraints.push_back("r" + to_string(c.subset) + " >= " + std::to_string(c.coefficient) + " r_K");
  out["constraints"] = constraints;
  Json blocks = Json::array();
  for (const auto& b : spec.generator_blocks) blocks.push_back(set_json(b));
  out["fundamental_blocks"] = blocks;
  return out;
}

Json check(const Hypergraph& h, const std::string& key_rate, const std::string& rates_spec) {
  const RateTuple rates = parse_rates(h, parse_flag_rational("--key-rate", key_rate), rates_spec);
  const RegionCheck verdict = in_region(h, rates);
  Json out;
  out["key_rate"] = to_string(rates.key_rate);
  out["rates"] = rates_json(rates);
  out["in_region"] = verdict.inside;
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    Json witness;
    witness["constraint"] = w.key_cap ? std::string("key_cap") : "r" + to_string(w.constraint->subset);
    witness["required"] = to_string(w.required);
    witness["actual"] = to_string(w.actual);
    out["witness"] = witness;
  }
  return out;
}

Json scheme(const Hypergraph& h, const std::string& key_rate_text, const BlockOrders& orders, bool emit_matrix) {
  const Rational key_rate = key_rate_or_capacity(h, key_rate_text);
  const SynthesisResult result = synthesize(h, orders);
  const DiscussionScheme& s = result.scheme;
  const SchemeReport report = verify(s);
  Json out;
  out["key_rate"] = to_string(key_rate);
  out["key_edge"] = s.key_edge;
  out["edge_order"] = s.edge_order;
  out["rows"] = s.matrix.rows();
  out["rank"] = report.rank;
  out["verified"] = report.ok();
  out["failures"] = report.failures;
  out["secrecy_by_rank"] = secrecy_by_rank(s);
  out["rates"] = rates_json(rates_of(s, key_rate));
  out["total_rate"] = to_string(rates_of(s, key_rate).total());
  Json recovery = Json::object();
  for (const auto& [v, e] : s.recovery) recovery[v] = e;
  out["recovery"] = recovery;
  Json blocks = Json::array();
  for (const auto& trace : result.traces) {
    Json b;
    b["block"] = set_json(trace.block);
    b["order"] = trace.order;
    b["representatives"] = set_json(trace.representatives);
    blocks.push_back(b);
  }
  out["blocks"] = blocks;
  if (emit_matrix) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
      const auto [x, y] = s.row_edges(r);
      rows.push_back(x + "^" + y + " @user=" + s.attribution[r].speaker);
    }
    out["matrix"] = rows;
  }
  return out;
}

std::string bits_text(const BitRow& bits) {
  std::string out;
  for (std::size_t j = 0; j < bits.size(); ++j) out += bits[j] ? '1' : '0';
  return out;
}

Json simulate(const Hypergraph& h, const std::string& key_rate_text, const BlockOrders& orders, std::uint64_t seed,
              bool exhaustive, std::size_t trials) {
  const Rational key_rate = key_rate_or_capacity(h, key_rate_text);
  const DiscussionScheme s = synthesize(h, orders).scheme;
  const Quantization q = quantize(h, key_rate);
  Json out;
  out["key_rate"] = to_string(key_rate);
  out["scale"] = q.scale.str();
  out["key_bits"] = q.key_bits;
  out["total_bits"] = q.total_bits();
  out["seed"] = seed;
  out["secrecy_by_rank"] = secrecy_by_rank(s);
  if (exhaustive || q.total_bits() <= kDefaultStateBitCap) {
    const ExhaustiveReport report = exhaustive_check(h, s, key_rate);
    out["mode"] = "exhaustive";
    out["realizations"] = report.realizations;
    out["decoding_failures"] = report.decoding_failures;
    out["zero_error"] = report.zero_error;
    const SecrecyReport& sec = report.secrecy;
    out["perfect_secrecy"] = sec.perfect;
    out["key_entropy"] = sec.key_entropy ? to_string(*sec.key_entropy) : "not exact";
    out["conditional_key_entropy"] = sec.conditional_entropy ? to_string(*sec.conditional_entropy) : "not exact";
    out["message_values"] = sec.message_values;
    out["key_values"] = sec.key_values;
    if (sec.cell_count) out["cell_count"] = *sec.cell_count;
    return out;
  }
  out["mode"] = "sampled";
  out["trials"] = trials;
  std::size_t good = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const ProtocolRun r = run(h, s, key_rate, seed + t);
    if (r.zero_error) ++good;
    if (t == 0) out["first_key"] = bits_text(r.key);
  }
  out["zero_error_trials"] = good;
  out["zero_error"] = good == trials;
  return out;
}

Json fuzz(std::size_t vertices, std::size_t edges, unsigned max_weight, std::uint64_t seed, std::size_t cases,
          bool& clean) {
  std::mt19937_64 seeds(seed);
  Json out;
  out["vertices"] = vertices;
  out["edges"] = edges;
  out["max_weight"] = max_weight;
  out["seed"] = seed;
  std::size_t run = 0, checks = 0, attempts = 0;
  EndToEndStats stats;
  clean = true;
  for (std::size_t c = 0; c < cases && clean; ++c) {
    const std::uint64_t case_seed = seeds();
    const GeneratedMch g = random_mch({vertices, edges, max_weight, case_seed});
    attempts += g.stats.attempts;
    PropertyReport report = check_structure(g.hypergraph, case_seed);
    report.merge(check_end_to_end(g.hypergraph, {}, &stats));
    ++run;
    checks += report.checks;
    if (!report.ok()) {
      clean = false;
      Json counterexample;
      counterexample["case"] = c;
      counterexample["seed"] = case_seed;
      counterexample["property"] = report.failures.front().property;
      counterexample["detail"] = report.failures.front().detail;
      counterexample["hypergraph"] = split(serialize(g.hypergraph), '\n');
      counterexample["hypergraph"].erase(counterexample["hypergraph"].size() - 1);
      out["counterexample"] = counterexample;
    }
  }
  out["cases_run"] = run;
  out["checks"] = checks;
  out["generation_attempts"] = attempts;
  out["schemes"] = stats.schemes;
  out["simulations"] = stats.simulations;
  out["skipped_simulations"] = stats.skipped_simulations;
  out["passed"] = clean;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret key agreement on minimally connected hypergraphical sources"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output with sorted keys");

  std::string file, key_rate, total_rate, rates_spec;
  std::vector<std::string> order_specs;
  bool emit_matrix = false, exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t trials = 1, vertices = 6, edges = 3, cases = 10;
  unsigned max_weight = 2;

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure, partition connectivity and fundamental partition");
  analyze_cmd->add_option("file", file, "hypergraph (.hg)")->required();
  auto* capacity_cmd = app.add_subcommand("capacity", "Secrecy capacities and communication complexity");
  capacity_cmd->add_option("file", file)->required();
  capacity_cmd->add_option("--total-rate", total_rate, "total discussion rate R");
  auto* region_cmd = app.add_subcommand("region", "Rate region constraints");
  region_cmd->add_option("file", file)->required();
  auto* check_cmd = app.add_subcommand("check", "Test a rate tuple against the region");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--key-rate", key_rate)->required();
  check_cmd->add_option("--rates", rates_spec, "user:rate,... (missing users are 0)");
  auto* scheme_cmd = app.add_subcommand("scheme", "Synthesize the XOR discussion");
  scheme_cmd->add_option("file", file)->required();
  scheme_cmd->add_option("--key-rate", key_rate, "default C_S(infinity)");
  scheme_cmd->add_option("--order", order_specs, "BLOCK=perm, e.g. 1,2,3=3,1,2");
  scheme_cmd->add_flag("--emit-matrix", emit_matrix);
  auto* simulate_cmd = app.add_subcommand("simulate", "Run the protocol on sampled or all realizations");
  simulate_cmd->add_option("file", file)->required();
  simulate_cmd->add_option("--key-rate", key_rate, "default C_S(infinity)");
  simulate_cmd->add_option("--order", order_specs, "BLOCK=perm");
  simulate_cmd->add_option("--seed", seed);
  simulate_cmd->add_flag("--exhaustive", exhaustive, "enumerate every realization; fails above the bit cap");
  simulate_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Property suite on random minimally connected hypergraphs");
  fuzz_cmd->add_option("--vertices", vertices)->check(CLI::Range(2, 8));
  fuzz_cmd->add_option("--edges", edges)->check(CLI::Range(1, 6));
  fuzz_cmd->add_option("--max-weight", max_weight)->check(CLI::Range(1, 1000));
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--cases", cases);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Json body;
    std::string command;
    int code = 0;
    if (analyze_cmd->parsed()) {
      command = "analyze";
      body = analyze(load_hypergraph(file));
    } else if (capacity_cmd->parsed()) {
      command = "capacity";
      body = capacity(load_hypergraph(file), total_rate);
    } else if (region_cmd->parsed()) {
      command = "region";
      body = region(load_hypergraph(file));
    } else if (check_cmd->parsed()) {
      command = "check";
      body = check(load_hypergraph(file), key_rate, rates_spec);
    } else if (scheme_cmd->parsed()) {
      command = "scheme";
      body = scheme(load_hypergraph(file), key_rate, parse_orders(order_specs), emit_matrix);
    } else if (simulate_cmd->parsed()) {
      command = "simulate";
      body = simulate(load_hypergraph(file), key_rate, parse_orders(order_specs), seed, exhaustive, trials);
    } else {
      command = "fuzz";
      bool clean = true;
      body = fuzz(vertices, edges, max_weight, seed, cases, clean);
      if (!clean) code = 1;
    }
    body["schema_version"] = kSchemaVersion;
    body["command"] = command;
    if (as_json)
      out << body.dump(2) << '\n';
    else
      render_text(body, "", out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  }
}

}  // namespace hyperkey::cli
