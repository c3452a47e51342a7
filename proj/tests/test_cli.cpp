#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binedge/cli.hpp"
#include "binedge/errors.hpp"
#include "binedge/graph.hpp"

using namespace binedge;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "binedge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) { return nlohmann::json::parse(o.out); }

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::vector<int> column(const nlohmann::json& report, const char* key) {
  std::vector<int> out;
  for (const auto& p : report["powers"]) out.push_back(p[key].get<int>());
  return out;
}

}  // namespace

TEST_CASE("analyze K4 reports the complete-graph depths and regularities") {
  auto o = run_cli({"analyze", "K4", "--k-max", "3", "--format", "json"});
  REQUIRE(o.code == cli::kOk);
  auto r = json_of(o);
  CHECK(column(r, "depth") == std::vector<int>{5, 3, 3});
  CHECK(column(r, "predicted_depth") == std::vector<int>{5, 3, 3});
  CHECK(column(r, "initial_depth") == std::vector<int>{5, 3, 3});
  CHECK(column(r, "reg") == std::vector<int>{1, 3, 5});
  CHECK(column(r, "initial_reg") == std::vector<int>{1, 3, 5});
  CHECK(r["ok"].get<bool>());
  CHECK(r["net_embedding"].is_null());
}

TEST_CASE("analyze P5 is Cohen-Macaulay with constant depth") {
  auto o = run_cli({"analyze", "P5", "--format", "json"});
  REQUIRE(o.code == cli::kOk);
  auto r = json_of(o);
  CHECK(r["classification"]["cm"].get<bool>());
  CHECK(column(r, "depth") == std::vector<int>{6, 6});
}

TEST_CASE("analyze net: block, CM, not closed, J^2 differs from J^(2)") {
  auto o = run_cli({"analyze", "net", "--k-max", "2", "--format", "json"});
  REQUIRE(o.code == cli::kOk);
  auto r = json_of(o);
  const auto& c = r["classification"];
  CHECK_FALSE(c["closed"].get<bool>());
  CHECK(c["block"].get<bool>());
  CHECK(c["cm"].get<bool>());
  CHECK(r["powers"][1]["symbolic_equal"] == false);
  // Predicted values need a closed graph.
  CHECK(r["powers"][0]["predicted_depth"].is_null());
}

TEST_CASE("witness on the net and on K4") {
  auto net = json_of(run_cli({"witness", "net", "-k", "2", "--format", "json"}));
  CHECK(net["witness"]["symbolic_member"] == true);
  CHECK(net["witness"]["ordinary_member"] == false);
  CHECK(net["ok"] == true);
  auto k4 = run_cli({"witness", "K4", "-k", "3"});
  CHECK(k4.code == cli::kOk);
  CHECK(k4.out == "none\n");
  CHECK(json_of(run_cli({"witness", "K4", "--format", "json"}))["witness"] == "none");
}

TEST_CASE("betti prints both triangles per power") {
  auto o = run_cli({"betti", "K3", "--k-max", "1", "--format", "json"});
  REQUIRE(o.code == cli::kOk);
  auto r = json_of(o);
  const auto& t = r["tables"][0];
  CHECK(t["k"] == 1);
  CHECK(t["J"]["1"]["2"] == 3);
  CHECK(t["J"]["2"]["3"] == 2);
  CHECK(t["J"] == t["initial"]);
}

TEST_CASE("input errors exit with 1") {
  CHECK(run_cli({"analyze", "not-a-graph"}).code == cli::kInputError);
  CHECK(run_cli({"analyze", "K4", "--format", "yaml"}).code == cli::kInputError);
  CHECK(run_cli({"analyze", "K4", "--field", "ZZ/32004"}).code == cli::kInputError);
  CHECK(run_cli({"analyze", "K4", "--k-max", "0"}).code == cli::kInputError);
  CHECK(run_cli({"enumerate", "no-such-selector"}).code == cli::kInputError);
  CHECK(run_cli({"analyze", "1-2,2-x"}).code == cli::kInputError);
  CHECK(run_cli({}).code == cli::kInputError);
  auto o = run_cli({"frobnicate"});
  CHECK(o.code == cli::kInputError);
  CHECK_FALSE(o.err.empty());
}

TEST_CASE("capacity errors exit with 3 and name the stage") {
  auto big = run_cli({"enumerate", "depth", "--n-max", "6"});
  CHECK(big.code == cli::kCapacity);
  CHECK(big.err.find("depth") != std::string::npos);
  auto ring = run_cli({"analyze", "P8"});
  CHECK(ring.code == cli::kCapacity);
  CHECK_FALSE(ring.err.empty());
}

TEST_CASE("inline edge lists and graph6 name the same graph") {
  auto a = json_of(run_cli({"analyze", "1-2,2-3,3-1", "--k-max", "1", "--format", "json"}));
  auto b = json_of(run_cli({"analyze", "Bw", "--k-max", "1", "--format", "json"}));
  auto c = json_of(run_cli({"analyze", "K3", "--k-max", "1", "--format", "json"}));
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("reports are byte-for-byte reproducible") {
  for (const char* format : {"text", "json", "csv"}) {
    auto first = run_cli({"analyze", "chain:1,3,4", "--seed", "7", "--format", format});
    auto second = run_cli({"analyze", "chain:1,3,4", "--seed", "7", "--format", format});
    CHECK(first.code == cli::kOk);
    CHECK(first.out == second.out);
  }
  auto serial = run_cli({"enumerate", "reg", "--n-max", "4", "--format", "json"});
  auto pooled = run_cli({"enumerate", "reg", "--n-max", "4", "--format", "json", "--jobs", "3"});
  CHECK(serial.code == cli::kOk);
  CHECK(serial.out == pooled.out);
}

TEST_CASE("the seed reaches the second prime and the report provenance") {
  auto a = json_of(run_cli({"analyze", "P3", "--k-max", "1", "--seed", "0", "--format", "json"}));
  auto b = json_of(run_cli({"analyze", "P3", "--k-max", "1", "--seed", "3", "--format", "json"}));
  CHECK(a["provenance"]["seed"] == 0);
  CHECK(b["provenance"]["seed"] == 3);
  CHECK(a["provenance"]["second_prime"] != b["provenance"]["second_prime"]);
  CHECK(a["powers"][0]["depth"] == b["powers"][0]["depth"]);
  cli::Options options;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    options.seed = seed;
    CHECK(cli::second_prime(options) != options.field.prime);
  }
}

TEST_CASE("QQ and ZZ/p reports agree on the invariants") {
  auto p = json_of(run_cli({"analyze", "C4", "--k-max", "2", "--format", "json"}));
  auto q = json_of(run_cli({"analyze", "C4", "--k-max", "2", "--field", "QQ", "--format", "json"}));
  CHECK(q["provenance"]["field"] == "QQ");
  CHECK(column(p, "depth") == column(q, "depth"));
  CHECK(column(p, "reg") == column(q, "reg"));
  CHECK(p["ok"].get<bool>());
  CHECK(q["ok"].get<bool>());
}

TEST_CASE("enumeration output: json lines end with the summary, csv has a header") {
  auto o = run_cli({"enumerate", "eq3", "--n-max", "4", "--format", "json"});
  REQUIRE(o.code == cli::kOk);
  auto lines = json_lines(o.out);
  REQUIRE(lines.size() == 10 + 1);  // connected classes of order 1..4
  const auto& summary = lines.back();
  CHECK(summary["selector"] == "eq3");
  CHECK(summary["counterexamples"].empty());
  CHECK(summary["truncated"] == false);
  long long total = 0;
  for (const auto& [name, count] : summary["tallies"].items()) total += count.get<long long>();
  CHECK(total == 10);
  auto csv = run_cli({"enumerate", "eq3", "--n-max", "3", "--format", "csv"});
  CHECK(csv.out.rfind("selector,graph6,n,verdict\n", 0) == 0);
}

TEST_CASE("an exhausted budget yields a truncation record, not a failure") {
  cli::Options options;
  options.n_max = 5;
  options.budget_seconds = 1e-9;
  auto run = cli::enumerate(cli::find_selector("reg"), options);
  CHECK(run.truncated());
  CHECK(run.exit_code() == cli::kOk);
  CHECK(run.summary()["truncated"] == true);
  CHECK(run.summary()["unprocessed"].get<long long>() == run.unprocessed);
}

TEST_CASE("theorem selectors report no counterexamples on small orders") {
  cli::Options options;
  options.n_max = 4;
  for (const auto& s : cli::selectors()) {
    if (s.name == "net") continue;  // needs six vertices
    CAPTURE(s.name);
    auto run = cli::enumerate(s, options);
    CHECK(run.counterexamples().empty());
    CHECK(run.exit_code() == cli::kOk);
  }
}

TEST_CASE("theorem selectors fail loudly on a contradicted statement") {
  cli::EnumerationRun run;
  run.selector = cli::find_selector("eq3");
  run.records.push_back({path_graph(3), "fail", {}});
  CHECK(run.counterexamples().size() == 1);
  CHECK(run.exit_code() == cli::kVerificationFailure);
  cli::EnumerationRun evidence;
  evidence.selector = cli::find_selector("q51");
  evidence.records.push_back({path_graph(3), "disagree", {}});
  CHECK(evidence.counterexamples().empty());
  CHECK(evidence.exit_code() == cli::kOk);
}

TEST_CASE("isomorphism reduction preserves the verdict set at n = 5") {
  for (const char* name : {"closed-char", "eq3", "cm-closed"}) {
    CAPTURE(name);
    cli::Options options;
    options.n_min = 5;
    options.n_max = 5;
    const auto& s = cli::find_selector(name);
    auto reduced = cli::enumerate(s, options);
    options.iso_reduce = false;
    auto labeled = cli::enumerate(s, options);
    CHECK(reduced.records.size() == 21);
    CHECK(labeled.records.size() == 728);
    std::set<std::pair<std::uint64_t, std::string>> a, b;
    for (const auto& r : reduced.records) a.insert({canonical_form(r.graph).code, r.verdict});
    for (const auto& r : labeled.records) b.insert({canonical_form(r.graph).code, r.verdict});
    CHECK(a == b);
  }
}

TEST_CASE("the net selector checks the witness on block graphs with a net") {
  cli::Options options;
  auto v = cli::check_graph(cli::find_selector("net"), net_graph(), options);
  CHECK(v.verdict == "pass");
  auto k4 = cli::check_graph(cli::find_selector("net"), complete_graph(4), options);
  CHECK(k4.verdict == "skip");
}

TEST_CASE("q4 asserts that J^2 = J^(2) forces net-freeness") {
  cli::Options options;
  auto v = cli::check_graph(cli::find_selector("q4"), net_graph(), options);
  CHECK(v.verdict == "agree");
  CHECK(v.detail["net_free"] == false);
  CHECK(v.detail["square_equals_symbolic"] == false);
}
