#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "binedge/graph.hpp"

// Drivers behind the binedge executable. Every report is built as JSON first;
// the text and CSV renderers read only that value, so the formats agree.
namespace binedge::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailure = 2, kCapacity = 3 };

enum class Format { kText, kJson, kCsv };
Format parse_format(std::string_view text);

// prime == 0 is QQ.
struct Field {
  std::uint32_t prime = 32003;
  std::string name() const;  // "QQ" or "ZZ/p"
};
// "QQ", "p" or "ZZ/p" for a prime p < 2^31. Throws ParseError otherwise.
Field parse_field(std::string_view text);

// Named graphs (K4, P5, C5, star3, claw, net, tent, chain:1,3,5), "-" for
// stdin, a file path, or inline edge-list or graph6 text. Files and stdin
// holding only graph6 records yield one graph per line.
std::vector<Graph> read_graphs(std::string_view source);

struct Options {
  int n_min = 1;
  int n_max = 5;
  int k_max = 2;
  Field field;
  std::uint64_t seed = 0;
  Format format = Format::kText;
  double budget_seconds = 0;  // 0 disables the budget
  int jobs = 1;
  int probe_trials = 2;
  bool with_betti = false;
  bool timing = false;  // wall-clock fields break byte-for-byte reproducibility
  bool iso_reduce = true;
  bool connected_only = true;
};

// Second prime of the two-prime check, chosen from a fixed list by the seed.
std::uint32_t second_prime(const Options& options);

// Per-graph report. report["ok"] is false iff some entry of report["checks"]
// failed; a failed check means a proven statement was contradicted.
nlohmann::json analyze(const Graph& g, const Options& options);
// Transported net witness with both membership verdicts over QQ, or
// {"witness": "none"} without an induced net.
nlohmann::json witness(const Graph& g, int k);
// Betti tables of J^k and in(J^k) for k = 1..k_max with the oracle checks.
nlohmann::json betti(const Graph& g, const Options& options);

struct Selector {
  std::string name;
  // Theorem selectors assert; question and conjecture selectors only tally,
  // except for implications marked as proven inside them.
  bool theorem = true;
  int max_n = 5;
  std::string statement;
};
const std::vector<Selector>& selectors();
// Throws ParseError for unknown names.
const Selector& find_selector(std::string_view name);

// Verdicts: "pass" / "fail" for asserted statements, "agree" / "disagree"
// for evidence, "skip" when the hypotheses do not hold, "capacity" when a
// budget was exceeded for this graph.
struct GraphVerdict {
  Graph graph;
  std::string verdict;
  nlohmann::json detail;
};

struct EnumerationRun {
  Selector selector;
  Options options;
  std::vector<GraphVerdict> records;  // canonical order: by order, then code
  std::map<std::string, long long> tallies;
  long long unprocessed = 0;  // left over when the budget ran out
  bool truncated() const { return unprocessed > 0; }
  std::vector<const GraphVerdict*> counterexamples() const;
  nlohmann::json summary() const;
  ExitCode exit_code() const;
};

// Connected graphs of order n_min..n_max (all graphs unless connected_only),
// up to isomorphism or labeled, checked on a pool of options.jobs workers.
// Throws CapacityError when n_max exceeds the selector's budget.
EnumerationRun enumerate(const Selector& selector, const Options& options);
// The single-graph verification behind a selector.
GraphVerdict check_graph(const Selector& selector, const Graph& g, const Options& options);
nlohmann::json verdict_json(const GraphVerdict& v);

std::string render_analyze(const nlohmann::json& report, Format format);
std::string render_witness(const nlohmann::json& report, Format format);
std::string render_betti(const nlohmann::json& report, Format format);
std::string render_enumeration(const EnumerationRun& run, Format format);

// Entry point of the executable; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace binedge::cli
