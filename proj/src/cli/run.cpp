#include <CLI11.hpp>

#include <ostream>

#include "binedge/cli.hpp"
#include "binedge/errors.hpp"

namespace binedge::cli {

namespace {

struct Flags {
  Options options;
  std::string field = "32003";
  std::string format = "text";
};

void add_common(CLI::App* app, Flags& f) {
  auto& o = f.options;
  app->add_option("--n-min", o.n_min, "Smallest order enumerated")->capture_default_str();
  app->add_option("--n-max", o.n_max, "Largest order enumerated")->capture_default_str();
  app->add_option("--k-max", o.k_max, "Largest power k")->capture_default_str();
  app->add_option("--field", f.field, "QQ or a prime p (ZZ/p)")->capture_default_str();
  app->add_option("--seed", o.seed, "Seed of every randomized stage")->capture_default_str();
  app->add_option("--format", f.format, "text, json or csv")->capture_default_str();
  app->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget, 0 for none")->capture_default_str();
  app->add_option("--jobs", o.jobs, "Worker threads for enumeration")->capture_default_str();
  app->add_option("--trials", o.probe_trials, "Depth probe trials (>= 2)")->capture_default_str();
  app->add_flag("--timing", o.timing, "Include wall-clock timings in reports");
}

void finish_flags(Flags& f) {
  f.options.field = parse_field(f.field);
  f.options.format = parse_format(f.format);
}

int worst(int a, int b) {
  // Verification failures outrank capacity exits.
  if (a == kVerificationFailure || b == kVerificationFailure) return kVerificationFailure;
  return std::max(a, b);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial edge ideals: invariants, theorem enumeration, witnesses and Betti tables", "binedge"};
  app.require_subcommand(1);

  Flags analyze_flags, enumerate_flags, witness_flags, betti_flags;

  std::vector<std::string> analyze_sources;
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariant report for each input graph");
  analyze_cmd->add_option("graphs", analyze_sources, "Graph sources (name, file, '-', edge list, graph6)")->required();
  analyze_cmd->add_flag("--with-betti", analyze_flags.options.with_betti, "Include Betti tables");
  add_common(analyze_cmd, analyze_flags);

  std::string selector_name;
  bool list = false, labeled = false, all_graphs = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Verify a selector over all small graphs");
  enumerate_cmd->add_option("selector", selector_name, "Selector name (see --list)");
  enumerate_cmd->add_flag("--list", list, "List selectors and their budgets");
  enumerate_cmd->add_flag("--no-iso", labeled, "Enumerate labeled graphs instead of isomorphism classes");
  enumerate_cmd->add_flag("--include-disconnected", all_graphs, "Include disconnected graphs");
  add_common(enumerate_cmd, enumerate_flags);

  std::string witness_source;
  int witness_k = 2;
  auto* witness_cmd = app.add_subcommand("witness", "Net witness g with membership verdicts");
  witness_cmd->add_option("graph", witness_source, "Graph source")->required();
  witness_cmd->add_option("-k,--k", witness_k, "Power k >= 2")->capture_default_str();
  add_common(witness_cmd, witness_flags);

  std::string betti_source;
  auto* betti_cmd = app.add_subcommand("betti", "Betti tables of J^k and in(J^k)");
  betti_cmd->add_option("graph", betti_source, "Graph source")->required();
  add_common(betti_cmd, betti_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      finish_flags(analyze_flags);
      std::vector<Graph> graphs;
      for (const auto& s : analyze_sources) {
        auto gs = read_graphs(s);
        graphs.insert(graphs.end(), gs.begin(), gs.end());
      }
      int code = kOk;
      for (const auto& g : graphs) {
        auto report = analyze(g, analyze_flags.options);
        out << render_analyze(report, analyze_flags.options.format);
        if (!report["ok"].get<bool>()) code = worst(code, kVerificationFailure);
      }
      return code;
    }
    if (enumerate_cmd->parsed()) {
      finish_flags(enumerate_flags);
      if (list) {
        for (const auto& s : selectors()) {
          out << s.name << " (" << (s.theorem ? "theorem" : "question") << ", n <= " << s.max_n
              << "): " << s.statement << "\n";
        }
        return kOk;
      }
      if (selector_name.empty()) throw ParseError("enumerate needs a selector (see --list)");
      auto& o = enumerate_flags.options;
      o.iso_reduce = !labeled;
      o.connected_only = !all_graphs;
      auto result = enumerate(find_selector(selector_name), o);
      out << render_enumeration(result, o.format);
      return result.exit_code();
    }
    if (witness_cmd->parsed()) {
      finish_flags(witness_flags);
      int code = kOk;
      for (const auto& g : read_graphs(witness_source)) {
        auto report = witness(g, witness_k);
        out << render_witness(report, witness_flags.options.format);
        if (!report["ok"].get<bool>()) code = worst(code, kVerificationFailure);
      }
      return code;
    }
    if (betti_cmd->parsed()) {
      finish_flags(betti_flags);
      int code = kOk;
      for (const auto& g : read_graphs(betti_source)) {
        auto report = betti(g, betti_flags.options);
        out << render_betti(report, betti_flags.options.format);
        if (!report["ok"].get<bool>()) code = worst(code, kVerificationFailure);
      }
      return code;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  }
  return kInputError;
}

}  // namespace binedge::cli
