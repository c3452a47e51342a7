#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "binedge/bei.hpp"
#include "binedge/formulas.hpp"
#include "pipeline.hpp"

namespace binedge::cli {

using algebra::ModP;
using detail::stage;

namespace {

GraphVerdict verdict(const Graph& g, bool passed, nlohmann::json detail) {
  return {g, passed ? "pass" : "fail", std::move(detail)};
}

GraphVerdict skip(const Graph& g, const std::string& why) { return {g, "skip", {{"reason", why}}}; }

// Oracle passes for k = 1..k_max; `consistent` is cleared by any failed
// self-check. For closed graphs it also requires in(J^k) = (in J)^k, so the
// initial tables below are those of (in J)^k.
std::vector<detail::PowerOracle> oracle_passes(const Graph& g, const Options& options, nlohmann::json& detail,
                                               bool& consistent) {
  std::vector<detail::PowerOracle> out;
  detail["oracle"] = nlohmann::json::array();
  for (int k = 1; k <= options.k_max; ++k) {
    out.push_back(detail::power_oracle(g, k, options));
    const auto& o = out.back();
    detail["oracle"].push_back({{"k", k},
                                {"depth", o.j.depth},
                                {"initial_depth", o.initial.depth},
                                {"reg", o.j.reg},
                                {"initial_reg", o.initial.reg},
                                {"eq3", o.eq3},
                                {"checks", o.checks_json()}});
    consistent = consistent && o.consistent() && o.eq3;
  }
  return out;
}

using CheckFn = GraphVerdict (*)(const Graph&, const Options&);

GraphVerdict check_closed_char(const Graph& g, const Options&) {
  auto labeled = detail::closed_relabeling(g);
  auto scan = forbidden_subgraph_scan(g);
  bool chordal = is_chordal(g).chordal;
  bool characterized = chordal && !scan.claw && !scan.net && !scan.tent;
  bool passed = labeled.closed == characterized && (!labeled.closed || is_closed_labeling(labeled.graph));
  return verdict(g, passed,
                 {{"closed", labeled.closed}, {"chordal", chordal}, {"claw", scan.claw.has_value()},
                  {"net", scan.net.has_value()}, {"tent", scan.tent.has_value()}});
}

GraphVerdict check_gb(const Graph& g, const Options&) {
  ModP::Scope scope(ModP::kDefaultPrime);
  auto labeled = detail::closed_relabeling(g);
  if (labeled.closed) return verdict(g, detail::quadratic_gb(labeled.graph), {{"closed", true}, {"labelings_checked", 1}});
  // No labeling of a non-closed graph may give a quadratic basis; all n!
  // labelings are tried.
  int n = g.order();
  std::vector<int> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 0);
  long long tried = 0;
  bool any = false;
  do {
    ++tried;
    any = detail::generators_pass_buchberger(g.relabeled(sigma));
  } while (!any && std::next_permutation(sigma.begin() + 1, sigma.end()));
  return verdict(g, !any, {{"closed", false}, {"labelings_checked", tried}});
}

GraphVerdict check_dim(const Graph& g, const Options&) {
  int formula = 0;
  for (const auto& p : bei::minimal_primes(g)) formula = std::max(formula, 2 * g.order() - p.height);
  ModP::Scope scope(ModP::kDefaultPrime);
  int hilbert = algebra::krull_dimension(bei::binomial_edge_ideal<ModP>(g));
  return verdict(g, formula == hilbert, {{"formula", formula}, {"hilbert", hilbert}});
}

GraphVerdict check_cm_closed(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0) return skip(g, "no edges");
  auto cm = bei::cm_closed(labeled.graph);
  Options one = options;
  one.k_max = 1;
  nlohmann::json detail{{"unmixed", cm.unmixed}, {"cm", cm.cm}};
  bool consistent = true;
  auto o = oracle_passes(labeled.graph, one, detail, consistent).front();
  ModP::Scope scope(ModP::kDefaultPrime);
  int dim = algebra::krull_dimension(bei::binomial_edge_ideal<ModP>(labeled.graph));
  bool cm_j = o.j.depth == dim, cm_in = o.initial.depth == dim;
  detail["dimension"] = dim;
  return verdict(g, consistent && cm.cm == cm.unmixed && cm.cm == cm_j && cm.cm == cm_in, detail);
}

GraphVerdict check_eq3(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  ModP::Scope scope(ModP::kDefaultPrime);
  auto j = bei::binomial_edge_ideal<ModP>(labeled.graph);
  auto in = j.initial_ideal();
  bool passed = true;
  nlohmann::json ks = nlohmann::json::array();
  for (int k = 2; k <= options.k_max; ++k) {
    bool eq = algebra::power(j, k).initial_ideal() == algebra::power(in, k);
    ks.push_back({{"k", k}, {"equal", eq}});
    passed = passed && eq;
  }
  return verdict(g, passed, {{"powers", ks}});
}

GraphVerdict check_eq4(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  ModP::Scope scope(ModP::kDefaultPrime);
  bool passed = true;
  nlohmann::json ks = nlohmann::json::array();
  for (int k = 2; k <= std::min(options.k_max, bei::SymbolicBudget{}.max_k); ++k) {
    bool eq = bei::symbolic_equals_ordinary<ModP>(labeled.graph, k);
    ks.push_back({{"k", k}, {"equal", eq}});
    passed = passed && eq;
  }
  return verdict(g, passed, {{"powers", ks}});
}

GraphVerdict check_depth(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0 || !bei::cm_closed(labeled.graph).cm) return skip(g, "not Cohen-Macaulay");
  auto profile = formulas::depth_powers_cm_closed(labeled.graph, options.k_max);
  nlohmann::json detail;
  bool passed = true;
  auto passes = oracle_passes(labeled.graph, options, detail, passed);
  nlohmann::json predicted = nlohmann::json::array();
  for (const auto& o : passes) {
    int d = profile.at(o.k);
    predicted.push_back(d);
    passed = passed && o.j.depth == d && o.initial.depth == d;
  }
  detail["predicted_depth"] = predicted;
  return verdict(g, passed, detail);
}

GraphVerdict check_reg(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0) return skip(g, "no edges");
  nlohmann::json detail;
  bool passed = true;
  auto passes = oracle_passes(labeled.graph, options, detail, passed);
  nlohmann::json predicted = nlohmann::json::array();
  for (const auto& o : passes) {
    int r = formulas::reg_powers_closed(labeled.graph, o.k);
    predicted.push_back(r);
    passed = passed && o.j.reg == r && o.initial.reg == r;
  }
  detail["predicted_reg"] = predicted;
  return verdict(g, passed, detail);
}

GraphVerdict check_persistence(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  ModP::Scope scope(ModP::kDefaultPrime);
  bool passed = true;
  nlohmann::json ks = nlohmann::json::array();
  for (int k = 1; k <= options.k_max; ++k) {
    bool ok = formulas::persistence_check(labeled.graph, k);
    ks.push_back({{"k", k}, {"equal", ok}});
    passed = passed && ok;
  }
  return verdict(g, passed, {{"powers", ks}});
}

GraphVerdict check_net(const Graph& g, const Options&) {
  if (!classify_block_graph(g).is_block) return skip(g, "not a block graph");
  if (!find_induced_subgraph(g, net_graph())) return skip(g, "net-free");
  auto w = witness(g, 2);
  return verdict(g, w["ok"].get<bool>(), w["witness"]);
}

GraphVerdict check_initial_depth(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0) return skip(g, "no edges");
  oracle::BettiOptions bo;
  bo.prime = options.field.prime;
  auto depth = [&](const algebra::MonomialIdeal& m) { return oracle::betti_table(m, bo).depth; };
  auto depths = formulas::initial_power_depths(labeled.graph, options.k_max, depth);
  return verdict(g, std::is_sorted(depths.rbegin(), depths.rend()), {{"initial_depths", depths}});
}

GraphVerdict check_conj52(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0) return skip(g, "no edges");
  bool cm = bei::cm_closed(labeled.graph).cm;
  nlohmann::json detail{{"cm", cm}};
  bool consistent = true;
  auto passes = oracle_passes(labeled.graph, options, detail, consistent);
  nlohmann::json equal = nlohmann::json::array();
  bool all_equal = true, proven_case = true;
  for (const auto& o : passes) {
    bool eq = o.j == o.initial;
    equal.push_back(eq);
    all_equal = all_equal && eq;
    if (cm && o.k == 1) proven_case = eq;
  }
  detail["tables_equal"] = equal;
  if (!consistent || !proven_case) return {g, "fail", detail};
  return {g, all_equal ? "agree" : "disagree", detail};
}

GraphVerdict check_q51(const Graph& g, const Options& options) {
  auto labeled = detail::closed_relabeling(g);
  if (!labeled.closed) return skip(g, "not closed");
  if (g.edge_count() == 0) return skip(g, "no edges");
  bool cm = bei::cm_closed(labeled.graph).cm;
  nlohmann::json detail{{"cm", cm}};
  bool consistent = true;
  auto passes = oracle_passes(labeled.graph, options, detail, consistent);
  std::vector<int> depths;
  for (const auto& o : passes) depths.push_back(o.j.depth);
  bool monotone = std::is_sorted(depths.rbegin(), depths.rend());
  detail["depths"] = depths;
  // Non-increasing depth is proven in the Cohen-Macaulay case.
  if (!consistent || (cm && !monotone)) return {g, "fail", detail};
  return {g, monotone ? "agree" : "disagree", detail};
}

GraphVerdict check_q4(const Graph& g, const Options&) {
  bool net = find_induced_subgraph(g, net_graph()).has_value();
  ModP::Scope scope(ModP::kDefaultPrime);
  bool equal = bei::symbolic_equals_ordinary<ModP>(g, 2);
  nlohmann::json detail{{"net_free", !net}, {"square_equals_symbolic", equal}};
  // J^2 = J^(2) forces net-freeness; the converse is the open direction.
  if (net && equal) return {g, "fail", detail};
  return {g, net || equal ? "agree" : "disagree", detail};
}

struct Entry {
  Selector selector;
  CheckFn fn;
};

const std::vector<Entry>& catalogue() {
  static const std::vector<Entry> entries{
      {{"closed-char", true, 8, "closed iff chordal and claw-, net-, tent-free, with a self-verified labeling"},
       check_closed_char},
      {{"gb", true, 7, "closed iff the 2-minors are a Groebner basis under some labeling"}, check_gb},
      {{"dim", true, 6, "Hilbert-series dimension equals max over cut sets of n + c(W) - |W|"}, check_dim},
      {{"cm-closed", true, 5, "closed: unmixed iff CM iff S/J and S/in(J) have depth equal to dim"},
       check_cm_closed},
      {{"eq3", true, 6, "closed: in(J^k) = (in J)^k for 2 <= k <= k_max"}, check_eq3},
      {{"eq4", true, 6, "closed: J^k = J^(k) for 2 <= k <= min(k_max, 2)"}, check_eq4},
      {{"depth", true, 5, "closed CM: oracle depth of S/J^k and S/in(J^k) match the formula"}, check_depth},
      {{"reg", true, 5, "closed: oracle reg of S/J^k and S/in(J^k) equal sum of ell + 2(k - 1)"}, check_reg},
      {{"persistence", true, 5, "closed: (J^{k+1} : J) = J^k for 1 <= k <= k_max"}, check_persistence},
      {{"net", true, 7, "block graph with induced net: the witness lies in J^(2) but not J^2"}, check_net},
      {{"initial-depth", true, 5, "closed: depth of S/(in J)^k is non-increasing in k"}, check_initial_depth},
      {{"conj52", false, 5, "closed: J^k and (in J)^k share graded Betti numbers; asserted for CM at k = 1"},
       check_conj52},
      {{"q51", false, 5, "closed: depth of S/J^k is non-increasing in k; asserted for CM"}, check_q51},
      {{"q4", false, 6, "net-free iff J^2 = J^(2); the implication J^2 = J^(2) => net-free is asserted"},
       check_q4},
  };
  return entries;
}

const Entry& entry_of(const Selector& s) {
  for (const auto& e : catalogue())
    if (e.selector.name == s.name) return e;
  throw ParseError("unknown selector '" + s.name + "'");
}

}  // namespace

const std::vector<Selector>& selectors() {
  static const std::vector<Selector> out = [] {
    std::vector<Selector> v;
    for (const auto& e : catalogue()) v.push_back(e.selector);
    return v;
  }();
  return out;
}

const Selector& find_selector(std::string_view name) {
  for (const auto& s : selectors())
    if (s.name == name) return s;
  std::string known;
  for (const auto& s : selectors()) known += (known.empty() ? "" : ", ") + s.name;
  throw ParseError("unknown selector '" + std::string(name) + "' (" + known + ")");
}

GraphVerdict check_graph(const Selector& selector, const Graph& g, const Options& options) {
  const auto& entry = entry_of(selector);
  try {
    return entry.fn(g, options);
  } catch (const CapacityError& e) {
    return {g, "capacity", {{"error", e.what()}}};
  }
}

nlohmann::json verdict_json(const GraphVerdict& v) {
  return {{"graph6", to_graph6(v.graph)}, {"n", v.graph.order()}, {"verdict", v.verdict}, {"detail", v.detail}};
}

std::vector<const GraphVerdict*> EnumerationRun::counterexamples() const {
  std::vector<const GraphVerdict*> out;
  for (const auto& r : records)
    if (r.verdict == "fail") out.push_back(&r);
  return out;
}

nlohmann::json EnumerationRun::summary() const {
  nlohmann::json cx = nlohmann::json::array();
  for (const auto* r : counterexamples()) cx.push_back(to_graph6(r->graph));
  return {{"selector", selector.name},
          {"kind", selector.theorem ? "theorem" : "question"},
          {"statement", selector.statement},
          {"n_min", options.n_min},
          {"n_max", options.n_max},
          {"k_max", options.k_max},
          {"iso_reduced", options.iso_reduce},
          {"connected_only", options.connected_only},
          {"field", options.field.name()},
          {"seed", options.seed},
          {"graphs", records.size()},
          {"tallies", tallies},
          {"counterexamples", cx},
          {"truncated", truncated()},
          {"unprocessed", unprocessed},
          {"budget_seconds", options.budget_seconds}};
}

ExitCode EnumerationRun::exit_code() const {
  if (!counterexamples().empty()) return kVerificationFailure;
  if (tallies.count("capacity")) return kCapacity;
  return kOk;
}

EnumerationRun enumerate(const Selector& selector, const Options& options) {
  if (options.n_max > selector.max_n) {
    throw CapacityError("enumerate: selector " + selector.name + " is budgeted for n <= " +
                        std::to_string(selector.max_n));
  }
  if (options.n_min < 1 || options.n_min > options.n_max) throw DomainError("need 1 <= n_min <= n_max");
  if (options.k_max < 1) throw DomainError("k_max must be at least 1");
  std::vector<Graph> graphs;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    auto level = options.iso_reduce ? graphs_up_to_isomorphism(n, options.connected_only)
                                    : labeled_graphs(n, options.connected_only);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }

  std::vector<std::optional<GraphVerdict>> results(graphs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  detail::Stopwatch clock;
  auto worker = [&] {
    while (!failed) {
      if (options.budget_seconds > 0 && clock.seconds() > options.budget_seconds) return;
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        results[i] = check_graph(selector, graphs[i], options);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  EnumerationRun run{selector, options, {}, {}, 0};
  for (auto& r : results) {
    if (!r) {
      ++run.unprocessed;
      continue;
    }
    ++run.tallies[r->verdict];
    run.records.push_back(std::move(*r));
  }
  return run;
}

}  // namespace binedge::cli
