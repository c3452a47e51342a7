#include <algorithm>

#include "binedge/bei.hpp"
#include "binedge/formulas.hpp"
#include "pipeline.hpp"

namespace binedge::cli {

using algebra::ModP;
using algebra::Rational;
using detail::stage;

namespace {

// Vertex maps are stored with an unused slot 0; reports list images of 1..n.
nlohmann::json vertex_map(const std::vector<int>& m) {
  return nlohmann::json(std::vector<int>(m.begin() + (m.empty() ? 0 : 1), m.end()));
}

nlohmann::json optional_map(const std::optional<std::vector<int>>& m) {
  return m ? vertex_map(*m) : nlohmann::json(nullptr);
}

// J^k == J^(k) when the symbolic budget allows it, computed mod the field prime.
std::optional<bool> symbolic_verdict(const Graph& g, int k, const Options& options) {
  bei::SymbolicBudget budget;
  if (g.order() > budget.max_n || k > budget.max_k) return std::nullopt;
  if (options.field.prime == 0) return bei::symbolic_equals_ordinary<Rational>(g, k, budget);
  ModP::Scope scope(options.field.prime);
  return bei::symbolic_equals_ordinary<ModP>(g, k, budget);
}

}  // namespace

nlohmann::json analyze(const Graph& input, const Options& options) {
  if (options.k_max < 1) throw DomainError("k_max must be at least 1");
  if (input.order() > algebra::Ring::kMaxVertices) {
    throw CapacityError("ring: graphs are limited to " + std::to_string(algebra::Ring::kMaxVertices) + " vertices");
  }
  detail::Stopwatch total;
  nlohmann::json timing = nlohmann::json::object();
  detail::Checks checks;
  nlohmann::json report;
  report["graph"] = detail::graph_json(input);

  // Classification.
  detail::Stopwatch clock;
  auto labeled = detail::closed_relabeling(input);
  const Graph& g = labeled.graph;
  auto scan = forbidden_subgraph_scan(input);
  auto chordal = is_chordal(input).chordal;
  auto blocks = classify_block_graph(input);
  auto net = find_induced_subgraph(input, net_graph());
  nlohmann::json cls{{"connected", is_connected(input)},
                     {"chordal", chordal},
                     {"claw_free", !scan.claw},
                     {"net_free", !scan.net},
                     {"tent_free", !scan.tent},
                     {"closed", labeled.closed},
                     {"closed_labeling", labeled.closed ? vertex_map(labeled.sigma) : nlohmann::json(nullptr)},
                     {"block", blocks.is_block}};
  checks.add("closed iff chordal and claw-, net-, tent-free", labeled.closed == (chordal && !scan.claw && !scan.net && !scan.tent));
  if (labeled.closed) {
    checks.add("closed labeling has a quadratic Groebner basis",
               stage("groebner", [&] { return detail::quadratic_gb(g); }));
  }
  timing["classification"] = clock.seconds();

  // Minimal primes and dimension.
  clock = {};
  auto primes = stage("cut sets", [&] { return bei::minimal_primes(input); });
  nlohmann::json sets = nlohmann::json::array(), heights = nlohmann::json::array();
  int dim_formula = 0;
  for (const auto& p : primes) {
    sets.push_back(format_set(p.cut.removed));
    heights.push_back(p.height);
    dim_formula = std::max(dim_formula, 2 * input.order() - p.height);
  }
  bool is_unmixed = bei::unmixed(input);
  report["cut_sets"] = {{"count", primes.size()}, {"sets", sets}, {"heights", heights}};
  int dim_hilbert = stage("dimension", [&] {
    ModP::Scope scope(ModP::kDefaultPrime);
    return algebra::krull_dimension(bei::binomial_edge_ideal<ModP>(input));
  });
  report["dimension"] = {{"formula", dim_formula}, {"hilbert", dim_hilbert}};
  checks.add("dimension formula", dim_formula == dim_hilbert);
  cls["unmixed"] = is_unmixed;
  timing["primes"] = clock.seconds();

  // Powers.
  clock = {};
  std::optional<formulas::DepthProfile> depth_profile;
  std::optional<bool> cm_formula;
  if (labeled.closed) {
    auto cm = bei::cm_closed(g);
    cm_formula = cm.cm;
    checks.add("closed: CM iff unmixed", cm.cm == cm.unmixed);
    if (cm.cm) depth_profile = formulas::depth_powers_cm_closed(g, options.k_max);
  } else if (blocks.is_block) {
    cm_formula = blocks.cm_by_vertex_rule;
  }
  nlohmann::json powers = nlohmann::json::array();
  nlohmann::json betti_tables = nlohmann::json::array();
  bool cm_oracle = false;
  for (int k = 1; k <= options.k_max; ++k) {
    auto o = detail::power_oracle(g, k, options);
    if (k == 1) cm_oracle = o.j.depth == dim_hilbert;
    nlohmann::json row{{"k", k},
                       {"depth", o.j.depth},
                       {"initial_depth", o.initial.depth},
                       {"reg", o.j.reg},
                       {"initial_reg", o.initial.reg},
                       {"oracle", o.checks_json()}};
    std::string tag = " (k=" + std::to_string(k) + ")";
    checks.add("semicontinuity" + tag, o.semicontinuous);
    checks.add("hilbert consistency" + tag, o.hilbert);
    checks.add("two-prime agreement" + tag, o.two_primes);
    checks.add("differentials compose to zero" + tag, o.differentials);
    checks.add("probe depth agrees" + tag, o.probes_agree());
    row["predicted_depth"] = nullptr;
    row["predicted_reg"] = nullptr;
    row["eq3"] = nullptr;
    if (labeled.closed) {
      row["eq3"] = o.eq3;
      checks.add("in(J^k) = (in J)^k" + tag, o.eq3);
      if (g.edge_count() > 0) {
        int reg = formulas::reg_powers_closed(g, k);
        row["predicted_reg"] = reg;
        checks.add("regularity formula" + tag, reg == o.j.reg && reg == o.initial.reg);
      }
      if (depth_profile) {
        int d = depth_profile->at(k);
        row["predicted_depth"] = d;
        checks.add("depth formula" + tag, d == o.j.depth && d == o.initial.depth);
      }
    }
    row["symbolic_equal"] = nullptr;
    if (k >= 2) {
      auto eq = stage("symbolic power" + tag, [&] { return symbolic_verdict(input, k, options); });
      if (eq) {
        row["symbolic_equal"] = *eq;
        if (labeled.closed) checks.add("closed: J^k = J^(k)" + tag, *eq);
        if (net) checks.add("induced net: J^k != J^(k)" + tag, !*eq);
      }
    }
    if (options.with_betti) {
      betti_tables.push_back({{"k", k}, {"J", detail::table_json(o.j)}, {"initial", detail::table_json(o.initial)}});
    }
    powers.push_back(std::move(row));
  }
  timing["powers"] = clock.seconds();
  if (cm_formula) checks.add("CM classification agrees with the oracle", *cm_formula == cm_oracle);
  cls["cm"] = cm_formula ? *cm_formula : cm_oracle;
  cls["cm_source"] = labeled.closed ? "closed interval form" : blocks.is_block ? "block vertex rule" : "oracle";

  report["classification"] = cls;
  report["labeling"] = labeled.closed ? "closed" : "input";
  report["net_embedding"] = optional_map(net);
  report["powers"] = powers;
  if (options.with_betti) report["betti"] = betti_tables;
  report["checks"] = checks.list;
  report["ok"] = checks.ok;
  report["provenance"] = {{"field", options.field.name()},
                          {"seed", options.seed},
                          {"probe_trials", options.probe_trials},
                          {"second_prime", second_prime(options)}};
  if (options.timing) {
    timing["total"] = total.seconds();
    report["timing"] = timing;
  }
  return report;
}

nlohmann::json witness(const Graph& g, int k) {
  if (k < 2) throw DomainError("the net witness needs k >= 2");
  nlohmann::json report{{"graph", detail::graph_json(g)}, {"k", k}};
  auto blocks = classify_block_graph(g);
  report["block"] = blocks.is_block;
  auto map = find_induced_subgraph(g, net_graph());
  if (!map) {
    report["witness"] = "none";
    report["ok"] = true;
    return report;
  }
  if (g.order() > algebra::Ring::kMaxVertices) throw CapacityError("ring: graph too large for the witness");
  auto ring = bei::ring_of(g);
  auto f = bei::net_witness_family<Rational>(g, *map, k);
  bool symbolic = stage("symbolic membership", [&] { return bei::symbolic_power_membership(f, g, k); });
  bool ordinary = stage("ordinary membership", [&] {
    auto j = bei::binomial_edge_ideal<Rational>(g);
    return algebra::power(j, k).contains(f);
  });
  report["witness"] = {{"embedding", vertex_map(*map)},
                       {"polynomial", algebra::to_string(f, ring)},
                       {"symbolic_member", symbolic},
                       {"ordinary_member", ordinary},
                       {"field", "QQ"}};
  // Proven for block graphs; elsewhere the verdicts are reported only.
  report["ok"] = !blocks.is_block || (symbolic && !ordinary);
  return report;
}

nlohmann::json betti(const Graph& input, const Options& options) {
  if (options.k_max < 1) throw DomainError("k_max must be at least 1");
  if (input.order() > algebra::Ring::kMaxVertices) throw CapacityError("ring: graph too large");
  detail::Checks checks;
  nlohmann::json tables = nlohmann::json::array();
  for (int k = 1; k <= options.k_max; ++k) {
    auto o = detail::power_oracle(input, k, options);
    std::string tag = " (k=" + std::to_string(k) + ")";
    checks.add("semicontinuity" + tag, o.semicontinuous);
    checks.add("hilbert consistency" + tag, o.hilbert);
    checks.add("two-prime agreement" + tag, o.two_primes);
    checks.add("differentials compose to zero" + tag, o.differentials);
    checks.add("probe depth agrees" + tag, o.probes_agree());
    tables.push_back({{"k", k},
                      {"J", detail::table_json(o.j)},
                      {"initial", detail::table_json(o.initial)},
                      {"oracle", o.checks_json()}});
  }
  return {{"graph", detail::graph_json(input)},
          {"tables", tables},
          {"checks", checks.list},
          {"ok", checks.ok},
          {"provenance", {{"field", options.field.name()}, {"seed", options.seed}}}};
}

}  // namespace binedge::cli
