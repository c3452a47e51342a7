#include "pipeline.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "binedge/bei.hpp"

namespace binedge::cli {

using algebra::ModP;
using algebra::MonomialIdeal;
using algebra::Rational;

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Graph> named_graph(std::string_view s) {
  if (s == "claw") return claw_graph();
  if (s == "net") return net_graph();
  if (s == "tent") return tent_graph();
  if (s.starts_with("chain:")) {
    std::vector<int> points;
    std::string_view rest = s.substr(6);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto v = parse_int(rest.substr(0, comma));
      if (!v) throw ParseError("malformed clique chain '" + std::string(s) + "'");
      points.push_back(*v);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (points.size() < 2 || points.front() != 1 || !std::is_sorted(points.begin(), points.end()) ||
        std::adjacent_find(points.begin(), points.end()) != points.end()) {
      throw ParseError("clique chain breakpoints must increase from 1");
    }
    return clique_chain(points);
  }
  for (auto [prefix, make] : std::array<std::pair<std::string_view, Graph (*)(int)>, 4>{
           {{"star", star_graph}, {"K", complete_graph}, {"P", path_graph}, {"C", cycle_graph}}}) {
    if (!s.starts_with(prefix)) continue;
    auto n = parse_int(s.substr(prefix.size()));
    if (!n) continue;
    if (*n < 1 || *n > Graph::kMaxOrder || (prefix == "C" && *n < 3)) {
      throw ParseError("order out of range in '" + std::string(s) + "'");
    }
    return make(*n);
  }
  return std::nullopt;
}

std::string trimmed(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool graph6_line(std::string_view line) {
  return !line.empty() && std::all_of(line.begin(), line.end(), [](char c) { return c >= 63 && c <= 126; });
}

std::vector<Graph> graphs_from_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto t = trimmed(line);
    if (!t.empty()) lines.push_back(t);
  }
  if (lines.empty()) throw ParseError("no graph in input");
  if (lines.size() > 1 && std::all_of(lines.begin(), lines.end(), [](const auto& l) { return graph6_line(l); })) {
    std::vector<Graph> out;
    for (const auto& l : lines) out.push_back(parse_graph6(l));
    return out;
  }
  return {parse_graph(text)};
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::kText;
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  throw ParseError("unknown format '" + std::string(text) + "' (text, json, csv)");
}

std::string Field::name() const { return prime == 0 ? "QQ" : "ZZ/" + std::to_string(prime); }

Field parse_field(std::string_view text) {
  if (text == "QQ" || text == "Q") return {0};
  std::string_view digits = text.starts_with("ZZ/") ? text.substr(3) : text;
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw ParseError("field must be QQ or a prime below 2^31, got '" + std::string(text) + "'");
  }
  return {static_cast<std::uint32_t>(p)};
}

std::vector<Graph> read_graphs(std::string_view source) {
  std::string s = trimmed(source);
  if (auto g = named_graph(s)) return {*g};
  if (s == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return graphs_from_text(text);
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(std::string(s), ec)) {
    std::ifstream file{std::string(s)};
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return graphs_from_text(text);
  }
  // Inline edge lists may be written "1-2,2-3".
  if (!s.empty() && s.find_first_not_of("0123456789-,; ") == std::string::npos && s.find('-') != std::string::npos) {
    std::replace(s.begin(), s.end(), ',', '\n');
    std::replace(s.begin(), s.end(), ';', '\n');
    std::replace(s.begin(), s.end(), '-', ' ');
  }
  return graphs_from_text(s);
}

std::uint32_t second_prime(const Options& options) {
  static constexpr std::array<std::uint32_t, 8> kPrimes{31991, 31981, 31973, 31963, 31957, 31907, 31891, 31883};
  std::size_t i = static_cast<std::size_t>(options.seed % kPrimes.size());
  if (kPrimes[i] == options.field.prime) i = (i + 1) % kPrimes.size();
  return kPrimes[i];
}

namespace detail {

void Checks::add(const std::string& name, bool passed, nlohmann::json detail) {
  nlohmann::json entry{{"name", name}, {"ok", passed}};
  if (!detail.is_null()) entry["detail"] = std::move(detail);
  list.push_back(std::move(entry));
  ok = ok && passed;
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json out{{"n", g.order()}, {"edges", edges}, {"graph6", to_graph6(g)}};
  out["canonical"] = g.order() <= kMaxCanonicalOrder ? nlohmann::json(to_graph6(from_canonical(canonical_form(g))))
                                                      : nlohmann::json(nullptr);
  return out;
}

nlohmann::json table_json(const oracle::BettiTable& t) { return oracle::to_json(t); }

Labeled closed_relabeling(const Graph& g) {
  if (auto sigma = recognize_closed(g)) return {g.relabeled(*sigma), true, *sigma};
  return {g, false, {}};
}

bool quadratic_gb(const Graph& g) {
  auto j = bei::binomial_edge_ideal<ModP>(g);
  std::vector<algebra::Polynomial<ModP>> gens;
  for (const auto& f : j.generators()) gens.push_back(f.monic());
  std::sort(gens.begin(), gens.end(),
            [](const auto& a, const auto& b) { return a.leading_monomial() > b.leading_monomial(); });
  return j.groebner_basis() == gens;
}

bool generators_pass_buchberger(const Graph& g) {
  return algebra::is_groebner_basis(bei::binomial_edge_ideal<ModP>(g).generators());
}

nlohmann::json PowerOracle::checks_json() const {
  return {{"semicontinuity", semicontinuous},
          {"hilbert", hilbert},
          {"two_primes", two_primes},
          {"second_prime", second_prime},
          {"rational_fallback", rational_fallback},
          {"differentials", differentials},
          {"probe_depth", probe_j},
          {"probe_initial_depth", probe_initial},
          {"probe_prime", probe_prime}};
}

PowerOracle power_oracle(const Graph& g, int k, const Options& options) {
  PowerOracle r;
  r.k = k;
  oracle::BettiOptions bo;
  bo.seed = options.seed;
  const std::uint32_t main = options.field.prime == 0 ? ModP::kDefaultPrime : options.field.prime;
  r.second_prime = second_prime(options);
  r.probe_prime = main;
  const std::string power = "J^" + std::to_string(k);
  MonomialIdeal initial;
  {
    ModP::Scope scope(main);
    auto j = bei::binomial_edge_ideal<ModP>(g);
    auto jk = k == 1 ? j : algebra::power(j, k);
    initial = stage("groebner " + power, [&] { return jk.initial_ideal(); });
    r.eq3 = initial == (k == 1 ? j.initial_ideal() : algebra::power(j.initial_ideal(), k));
    bo.prime = main;
    r.j = stage("betti " + power, [&] { return oracle::betti_table(jk, bo); });
    r.initial = stage("betti in(" + power + ")", [&] { return oracle::betti_table(initial, bo); });
    stage("probe " + power, [&] {
      r.probe_j = oracle::depth_probe_generic_forms(jk, options.probe_trials, options.seed).depth;
      r.probe_initial = oracle::depth_probe_generic_forms(initial, options.probe_trials, options.seed, main).depth;
      return 0;
    });
    r.hilbert = oracle::hilbert_consistency(initial, r.j) && oracle::hilbert_consistency(initial, r.initial);
    r.differentials = stage("differentials " + power, [&] {
      return oracle::differentials_compose_to_zero(jk) && oracle::differentials_compose_to_zero(initial);
    });
  }
  {
    ModP::Scope scope(r.second_prime);
    auto j = bei::binomial_edge_ideal<ModP>(g);
    auto jk = k == 1 ? j : algebra::power(j, k);
    bo.prime = r.second_prime;
    r.two_primes = stage("betti " + power + " second prime", [&] { return oracle::betti_table(jk, bo); }) == r.j;
  }
  if (options.field.prime == 0 || !r.two_primes) {
    auto j = bei::binomial_edge_ideal<Rational>(g);
    auto jk = k == 1 ? j : algebra::power(j, k);
    bo.prime = 0;
    r.j = stage("betti " + power + " over QQ", [&] { return oracle::betti_table(jk, bo); });
    r.rational_fallback = !r.two_primes;
    if (options.field.prime == 0) r.initial = oracle::betti_table(jk.initial_ideal(), bo);
  }
  r.semicontinuous = oracle::dominated_by(r.j, r.initial);
  return r;
}

}  // namespace detail

}  // namespace binedge::cli
