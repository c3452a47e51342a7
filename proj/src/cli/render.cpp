#include <sstream>

#include "binedge/cli.hpp"
#include "binedge/oracle.hpp"

namespace binedge::cli {

namespace {

std::string cell(const nlohmann::json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const nlohmann::json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

std::string edge_text(const nlohmann::json& graph) {
  std::string s;
  for (const auto& e : graph["edges"]) s += (s.empty() ? "" : " ") + e[0].dump() + "-" + e[1].dump();
  return s.empty() ? "(none)" : s;
}

std::string graph_line(const nlohmann::json& graph) {
  return "graph: n=" + graph["n"].dump() + " edges " + edge_text(graph) + " [" + graph["graph6"].get<std::string>() +
         "]\n";
}

// Inverse of oracle::to_json for rendering.
oracle::BettiTable table_of(const nlohmann::json& j) {
  oracle::BettiTable t;
  for (const auto& [key, row] : j.items()) {
    if (!row.is_object()) continue;
    int i = std::stoi(key);
    for (const auto& [deg, beta] : row.items()) t.entries[{i, std::stoi(deg)}] = beta.get<long long>();
  }
  t.pd = j["pd"].get<int>();
  t.reg = j["reg"].get<int>();
  t.depth = j["depth"].get<int>();
  return t;
}

void render_checks(std::ostringstream& out, const nlohmann::json& checks) {
  int passed = 0, failed = 0;
  for (const auto& c : checks) (c["ok"].get<bool>() ? passed : failed)++;
  out << "checks: " << passed << " passed, " << failed << " failed\n";
  for (const auto& c : checks)
    if (!c["ok"].get<bool>()) out << "  FAILED " << c["name"].get<std::string>() << "\n";
}

}  // namespace

std::string render_analyze(const nlohmann::json& r, Format format) {
  if (format == Format::kJson) return r.dump() + "\n";
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "graph6,k,predicted_depth,depth,initial_depth,probe_depth,predicted_reg,reg,initial_reg,eq3,"
           "symbolic_equal,ok\n";
    for (const auto& p : r["powers"]) {
      out << csv_cell(r["graph"]["graph6"]) << ',' << p["k"] << ',' << csv_cell(p["predicted_depth"]) << ','
          << p["depth"] << ',' << p["initial_depth"] << ',' << p["oracle"]["probe_depth"] << ','
          << csv_cell(p["predicted_reg"]) << ',' << p["reg"] << ',' << p["initial_reg"] << ',' << csv_cell(p["eq3"])
          << ',' << csv_cell(p["symbolic_equal"]) << ',' << csv_cell(r["ok"]) << "\n";
    }
    return out.str();
  }
  const auto& c = r["classification"];
  out << graph_line(r["graph"]);
  out << "classification:";
  for (const char* flag : {"connected", "chordal", "claw_free", "net_free", "tent_free", "closed", "block", "unmixed"})
    out << ' ' << flag << '=' << cell(c[flag]);
  out << "\n";
  out << "cohen-macaulay: " << cell(c["cm"]) << " (" << c["cm_source"].get<std::string>() << ")\n";
  if (!c["closed_labeling"].is_null()) out << "closed labeling: " << c["closed_labeling"].dump() << "\n";
  out << "cut sets (" << r["cut_sets"]["count"] << "):";
  for (const auto& s : r["cut_sets"]["sets"]) out << ' ' << s.get<std::string>();
  out << "\n";
  out << "dimension: " << r["dimension"]["hilbert"] << " (formula " << r["dimension"]["formula"] << ")\n";
  if (!r["net_embedding"].is_null()) out << "induced net: " << r["net_embedding"].dump() << "\n";
  out << " k  depth  predicted  in  probe |  reg  predicted  in | eq3  J^k=J^(k)\n";
  for (const auto& p : r["powers"]) {
    char line[160];
    std::snprintf(line, sizeof line, "%2d  %5s  %9s  %2s  %5s | %4s  %9s  %2s | %3s  %s\n", p["k"].get<int>(),
                  cell(p["depth"]).c_str(), cell(p["predicted_depth"]).c_str(), cell(p["initial_depth"]).c_str(),
                  cell(p["oracle"]["probe_depth"]).c_str(), cell(p["reg"]).c_str(), cell(p["predicted_reg"]).c_str(),
                  cell(p["initial_reg"]).c_str(), cell(p["eq3"]).c_str(), cell(p["symbolic_equal"]).c_str());
    out << line;
  }
  if (r.contains("betti")) {
    for (const auto& b : r["betti"]) {
      out << "betti S/J^" << b["k"] << ":\n" << oracle::to_text(table_of(b["J"]));
      out << "betti S/in(J^" << b["k"] << "):\n" << oracle::to_text(table_of(b["initial"]));
    }
  }
  render_checks(out, r["checks"]);
  const auto& p = r["provenance"];
  out << "field " << p["field"].get<std::string>() << ", seed " << p["seed"] << ", probe trials "
      << p["probe_trials"] << ", second prime " << p["second_prime"] << "\n";
  if (r.contains("timing")) out << "timing: " << r["timing"].dump() << "\n";
  return out.str();
}

std::string render_witness(const nlohmann::json& r, Format format) {
  if (format == Format::kJson) return r.dump() + "\n";
  const auto& w = r["witness"];
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "graph6,k,embedding,symbolic_member,ordinary_member,polynomial\n";
    out << csv_cell(r["graph"]["graph6"]) << ',' << r["k"] << ',';
    if (w.is_string()) {
      out << "none,,,\n";
    } else {
      out << csv_cell(w["embedding"].dump()) << ',' << csv_cell(w["symbolic_member"]) << ','
          << csv_cell(w["ordinary_member"]) << ',' << csv_cell(w["polynomial"]) << "\n";
    }
    return out.str();
  }
  if (w.is_string()) return "none\n";
  out << graph_line(r["graph"]);
  out << "net embedding: " << w["embedding"].dump() << "\n";
  out << "witness (k=" << r["k"] << "): " << w["polynomial"].get<std::string>() << "\n";
  out << "in J^(" << r["k"] << "): " << cell(w["symbolic_member"]) << "\n";
  out << "in J^" << r["k"] << ": " << cell(w["ordinary_member"]) << "\n";
  if (!r["ok"].get<bool>()) out << "FAILED: block graph witness verdicts contradict the theorem\n";
  return out.str();
}

std::string render_betti(const nlohmann::json& r, Format format) {
  if (format == Format::kJson) return r.dump() + "\n";
  std::ostringstream out;
  if (format == Format::kCsv) {
    out << "graph6,k,ideal,i,j,beta\n";
    for (const auto& t : r["tables"])
      for (const char* which : {"J", "initial"}) {
        auto table = table_of(t[which]);
        for (const auto& [ij, beta] : table.entries)
          out << csv_cell(r["graph"]["graph6"]) << ',' << t["k"] << ',' << which << ',' << ij.first << ','
              << ij.second << ',' << beta << "\n";
      }
    return out.str();
  }
  out << graph_line(r["graph"]);
  for (const auto& t : r["tables"]) {
    const auto& j = t["J"];
    const auto& in = t["initial"];
    out << "S/J^" << t["k"] << ": pd " << j["pd"] << ", depth " << j["depth"] << ", reg " << j["reg"] << "\n"
        << oracle::to_text(table_of(j));
    out << "S/in(J^" << t["k"] << "): pd " << in["pd"] << ", depth " << in["depth"] << ", reg " << in["reg"] << "\n"
        << oracle::to_text(table_of(in));
  }
  render_checks(out, r["checks"]);
  out << "field " << r["provenance"]["field"].get<std::string>() << ", seed " << r["provenance"]["seed"] << "\n";
  return out.str();
}

std::string render_enumeration(const EnumerationRun& run, Format format) {
  std::ostringstream out;
  if (format == Format::kJson) {
    for (const auto& r : run.records) out << verdict_json(r).dump() << "\n";
    out << run.summary().dump() << "\n";
    return out.str();
  }
  if (format == Format::kCsv) {
    out << "selector,graph6,n,verdict\n";
    for (const auto& r : run.records)
      out << run.selector.name << ',' << csv_cell(to_graph6(r.graph)) << ',' << r.graph.order() << ',' << r.verdict
          << "\n";
    return out.str();
  }
  const auto& o = run.options;
  out << "selector " << run.selector.name << " (" << (run.selector.theorem ? "theorem" : "question") << "): "
      << run.selector.statement << "\n";
  out << "graphs: " << run.records.size() << (o.connected_only ? " connected" : "") << ", "
      << (o.iso_reduce ? "up to isomorphism" : "labeled") << ", n = " << o.n_min << ".." << o.n_max
      << ", k_max = " << o.k_max << "\n";
  out << "tallies:";
  for (const auto& [verdict, count] : run.tallies) out << ' ' << verdict << ' ' << count;
  out << "\n";
  auto cx = run.counterexamples();
  out << "counterexamples: " << (cx.empty() ? "none" : std::to_string(cx.size())) << "\n";
  for (const auto* r : cx) out << "  " << to_graph6(r->graph) << ' ' << r->detail.dump() << "\n";
  for (const auto& r : run.records)
    if (r.verdict == "capacity") out << "  capacity " << to_graph6(r.graph) << ' ' << r.detail.dump() << "\n";
  if (run.truncated()) {
    out << "truncated: " << run.unprocessed << " graphs unprocessed after " << o.budget_seconds << "s budget\n";
  }
  return out.str();
}

}  // namespace binedge::cli
