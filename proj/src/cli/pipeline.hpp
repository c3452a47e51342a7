#pragma once

#include <chrono>
#include <string>

#include "binedge/cli.hpp"
#include "binedge/errors.hpp"
#include "binedge/oracle.hpp"

namespace binedge::cli::detail {

// Runs f, prefixing the stage name to any CapacityError it raises.
template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const CapacityError& e) {
    throw CapacityError(name + ": " + e.what());
  }
}

// Oracle pass over J^k and in(J^k) with the self-consistency checks.
struct PowerOracle {
  int k = 0;
  oracle::BettiTable j;        // over the selected field, or QQ after a fallback
  oracle::BettiTable initial;  // S/in(J^k)
  int probe_j = 0;
  int probe_initial = 0;
  std::uint32_t probe_prime = 0;
  bool eq3 = false;  // in(J^k) == (in J)^k
  bool semicontinuous = false;
  bool hilbert = false;
  bool two_primes = false;
  bool rational_fallback = false;
  std::uint32_t second_prime = 0;
  bool differentials = false;

  bool probes_agree() const { return probe_j == j.depth && probe_initial == initial.depth; }
  bool consistent() const { return semicontinuous && hilbert && two_primes && differentials && probes_agree(); }
  nlohmann::json checks_json() const;
};
PowerOracle power_oracle(const Graph& g, int k, const Options& options);

// Ordered check list of a report.
struct Checks {
  nlohmann::json list = nlohmann::json::array();
  bool ok = true;
  void add(const std::string& name, bool passed, nlohmann::json detail = nullptr);
};

nlohmann::json graph_json(const Graph& g);
nlohmann::json table_json(const oracle::BettiTable& t);

// g relabeled to a closed labeling when one exists.
struct Labeled {
  Graph graph;
  bool closed = false;
  std::vector<int> sigma;  // sigma[v] = new label; empty when not closed
};
Labeled closed_relabeling(const Graph& g);

// The reduced basis of J_G is the set of monic 2-minors, computed mod the
// current prime.
bool quadratic_gb(const Graph& g);
// Buchberger's criterion on the 2-minors alone; exits at the first S-pair
// that does not reduce to zero, so it is the cheap form for rejections.
bool generators_pass_buchberger(const Graph& g);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace binedge::cli::detail
