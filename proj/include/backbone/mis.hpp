#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

struct SearchStats {
  std::int64_t nodes = 0;
  double wall_seconds = 0.0;
  bool timed_out = false;
};

struct MisResult {
  int alpha = 0;        // exact unless stats.timed_out, then a lower bound
  VertexList witness;   // independent set of size alpha
  SearchStats stats;

  bool exact() const { return !stats.timed_out; }
};

// Branch and bound with greedy clique-cover bounds. time_limit_s <= 0 means
// no limit. Deterministic for a fixed graph.
MisResult solve_exact(const Graph& g, double time_limit_s = 0.0);

// Same search restricted to the induced subgraph on `allowed`.
MisResult solve_exact_within(const Graph& g, std::span<const int> allowed, double time_limit_s = 0.0);

struct OptimaEnumeration {
  int alpha = 0;
  std::vector<VertexList> solutions;  // sorted vertex lists, in search order
  int cap = 500;
  bool hit_cap = false;
  SearchStats stats;  // timed_out => solutions is a partial list
};

// All maximum independent sets, up to `cap`. Branches on a maximum-degree
// vertex ("in" first, then "out"), pruning branches whose clique-cover bound
// cannot reach alpha.
OptimaEnumeration enumerate_optima(const Graph& g, int cap = 500, double time_limit_s = 0.0);
OptimaEnumeration enumerate_optima(const Graph& g, int alpha, int cap, double time_limit_s);

struct RigidityReport {
  int alpha = 0;
  VertexList witness;
  VertexList core;          // persistent core: vertices in every maximum independent set
  double rho = 1.0;         // |core| / alpha, 1 for alpha = 0
  std::int64_t n_optima = 0;
  bool n_optima_exact = false;  // false => n_optima is a lower bound
  bool hit_cap = false;
  bool certified = false;       // every per-vertex exclusion solve completed
  std::int64_t certify_nodes = 0;
};

// Per-vertex exclusion test: v is in the core iff alpha(g - v) = alpha - 1.
// Only witness vertices can belong to the core. A vertex whose solve times
// out is left out of the core and certified is cleared. Requires an exact
// `solved`.
RigidityReport certify_core(const Graph& g, const MisResult& solved, double per_vertex_limit_s = 0.0,
                            int threads = 0);

// Core as the intersection of enumerated optima; exact only below the cap.
VertexList intersect_optima(const OptimaEnumeration& e, int n);

inline double rho_of(std::size_t core_size, int alpha) {
  return alpha == 0 ? 1.0 : static_cast<double>(core_size) / alpha;
}

struct RigidityOptions {
  int cap = 500;
  double time_limit_s = 0.0;
  double per_vertex_limit_s = 0.0;
  int threads = 0;
};

// solve_exact + enumerate_optima + certify_core, merged into one report.
RigidityReport analyze_rigidity(const Graph& g, const RigidityOptions& opt = {});

enum class GreedyRule {
  delete_max_degree,  // delete a max-degree vertex until the residual graph is edgeless
  select_max_degree,  // take a max-degree vertex, drop its neighbourhood, repeat
};

VertexList greedy_mis(const Graph& g, GreedyRule rule = GreedyRule::delete_max_degree);

struct SaMisSchedule {
  int steps = 20000;
  double initial_acceptance = 0.8;
  double final_temperature_ratio = 1e-3;  // T_end / T0, geometric cooling
  double violation_penalty = 2.0;
};

// Simulated annealing over add / drop / swap moves with a penalty per violated
// edge; the best feasible state is completed to a maximal independent set.
VertexList sa_mis(const Graph& g, const SaMisSchedule& schedule, std::uint64_t seed);

// |s| / alpha for an independent s; throws ValidityError otherwise.
double approximation_ratio(std::span<const int> s, const Graph& g, int alpha);
double approximation_ratio(std::span<const int> s, const Graph& g);

}  // namespace backbone
