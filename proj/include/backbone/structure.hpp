#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "backbone/graph.hpp"
#include "backbone/random.hpp"

namespace backbone {

// ---- null models ----

enum class NullModel { er, config };

std::string_view null_model_name(NullModel m);

struct NullTrial {
  std::uint64_t seed = 0;  // per-trial stream seed derived from (seed, trial index)
  int alpha = 0;
  std::int64_t accepted_swaps = 0;  // config model only
  bool flagged = false;             // excluded from empirical_p
  std::string flag_reason;
};

struct NullEnsembleStats {
  NullModel model = NullModel::er;
  int trials = 0;
  int real_alpha = 0;
  std::vector<NullTrial> per_trial;
  double empirical_p = 1.0;  // (#{alpha <= real} + 1) / (unflagged + 1)
  int flagged = 0;

  std::vector<int> alpha_values() const;
  std::map<int, int> alpha_histogram() const;
  int count_greater_than_real() const;
};

// Uniform graph with exactly n vertices and m edges, G(n, m).
Graph sample_gnm(int n, int m, Rng& rng);

struct RewireResult {
  Graph graph;
  std::int64_t accepted = 0;
  bool complete = false;  // reached the requested number of accepted swaps
};

// Degree-preserving double-edge swaps on a simple graph; proposals that
// would create a self-loop or multi-edge are rejected.
RewireResult double_edge_swap(const Graph& g, std::int64_t target_swaps, std::int64_t max_attempts, Rng& rng);

struct NullOptions {
  double time_limit_s = 0.0;     // per-trial exact solve
  int swaps_per_edge = 10;       // config model: accepted swaps >= swaps_per_edge * E
  int attempts_per_swap = 100;   // config model: proposal budget per required swap
  int threads = 0;               // 0: hardware concurrency
};

NullEnsembleStats er_null(const Graph& g, int trials, std::uint64_t seed, const NullOptions& opt = {});
NullEnsembleStats config_null(const Graph& g, int trials, std::uint64_t seed, const NullOptions& opt = {});

// ---- subset-selection baselines ----

// Gonzalez farthest-first traversal. Starts from the vertex with the largest
// total distance (ties -> lowest index).
VertexList k_center_select(const Eigen::MatrixXd& dist, int size);

// Greedy maximisation of sum_u max_{c in S} sim[u][c] (ties -> lowest index).
VertexList facility_location_select(const Eigen::MatrixXd& sim, int size);

// |a ∩ b| / |b|, where b is the reference backbone; 0 when b is empty.
double overlap(std::span<const int> a, std::span<const int> b);

// Shortest-path hop counts; unreachable pairs get n.
Eigen::MatrixXd hop_distance(const Graph& g);

enum class BaselineMethod { k_center, facility_location };

std::string_view baseline_name(BaselineMethod m);

struct BaselineComparison {
  BaselineMethod method = BaselineMethod::k_center;
  VertexList selected;
  double overlap_with_backbone = 0.0;
  int adjacency_violations = 0;  // selected pairs that are edges of g
};

BaselineComparison compare_baseline(BaselineMethod method, VertexList selected, std::span<const int> backbone,
                                    const Graph& g);

}  // namespace backbone
