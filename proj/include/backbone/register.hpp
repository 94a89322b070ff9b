#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

enum class LatticeMode { planar, bilayer, volume };  // 2D, 2L, 3D

std::string_view lattice_mode_name(LatticeMode m);  // "2D", "2L", "3D"
LatticeMode lattice_mode_from_name(std::string_view s);

// Physical atom placement. coords has one row per graph vertex; node_map[v]
// is the index of the lattice site vertex v occupies (-1 for free placement).
struct Register {
  Coords coords;
  double r_b = 8.0;
  Json lattice = Json::object();
  std::vector<int> node_map;

  int n() const { return static_cast<int>(coords.rows()); }
};

Json register_to_json(const Register& r);
Register register_from_json(const Json& j);

// Register placed directly at a graph's own coordinates.
Register register_from_coords(const Coords& coords, double r_b);

struct EmbedConfig {
  LatticeMode mode = LatticeMode::planar;
  double r_b = 8.0;
  double site_spacing = 5.0;
  std::optional<double> layer_gap;  // default 0.8 * r_b
  int iterations = 20000;
  int restarts = 10;
  std::uint64_t seed = 0;
  std::optional<double> margin_target;  // >= 1; adds the non-edge hinge penalty
  double margin_penalty = 20.0;         // final hinge weight, ramped from 10% during cooling
  double extra_edge_weight = 0.0;       // cost per realised non-edge inside r_b (0: recall only)
  double site_factor = 2.0;             // lattice patch holds at least site_factor * N sites
  double final_temperature_ratio = 1e-3;
  std::optional<Coords> init;  // candidate placement for restart 0, merged into the site set
  int threads = 0;

  double gap() const { return layer_gap.value_or(0.8 * r_b); }
  void validate() const;
};

// 30,000 iterations x 15 restarts.
EmbedConfig ladder_preset(LatticeMode mode, std::uint64_t seed);

struct RestartScore {
  int restart = 0;
  std::string init;  // "given", "seeded", "spring", "random"
  double recall = 0.0;
  double margin = 0.0;
  double energy = 0.0;  // final-weight objective, lower is better
};

struct EmbedResult {
  LatticeMode mode = LatticeMode::planar;
  Register reg;
  double recall = 1.0;
  std::vector<Edge> missing_edges;
  std::vector<Edge> extra_edges;
  double margin = std::numeric_limits<double>::infinity();
  int best_restart = 0;
  std::vector<RestartScore> restarts;
};

Json embed_result_to_json(const EmbedResult& r);

// Site set used for a given mode and target size (rows are site positions).
Coords lattice_sites(const EmbedConfig& cfg, int n_atoms);

// SA placement onto lattice sites. In 2L mode one restart is seeded from the
// best 2D placement, in 3D mode from the best 2L placement (itself seeded
// from 2D), so best recall never decreases along 2D -> 2L -> 3D.
EmbedResult sa_embed(const Graph& target, const EmbedConfig& cfg);

// The full 2D, 2L, 3D chain up to cfg.mode, one result per mode.
std::vector<EmbedResult> embed_ladder(const Graph& target, const EmbedConfig& cfg);

double edge_recall(const Graph& target, const Register& reg);

// Smallest non-edge distance over r_b; +infinity when the target has no non-edge.
double blockade_margin(const Register& reg, const Graph& target);

struct MarginSweepRow {
  double target_margin = 1.0;
  double achieved_margin = 0.0;
  double recall = 0.0;
  std::optional<double> near_valid_proxy;  // filled only from shot data downstream
  bool ok = true;
  std::string error;
};

std::vector<MarginSweepRow> margin_sweep(const Graph& target, const std::vector<double>& targets, const EmbedConfig& cfg);

struct HardwareProfile {
  int max_atoms = 100;
  double fov_radius = 46.0;  // um from the register centroid
  double min_spacing = 5.0;  // um
  double tolerance = 1e-6;   // um slack on both distance checks
};

HardwareProfile hardware_profile_from_json(const Json& j);
Json hardware_profile_to_json(const HardwareProfile& p);

struct Violation {
  std::string kind;  // "atom_count", "field_of_view", "min_spacing"
  std::string detail;
  std::vector<int> atoms;
};

std::vector<Violation> hardware_validate(const Register& reg, const HardwareProfile& profile = {});

}  // namespace backbone
