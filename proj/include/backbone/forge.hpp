#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

enum class Family {
  king,
  extended_king,
  sqrt5_king,
  centered_hex,
  kagome,
  snub_square,
  planar_grid,
  hub_spoke,
  sierpinski,
  disjoint_cliques,
  complete_bipartite,
  cycle_chords,
  hypercube,
  dodecahedron,
  bilayer_king,
  double_domination,
  random_regular,
  edgeless,
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);

// A generator request. `params` holds family-specific integers / floats /
// lists (see catalogue()); spacing is the nearest-neighbour distance in μm.
struct DesignSpec {
  Family family = Family::king;
  Json params = Json::object();
  double spacing = 5.0;
  std::optional<std::uint64_t> seed;  // randomised families only
};

struct ParamInfo {
  std::string name;
  std::string type;  // "int", "float", "edges"
  Json default_value;  // null => required
  std::string description;
};

struct FamilyInfo {
  Family family;
  std::string name;
  std::string description;
  bool geometric = false;  // emits coordinates realising the graph exactly
  int dimension = 0;       // 2 or 3 when geometric
  bool randomized = false;
  std::vector<ParamInfo> params;
};

const std::vector<FamilyInfo>& catalogue();
const FamilyInfo& family_info(Family f);

// Deterministic for a fixed spec. Geometric families carry coords and
// metadata.radius such that udg_check(g, coords, radius) is exact.
Graph generate(const DesignSpec& spec);

// Closed-form independence number where one is known.
std::optional<int> family_alpha_formula(const DesignSpec& spec);

// Spec builders for the common families.
namespace design {
DesignSpec king(int rows, int cols, double spacing = 5.0);
DesignSpec extended_king(int rows, int cols, double spacing = 5.0);
DesignSpec sqrt5_king(int rows, int cols, double spacing = 5.0);
DesignSpec centered_hex(int radius, double spacing = 5.0);
DesignSpec kagome(int rows, int cols, int target_n = 0, double spacing = 5.0);
DesignSpec snub_square(int rows, int cols, int target_n = 0, double spacing = 5.0);
DesignSpec planar_grid(int rows, int cols, double spacing = 5.0);
DesignSpec hub_spoke(int hubs, int spokes, int arm, double spacing = 5.0);
DesignSpec sierpinski(int depth, double spacing = 5.0);
DesignSpec disjoint_cliques(int count, int size, double spacing = 5.0);
DesignSpec complete_bipartite(int left, int right);
DesignSpec cycle_chords(int n, std::vector<Edge> chords);
DesignSpec hypercube(int dim);
DesignSpec dodecahedron(double spacing = 5.0);
DesignSpec bilayer_king(int rows, int cols, double spacing = 5.0, double layer_gap = 3.0);
DesignSpec double_domination(int backbone, int extras, double cross_probability, std::uint64_t seed);
DesignSpec random_regular(int n, int degree, std::uint64_t seed);
DesignSpec edgeless(int n);
}  // namespace design

}  // namespace backbone
