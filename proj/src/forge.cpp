#include "backbone/forge.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "backbone/random.hpp"
#include "backbone/structure.hpp"

namespace backbone {

namespace {

constexpr std::array<std::string_view, 18> kNames = {
    "king",       "extended_king", "sqrt5_king",       "centered_hex",       "kagome",    "snub_square",
    "planar_grid", "hub_spoke",    "sierpinski",       "disjoint_cliques",   "complete_bipartite",
    "cycle_chords", "hypercube",   "dodecahedron",     "bilayer_king",       "double_domination",
    "random_regular", "edgeless",
};

ParamInfo req_int(std::string name, std::string desc) { return {std::move(name), "int", Json(), std::move(desc)}; }
ParamInfo opt_int(std::string name, int def, std::string desc) { return {std::move(name), "int", def, std::move(desc)}; }
ParamInfo opt_float(std::string name, double def, std::string desc) {
  return {std::move(name), "float", def, std::move(desc)};
}

std::vector<FamilyInfo> build_catalogue() {
  const auto rc = [] { return std::vector<ParamInfo>{req_int("rows", "lattice rows"), req_int("cols", "lattice columns")}; };
  std::vector<FamilyInfo> c;
  c.push_back({Family::king, "king", "square lattice with diagonal neighbours; radius a*sqrt(2) + 0.01a", true, 2, false, rc()});
  c.push_back({Family::extended_king, "extended_king", "square lattice, Chebyshev distance <= 2; radius 2*sqrt(2)*a*(1+1e-3)",
               true, 2, false, rc()});
  c.push_back({Family::sqrt5_king, "sqrt5_king", "square lattice with reach sqrt(5)*a; radius a*sqrt(5) + 0.01a", true, 2,
               false, rc()});
  c.push_back({Family::centered_hex, "centered_hex", "hexagonal patch of a triangular lattice; N = 3R(R+1)+1", true, 2,
               false, {req_int("radius", "hex radius R >= 1")}});
  {
    auto p = rc();
    p.push_back(opt_int("target_n", 0, "trim boundary vertices down to this count (0 keeps the full patch)"));
    c.push_back({Family::kagome, "kagome", "kagome (3.6.3.6) patch of rows x cols cells, 3 sites per cell", true, 2, false, p});
    c.push_back({Family::snub_square, "snub_square", "snub-square (3.3.4.3.4) patch of rows x cols cells, 4 sites per cell",
                 true, 2, false, p});
  }
  c.push_back({Family::planar_grid, "planar_grid", "square lattice, nearest neighbours only", true, 2, false, rc()});
  c.push_back({Family::hub_spoke, "hub_spoke", "disjoint hubs, each with radial path arms", true, 2, false,
               {req_int("hubs", "number of hubs"), req_int("spokes", "arms per hub, 1..5"),
                req_int("arm", "vertices per arm")}});
  c.push_back({Family::sierpinski, "sierpinski", "self-similar triangle graph with N = 3^depth (corner-bridged copies)",
               true, 2, false, {req_int("depth", "recursion depth, 1..7")}});
  c.push_back({Family::disjoint_cliques, "disjoint_cliques", "count disjoint copies of K_size", true, 2, false,
               {req_int("count", "number of cliques"), req_int("size", "clique size")}});
  c.push_back({Family::complete_bipartite, "complete_bipartite", "K_{left,right}", false, 0, false,
               {req_int("left", "left part size"), req_int("right", "right part size")}});
  c.push_back({Family::cycle_chords, "cycle_chords", "cycle C_n plus an explicit chord list", false, 0, false,
               {req_int("n", "cycle length"), {"chords", "edges", Json::array(), "extra edges as [u, v] pairs"}}});
  c.push_back({Family::hypercube, "hypercube", "hypercube graph Q_dim", false, 0, false, {req_int("dim", "dimension, 0..16")}});
  c.push_back({Family::dodecahedron, "dodecahedron", "regular dodecahedron skeleton in 3D", true, 3, false, {}});
  {
    auto p = rc();
    p.push_back(opt_float("layer_gap", 3.0, "vertical layer separation in um"));
    c.push_back({Family::bilayer_king, "bilayer_king", "two stacked king layers; radius sqrt(2a^2 + h^2) + 0.01a", true, 3,
                 false, p});
  }
  c.push_back({Family::double_domination, "double_domination",
               "independent backbone whose vertex pairs jointly dominate clique groups; the backbone is the unique MIS",
               false, 0, true,
               {req_int("backbone", "backbone size >= 2"), opt_int("extras", -1, "non-backbone vertices (-1: 2*backbone)"),
                opt_float("cross_probability", 0.3, "edge probability between vertices of different groups")}});
  c.push_back({Family::random_regular, "random_regular", "degree-regular graph from a rewired circulant", false, 0, true,
               {req_int("n", "vertex count"), req_int("degree", "vertex degree")}});
  c.push_back({Family::edgeless, "edgeless", "n isolated vertices", false, 0, false, {req_int("n", "vertex count")}});
  return c;
}

// Resolved parameters: declared keys only, defaults filled, types checked.
Json resolve_params(const FamilyInfo& info, const Json& given) {
  if (!given.is_object()) throw InputError("params must be an object");
  for (const auto& [k, v] : given.items()) {
    const bool known = std::any_of(info.params.begin(), info.params.end(), [&](const ParamInfo& p) { return p.name == k; });
    if (!known) throw InputError("unknown parameter '" + k + "' for family " + info.name);
  }
  Json out = Json::object();
  for (const auto& p : info.params) {
    Json v = given.contains(p.name) ? given.at(p.name) : p.default_value;
    if (v.is_null()) throw InputError("missing parameter '" + p.name + "' for family " + info.name);
    if (p.type == "int") {
      if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) v = static_cast<std::int64_t>(v.get<double>());
      if (!v.is_number_integer()) throw InputError("parameter '" + p.name + "' must be an integer");
    } else if (p.type == "float") {
      if (!v.is_number() || !std::isfinite(v.get<double>())) throw InputError("parameter '" + p.name + "' must be a number");
      v = v.get<double>();
    } else if (p.type == "edges") {
      if (!v.is_array()) throw InputError("parameter '" + p.name + "' must be a list of pairs");
      for (const auto& e : v)
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
          throw InputError("parameter '" + p.name + "' must be a list of integer pairs");
    }
    out[p.name] = v;
  }
  return out;
}

int get_int(const Json& p, const char* k, int lo, int hi) {
  const auto v = p.at(k).get<std::int64_t>();
  if (v < lo || v > hi)
    throw InputError(std::string("parameter '") + k + "' out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

struct Built {
  int n = 0;
  std::vector<Edge> edges;
  std::optional<Coords> coords;
  double radius = 0.0;
};

Built from_coords(Coords c, double radius) {
  const Graph g = geometric_adjacency(c, radius);
  return {g.n(), g.edges(), std::move(c), radius};
}

Coords square_lattice(int rows, int cols, double a) {
  Coords c(rows * cols, 2);
  for (int r = 0; r < rows; ++r)
    for (int q = 0; q < cols; ++q) c.row(r * cols + q) << q * a, r * a;
  return c;
}

// Repeatedly drop the boundary vertex (degree < bulk) with the greatest
// (y, x) until target vertices remain.
Coords trim_patch(Coords c, double radius, int bulk_degree, int target) {
  if (target <= 0 || target >= c.rows()) {
    if (target > c.rows()) throw InputError("target_n exceeds the patch size");
    return c;
  }
  std::vector<int> alive(c.rows());
  for (int i = 0; i < c.rows(); ++i) alive[i] = i;
  while (static_cast<int>(alive.size()) > target) {
    int drop = -1;
    for (int ii = 0; ii < static_cast<int>(alive.size()); ++ii) {
      const int i = alive[ii];
      int deg = 0;
      for (int j : alive)
        if (j != i && point_distance(c, i, j) <= radius) ++deg;
      if (deg >= bulk_degree) continue;
      if (drop < 0) {
        drop = ii;
        continue;
      }
      const int d = alive[drop];
      if (c(i, 1) > c(d, 1) || (c(i, 1) == c(d, 1) && c(i, 0) > c(d, 0))) drop = ii;
    }
    if (drop < 0) throw InputError("trim: no boundary vertex left");
    alive.erase(alive.begin() + drop);
  }
  Coords out(alive.size(), c.cols());
  for (int i = 0; i < static_cast<int>(alive.size()); ++i) out.row(i) = c.row(alive[i]);
  return out;
}

Built build_king(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 1000), cols = get_int(p, "cols", 1, 1000);
  return from_coords(square_lattice(rows, cols, a), a * std::numbers::sqrt2 + 0.01 * a);
}

Built build_extended_king(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 1000), cols = get_int(p, "cols", 1, 1000);
  // Chebyshev <= 2 includes the (2, 2) offset at 2*sqrt(2)*a.
  return from_coords(square_lattice(rows, cols, a), 2.0 * std::numbers::sqrt2 * a * (1.0 + 1e-3));
}

Built build_sqrt5_king(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 1000), cols = get_int(p, "cols", 1, 1000);
  return from_coords(square_lattice(rows, cols, a), a * std::sqrt(5.0) + 0.01 * a);
}

Built build_planar_grid(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 1000), cols = get_int(p, "cols", 1, 1000);
  return from_coords(square_lattice(rows, cols, a), 1.01 * a);
}

Built build_centered_hex(const Json& p, double a) {
  const int R = get_int(p, "radius", 1, 200);
  std::vector<std::array<double, 2>> pts;
  for (int r = -R; r <= R; ++r)
    for (int q = -R; q <= R; ++q)
      if (std::abs(q + r) <= R) pts.push_back({a * (q + 0.5 * r), a * r * std::numbers::sqrt3 / 2.0});
  Coords c(pts.size(), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) c.row(i) << pts[i][0], pts[i][1];
  return from_coords(std::move(c), 1.01 * a);
}

Built build_kagome(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 500), cols = get_int(p, "cols", 1, 500);
  const int target = get_int(p, "target_n", 0, 3 * rows * cols);
  Coords c(3 * rows * cols, 2);
  int k = 0;
  for (int r = 0; r < rows; ++r)
    for (int q = 0; q < cols; ++q) {
      const double ox = 2.0 * a * q + a * r, oy = std::numbers::sqrt3 * a * r;
      c.row(k++) << ox, oy;
      c.row(k++) << ox + a, oy;
      c.row(k++) << ox + 0.5 * a, oy + std::numbers::sqrt3 / 2.0 * a;
    }
  const double radius = 1.01 * a;
  return from_coords(trim_patch(std::move(c), radius, 4, target), radius);
}

Built build_snub_square(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 500), cols = get_int(p, "cols", 1, 500);
  const int target = get_int(p, "target_n", 0, 4 * rows * cols);
  const double s = std::numbers::sqrt2 / 4.0, t = std::sqrt(6.0) / 4.0;
  const double L = (std::numbers::sqrt2 + std::sqrt(6.0)) / 2.0;
  const std::array<std::array<double, 2>, 4> basis = {{{s, t}, {t, L - s}, {L - t, s}, {L - s, L - t}}};
  Coords c(4 * rows * cols, 2);
  int k = 0;
  for (int r = 0; r < rows; ++r)
    for (int q = 0; q < cols; ++q)
      for (const auto& b : basis) c.row(k++) << a * (q * L + b[0]), a * (r * L + b[1]);
  const double radius = 1.01 * a;
  return from_coords(trim_patch(std::move(c), radius, 5, target), radius);
}

Built build_hub_spoke(const Json& p, double a) {
  const int hubs = get_int(p, "hubs", 1, 1000), spokes = get_int(p, "spokes", 1, 5), arm = get_int(p, "arm", 1, 1000);
  const int per = 1 + spokes * arm;
  Coords c(hubs * per, 2);
  const double pitch = (2.0 * arm + 2.0) * a;
  int k = 0;
  for (int h = 0; h < hubs; ++h) {
    const double cx = h * pitch;
    c.row(k++) << cx, 0.0;
    for (int s = 0; s < spokes; ++s) {
      const double th = 2.0 * std::numbers::pi * s / spokes + std::numbers::pi / 2.0;
      for (int j = 1; j <= arm; ++j) c.row(k++) << cx + j * a * std::cos(th), j * a * std::sin(th);
    }
  }
  return from_coords(std::move(c), 1.01 * a);
}

Built build_sierpinski(const Json& p, double a) {
  const int depth = get_int(p, "depth", 1, 7);
  // Level 1 is a unit triangle; level k places three level-(k-1) copies at
  // offsets (L + a) along 0 and 60 degrees so that facing corners are a apart.
  std::vector<std::array<double, 2>> pts = {{0.0, 0.0}, {a, 0.0}, {a / 2.0, a * std::numbers::sqrt3 / 2.0}};
  double L = a;
  for (int level = 2; level <= depth; ++level) {
    const double off = L + a;
    std::vector<std::array<double, 2>> next;
    next.reserve(pts.size() * 3);
    const std::array<std::array<double, 2>, 3> shifts = {{{0.0, 0.0}, {off, 0.0}, {off / 2.0, off * std::numbers::sqrt3 / 2.0}}};
    for (const auto& sh : shifts)
      for (const auto& q : pts) next.push_back({q[0] + sh[0], q[1] + sh[1]});
    pts = std::move(next);
    L = 2.0 * L + a;
  }
  Coords c(pts.size(), 2);
  for (std::size_t i = 0; i < pts.size(); ++i) c.row(i) << pts[i][0], pts[i][1];
  return from_coords(std::move(c), 1.01 * a);
}

Built build_disjoint_cliques(const Json& p, double a) {
  const int count = get_int(p, "count", 1, 100000), size = get_int(p, "size", 1, 1000);
  const int per_row = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  Coords c(count * size, 2);
  const double rc = 0.45 * a;
  for (int k = 0; k < count; ++k) {
    const double cx = 3.0 * a * (k % per_row), cy = 3.0 * a * (k / per_row);
    for (int j = 0; j < size; ++j) {
      const double th = 2.0 * std::numbers::pi * j / size;
      c.row(k * size + j) << cx + (size > 1 ? rc * std::cos(th) : 0.0), cy + (size > 1 ? rc * std::sin(th) : 0.0);
    }
  }
  return from_coords(std::move(c), a);
}

Built build_dodecahedron(double a) {
  const double phi = std::numbers::phi, ip = 1.0 / phi;
  std::vector<std::array<double, 3>> v;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) v.push_back({double(sx), double(sy), double(sz)});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      v.push_back({0.0, s1 * ip, s2 * phi});
      v.push_back({s1 * ip, s2 * phi, 0.0});
      v.push_back({s1 * phi, 0.0, s2 * ip});
    }
  // Edge length of this embedding is 2/phi.
  const double scale = a * phi / 2.0;
  Coords c(v.size(), 3);
  for (std::size_t i = 0; i < v.size(); ++i) c.row(i) << scale * v[i][0], scale * v[i][1], scale * v[i][2];
  return from_coords(std::move(c), 1.01 * a);
}

Built build_bilayer_king(const Json& p, double a) {
  const int rows = get_int(p, "rows", 1, 1000), cols = get_int(p, "cols", 1, 1000);
  const double h = p.at("layer_gap").get<double>();
  if (h <= 0.0) throw InputError("layer_gap must be positive");
  const int layer = rows * cols;
  Coords c(2 * layer, 3);
  for (int z = 0; z < 2; ++z)
    for (int r = 0; r < rows; ++r)
      for (int q = 0; q < cols; ++q) c.row(z * layer + r * cols + q) << q * a, r * a, z * h;
  const double radius = std::sqrt(2.0 * a * a + h * h) + 0.01 * a;
  if (radius >= std::min(2.0 * a, std::sqrt(4.0 * a * a + h * h)))
    throw InputError("layer_gap too large for an exact bilayer king realisation");
  return from_coords(std::move(c), radius);
}

Built build_complete_bipartite(const Json& p) {
  const int l = get_int(p, "left", 1, 100000), r = get_int(p, "right", 1, 100000);
  Built b;
  b.n = l + r;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < r; ++j) b.edges.push_back({i, l + j});
  return b;
}

Built build_cycle_chords(const Json& p) {
  const int n = get_int(p, "n", 3, 1000000);
  Built b;
  b.n = n;
  for (int i = 0; i < n; ++i) b.edges.push_back({i, (i + 1) % n});
  for (const auto& e : p.at("chords")) b.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  return b;
}

Built build_hypercube(const Json& p) {
  const int d = get_int(p, "dim", 0, 16);
  Built b;
  b.n = 1 << d;
  for (int v = 0; v < b.n; ++v)
    for (int i = 0; i < d; ++i)
      if (!(v >> i & 1)) b.edges.push_back({v, v | (1 << i)});
  return b;
}

Built build_double_domination(const Json& p, std::uint64_t seed) {
  const int nb = get_int(p, "backbone", 2, 100000);
  const int ex_raw = get_int(p, "extras", -1, 1000000);
  const int extras = ex_raw < 0 ? 2 * nb : ex_raw;
  const double prob = p.at("cross_probability").get<double>();
  if (prob < 0.0 || prob > 1.0) throw InputError("cross_probability must lie in [0, 1]");

  // Backbone vertices 0..nb-1 are split into disjoint pairs (a triple at the
  // end when nb is odd). Each pair owns a clique group whose members are all
  // adjacent to both pair vertices, so using a group vertex costs at least
  // two backbone vertices.
  const int groups = nb / 2;
  std::vector<std::vector<int>> owners(groups);
  for (int gi = 0; gi < groups; ++gi) owners[gi] = {2 * gi, 2 * gi + 1};
  if (nb % 2) owners.back().push_back(nb - 1);

  Built b;
  b.n = nb + extras;
  std::vector<int> group_of(extras);
  std::vector<std::vector<int>> members(groups);
  for (int x = 0; x < extras; ++x) {
    group_of[x] = x % groups;
    members[x % groups].push_back(nb + x);
  }
  for (int gi = 0; gi < groups; ++gi) {
    const auto& m = members[gi];
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int o : owners[gi]) b.edges.push_back({o, m[i]});
      for (std::size_t j = i + 1; j < m.size(); ++j) b.edges.push_back({m[i], m[j]});
    }
  }
  Rng rng = stream_rng(seed, 0);
  for (int x = 0; x < extras; ++x)
    for (int y = x + 1; y < extras; ++y)
      if (group_of[x] != group_of[y] && uniform01(rng) < prob) b.edges.push_back({nb + x, nb + y});
  return b;
}

Built build_random_regular(const Json& p, std::uint64_t seed) {
  const int n = get_int(p, "n", 1, 1000000), d = get_int(p, "degree", 0, 1000000);
  if (d >= n) throw InputError("degree must be below n");
  if ((static_cast<std::int64_t>(n) * d) % 2) throw InputError("n * degree must be even");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= d / 2; ++k) edges.push_back({i, (i + k) % n});
    if (d % 2 && i < n / 2) edges.push_back({i, i + n / 2});
  }
  const Graph circ(n, std::move(edges));
  Rng rng = stream_rng(seed, 0);
  const std::int64_t target = 10LL * circ.num_edges();
  const RewireResult rw = double_edge_swap(circ, target, 100 * target, rng);
  return {n, rw.graph.edges(), std::nullopt, 0.0};
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

Family family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<Family>(i);
  throw InputError("unknown family: " + std::string(name));
}

const std::vector<FamilyInfo>& catalogue() {
  static const std::vector<FamilyInfo> c = build_catalogue();
  return c;
}

const FamilyInfo& family_info(Family f) { return catalogue()[static_cast<std::size_t>(f)]; }

Graph generate(const DesignSpec& spec) {
  const FamilyInfo& info = family_info(spec.family);
  const Json p = resolve_params(info, spec.params);
  const double a = spec.spacing;
  if (!(a > 0.0) || !std::isfinite(a)) throw InputError("spacing must be positive");
  if (info.randomized && !spec.seed) throw InputError("family " + info.name + " requires a seed");

  Built b;
  switch (spec.family) {
    case Family::king: b = build_king(p, a); break;
    case Family::extended_king: b = build_extended_king(p, a); break;
    case Family::sqrt5_king: b = build_sqrt5_king(p, a); break;
    case Family::centered_hex: b = build_centered_hex(p, a); break;
    case Family::kagome: b = build_kagome(p, a); break;
    case Family::snub_square: b = build_snub_square(p, a); break;
    case Family::planar_grid: b = build_planar_grid(p, a); break;
    case Family::hub_spoke: b = build_hub_spoke(p, a); break;
    case Family::sierpinski: b = build_sierpinski(p, a); break;
    case Family::disjoint_cliques: b = build_disjoint_cliques(p, a); break;
    case Family::complete_bipartite: b = build_complete_bipartite(p); break;
    case Family::cycle_chords: b = build_cycle_chords(p); break;
    case Family::hypercube: b = build_hypercube(p); break;
    case Family::dodecahedron: b = build_dodecahedron(a); break;
    case Family::bilayer_king: b = build_bilayer_king(p, a); break;
    case Family::double_domination: b = build_double_domination(p, *spec.seed); break;
    case Family::random_regular: b = build_random_regular(p, *spec.seed); break;
    case Family::edgeless: b.n = get_int(p, "n", 0, 10000000); break;
  }

  GraphAttributes attrs;
  attrs.metadata = {{"family", info.name}, {"params", p}};
  if (info.randomized) attrs.metadata["seed"] = *spec.seed;
  if (b.coords) {
    attrs.metadata["spacing"] = a;
    attrs.metadata["radius"] = b.radius;
    attrs.coords = std::move(b.coords);
  }
  return Graph(b.n, std::move(b.edges), std::move(attrs));
}

std::optional<int> family_alpha_formula(const DesignSpec& spec) {
  const FamilyInfo& info = family_info(spec.family);
  const Json p = resolve_params(info, spec.params);
  const auto half_up = [](int x) { return (x + 1) / 2; };
  switch (spec.family) {
    case Family::king: return half_up(get_int(p, "rows", 1, 1000)) * half_up(get_int(p, "cols", 1, 1000));
    case Family::planar_grid: return half_up(get_int(p, "rows", 1, 1000) * get_int(p, "cols", 1, 1000));
    case Family::disjoint_cliques: return get_int(p, "count", 1, 100000);
    case Family::complete_bipartite:
      return std::max(get_int(p, "left", 1, 100000), get_int(p, "right", 1, 100000));
    case Family::hypercube: {
      const int d = get_int(p, "dim", 0, 16);
      return d == 0 ? 1 : 1 << (d - 1);
    }
    case Family::edgeless: return get_int(p, "n", 0, 10000000);
    default: return std::nullopt;
  }
}

namespace design {

namespace {
DesignSpec make(Family f, Json params, double spacing = 5.0) {
  DesignSpec s;
  s.family = f;
  s.params = std::move(params);
  s.spacing = spacing;
  return s;
}
}  // namespace

DesignSpec king(int rows, int cols, double spacing) { return make(Family::king, {{"rows", rows}, {"cols", cols}}, spacing); }
DesignSpec extended_king(int rows, int cols, double spacing) {
  return make(Family::extended_king, {{"rows", rows}, {"cols", cols}}, spacing);
}
DesignSpec sqrt5_king(int rows, int cols, double spacing) {
  return make(Family::sqrt5_king, {{"rows", rows}, {"cols", cols}}, spacing);
}
DesignSpec centered_hex(int radius, double spacing) { return make(Family::centered_hex, {{"radius", radius}}, spacing); }
DesignSpec kagome(int rows, int cols, int target_n, double spacing) {
  return make(Family::kagome, {{"rows", rows}, {"cols", cols}, {"target_n", target_n}}, spacing);
}
DesignSpec snub_square(int rows, int cols, int target_n, double spacing) {
  return make(Family::snub_square, {{"rows", rows}, {"cols", cols}, {"target_n", target_n}}, spacing);
}
DesignSpec planar_grid(int rows, int cols, double spacing) {
  return make(Family::planar_grid, {{"rows", rows}, {"cols", cols}}, spacing);
}
DesignSpec hub_spoke(int hubs, int spokes, int arm, double spacing) {
  return make(Family::hub_spoke, {{"hubs", hubs}, {"spokes", spokes}, {"arm", arm}}, spacing);
}
DesignSpec sierpinski(int depth, double spacing) { return make(Family::sierpinski, {{"depth", depth}}, spacing); }
DesignSpec disjoint_cliques(int count, int size, double spacing) {
  return make(Family::disjoint_cliques, {{"count", count}, {"size", size}}, spacing);
}
DesignSpec complete_bipartite(int left, int right) {
  return make(Family::complete_bipartite, {{"left", left}, {"right", right}});
}
DesignSpec cycle_chords(int n, std::vector<Edge> chords) {
  Json c = Json::array();
  for (const auto& [u, v] : chords) c.push_back({u, v});
  return make(Family::cycle_chords, {{"n", n}, {"chords", c}});
}
DesignSpec hypercube(int dim) { return make(Family::hypercube, {{"dim", dim}}); }
DesignSpec dodecahedron(double spacing) { return make(Family::dodecahedron, Json::object(), spacing); }
DesignSpec bilayer_king(int rows, int cols, double spacing, double layer_gap) {
  return make(Family::bilayer_king, {{"rows", rows}, {"cols", cols}, {"layer_gap", layer_gap}}, spacing);
}
DesignSpec double_domination(int backbone, int extras, double cross_probability, std::uint64_t seed) {
  DesignSpec s = make(Family::double_domination,
                      {{"backbone", backbone}, {"extras", extras}, {"cross_probability", cross_probability}});
  s.seed = seed;
  return s;
}
DesignSpec random_regular(int n, int degree, std::uint64_t seed) {
  DesignSpec s = make(Family::random_regular, {{"n", n}, {"degree", degree}});
  s.seed = seed;
  return s;
}
DesignSpec edgeless(int n) { return make(Family::edgeless, {{"n", n}}); }

}  // namespace design

}  // namespace backbone
