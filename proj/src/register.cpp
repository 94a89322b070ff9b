#include "backbone/register.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "backbone/graph_io.hpp"
#include "backbone/parallel.hpp"
#include "backbone/random.hpp"

namespace backbone {

std::string_view lattice_mode_name(LatticeMode m) {
  switch (m) {
    case LatticeMode::planar: return "2D";
    case LatticeMode::bilayer: return "2L";
    case LatticeMode::volume: return "3D";
  }
  return "2D";
}

LatticeMode lattice_mode_from_name(std::string_view s) {
  if (s == "2D" || s == "2d") return LatticeMode::planar;
  if (s == "2L" || s == "2l") return LatticeMode::bilayer;
  if (s == "3D" || s == "3d") return LatticeMode::volume;
  throw InputError("lattice mode must be 2D, 2L or 3D");
}

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(); }

std::vector<int> layer_indices(LatticeMode m) {
  switch (m) {
    case LatticeMode::planar: return {0};
    case LatticeMode::bilayer: return {0, 1};
    case LatticeMode::volume: return {0, 1, -1, 2};
  }
  return {0};
}

int hex_radius_for(double sites) {
  int R = 1;
  while (3.0 * R * (R + 1) + 1 < sites) ++R;
  return R;
}

Coords pad_to(const Coords& c, int dim) {
  if (c.cols() == dim) return c;
  if (c.cols() > dim) throw InputError("placement has more dimensions than the lattice mode");
  Coords out = Coords::Zero(c.rows(), dim);
  out.leftCols(c.cols()) = c;
  return out;
}

int mode_dim(LatticeMode m) { return m == LatticeMode::planar ? 2 : 3; }

Json lattice_json(const EmbedConfig& cfg, int n_atoms, int n_sites, int n_init) {
  const auto layers = layer_indices(cfg.mode);
  Json zs = Json::array();
  for (int k : layers) zs.push_back(k * cfg.gap());
  Json j = {{"kind", "triangular"},
            {"mode", lattice_mode_name(cfg.mode)},
            {"site_spacing", cfg.site_spacing},
            {"hex_radius", hex_radius_for(cfg.site_factor * n_atoms)},
            {"layers", zs},
            {"n_sites", n_sites},
            {"init_sites", n_init}};
  if (cfg.mode != LatticeMode::planar) {
    j["layer_gap"] = cfg.gap();
    j["stacking"] = "AB";
  }
  return j;
}

}  // namespace

Json register_to_json(const Register& r) {
  return {{"coords", coords_to_json(r.coords)}, {"r_b", r.r_b}, {"lattice", r.lattice}, {"node_map", r.node_map}};
}

Register register_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("register must be a JSON object");
  Register r;
  r.coords = coords_from_json(j.at("coords"));
  r.r_b = j.at("r_b").get<double>();
  if (!(r.r_b > 0.0)) throw InputError("register r_b must be positive");
  r.lattice = j.value("lattice", Json::object());
  if (j.contains("node_map")) r.node_map = j.at("node_map").get<std::vector<int>>();
  if (!r.node_map.empty() && static_cast<int>(r.node_map.size()) != r.n())
    throw InputError("register node_map length differs from coords");
  return r;
}

Register register_from_coords(const Coords& coords, double r_b) {
  Register r;
  r.coords = coords;
  r.r_b = r_b;
  r.lattice = {{"kind", "free"}};
  r.node_map.assign(coords.rows(), -1);
  return r;
}

void EmbedConfig::validate() const {
  if (!(r_b > 0.0) || !std::isfinite(r_b)) throw InputError("r_b must be positive");
  if (!(site_spacing > 0.0) || !std::isfinite(site_spacing)) throw InputError("site_spacing must be positive");
  if (!(gap() > 0.0) || !std::isfinite(gap())) throw InputError("layer_gap must be positive");
  if (iterations < 1) throw InputError("iterations must be at least 1");
  if (restarts < 1) throw InputError("restarts must be at least 1");
  if (margin_target && (!(*margin_target >= 1.0) || !std::isfinite(*margin_target)))
    throw InputError("margin_target must be a finite value >= 1");
  if (!(extra_edge_weight >= 0.0) || !std::isfinite(extra_edge_weight)) throw InputError("extra_edge_weight must be >= 0");
  if (!(site_factor >= 1.0)) throw InputError("site_factor must be at least 1");
  if (!(final_temperature_ratio > 0.0 && final_temperature_ratio <= 1.0))
    throw InputError("final_temperature_ratio must lie in (0, 1]");
  if (init && !init->allFinite()) throw InputError("init coords must be finite");
}

EmbedConfig ladder_preset(LatticeMode mode, std::uint64_t seed) {
  EmbedConfig c;
  c.mode = mode;
  c.iterations = 30000;
  c.restarts = 15;
  c.seed = seed;
  return c;
}

Coords lattice_sites(const EmbedConfig& cfg, int n_atoms) {
  cfg.validate();
  const int dim = mode_dim(cfg.mode);
  const double a = cfg.site_spacing;
  const int R = hex_radius_for(cfg.site_factor * std::max(1, n_atoms));

  std::vector<Eigen::Vector3d> pts;
  Coords init;
  if (cfg.init) {
    init = pad_to(*cfg.init, dim);
    for (int i = 0; i < init.rows(); ++i) {
      for (int j = 0; j < i; ++j)
        if ((init.row(i) - init.row(j)).norm() == 0.0) throw InputError("init coords contain coincident points");
      Eigen::Vector3d p = Eigen::Vector3d::Zero();
      p.head(dim) = init.row(i).transpose();
      pts.push_back(p);
    }
  }
  const std::size_t n_init = pts.size();
  for (int k : layer_indices(cfg.mode)) {
    const bool shifted = (k % 2) != 0;
    const double ox = shifted ? a / 2.0 : 0.0;
    const double oy = shifted ? a / (2.0 * std::numbers::sqrt3) : 0.0;
    for (int r = -R; r <= R; ++r)
      for (int q = -R; q <= R; ++q) {
        if (std::abs(q + r) > R) continue;
        const Eigen::Vector3d p(a * (q + 0.5 * r) + ox, a * r * std::numbers::sqrt3 / 2.0 + oy, k * cfg.gap());
        bool clash = false;
        for (std::size_t i = 0; i < n_init && !clash; ++i) clash = (pts[i] - p).norm() < a - 1e-9;
        if (!clash) pts.push_back(p);
      }
  }
  Coords c(pts.size(), dim);
  for (std::size_t i = 0; i < pts.size(); ++i) c.row(i) = pts[i].head(dim).transpose();
  return c;
}

double edge_recall(const Graph& target, const Register& reg) {
  if (reg.n() != target.n()) throw InputError("register size differs from the target graph");
  if (target.num_edges() == 0) return 1.0;
  return udg_check(target, reg.coords, reg.r_b).recall;
}

double blockade_margin(const Register& reg, const Graph& target) {
  if (reg.n() != target.n()) throw InputError("register size differs from the target graph");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < target.n(); ++i)
    for (int j = i + 1; j < target.n(); ++j)
      if (!target.adjacent(i, j)) best = std::min(best, point_distance(reg.coords, i, j));
  return best / reg.r_b;
}

namespace {

struct Placement {
  std::vector<int> site_of;
  std::string init;
};

// Discrete-site annealer. Energy = -(realised target edges) + lambda * hinge,
// hinge = sum over non-edges of max(0, margin_target - d / r_b)^2.
class Annealer {
 public:
  Annealer(const Graph& g, const Coords& sites, const EmbedConfig& cfg)
      : g_(g), cfg_(cfg), n_(g.n()), s_(static_cast<int>(sites.rows())) {
    d_.resize(s_, s_);
    for (int i = 0; i < s_; ++i)
      for (int j = 0; j < s_; ++j) d_(i, j) = (sites.row(i) - sites.row(j)).norm();
    near_.resize(s_);
    for (int i = 0; i < s_; ++i)
      for (int j = 0; j < s_; ++j)
        if (i != j && d_(i, j) <= cfg.r_b) near_[i].push_back(j);
    // Non-edge cost per site pair: the margin hinge (weighted later by the
    // ramped lambda) plus a flat extra-edge charge relative to it.
    use_h_ = cfg.margin_target.has_value() || cfg.extra_edge_weight > 0.0;
    if (use_h_) {
      h_.resize(s_, s_);
      const double flat = cfg.margin_target ? cfg.extra_edge_weight / cfg.margin_penalty : cfg.extra_edge_weight;
      for (int i = 0; i < s_; ++i)
        for (int j = 0; j < s_; ++j) {
          double h = 0.0;
          if (cfg.margin_target) {
            const double short_by = *cfg.margin_target - d_(i, j) / cfg.r_b;
            h = short_by > 0.0 ? short_by * short_by : 0.0;
          }
          if (i != j && d_(i, j) <= cfg.r_b) h += flat;
          h_(i, j) = h;
        }
    }
  }

  struct Outcome {
    std::vector<int> site_of;
    double energy = 0.0;
  };

  Outcome run(std::vector<int> site_of, Rng& rng) const {
    std::vector<int> occ(s_, -1);
    for (int v = 0; v < n_; ++v) occ[site_of[v]] = v;
    const bool hinge = use_h_;
    const bool ramp = cfg_.margin_target.has_value();
    const double lam_end = ramp ? cfg_.margin_penalty : 1.0;

    double realised = 0.0, penalty = 0.0;
    for (const auto& [u, v] : g_.edges()) realised += within(site_of[u], site_of[v]);
    if (use_h_)
      for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
          if (!g_.adjacent(u, v)) penalty += h_(site_of[u], site_of[v]);

    Outcome best{site_of, -realised + lam_end * penalty};
    if (n_ < 1) return best;

    struct Move {
      bool swap = false;
      int v = 0, u = 0, to = 0;
      double dr = 0.0, dp = 0.0;
    };
    const auto propose = [&](Rng& r) {
      Move m;
      const bool can_swap = n_ >= 2;
      const bool can_move = s_ > n_;
      m.swap = can_swap && (!can_move || (r() & 1));
      m.v = uniform_index(r, n_);
      if (m.swap) {
        m.u = uniform_index(r, n_ - 1);
        if (m.u >= m.v) ++m.u;
        delta_swap(site_of, m.v, m.u, hinge, m.dr, m.dp);
      } else if (can_move) {
        // Half the relocations aim at a free site inside the blockade disk of
        // one of v's target neighbours; the rest are uniform.
        m.to = -1;
        if (g_.degree(m.v) > 0 && (r() & 1)) {
          const auto& nb = g_.neighbors(m.v);
          const auto& cand = near_[site_of[nb[uniform_index(r, static_cast<int>(nb.size()))]]];
          if (!cand.empty()) {
            const int t = cand[uniform_index(r, static_cast<int>(cand.size()))];
            if (occ[t] < 0) m.to = t;
          }
        }
        if (m.to < 0) {
          do m.to = uniform_index(r, s_);
          while (occ[m.to] >= 0);
        }
        delta_move(site_of, m.v, m.to, hinge, m.dr, m.dp);
      }
      return m;
    };
    const auto apply = [&](const Move& m) {
      if (m.swap) {
        std::swap(site_of[m.v], site_of[m.u]);
        occ[site_of[m.v]] = m.v;
        occ[site_of[m.u]] = m.u;
      } else {
        occ[site_of[m.v]] = -1;
        site_of[m.v] = m.to;
        occ[m.to] = m.v;
      }
      realised += m.dr;
      penalty += m.dp;
    };

    const int iters = cfg_.iterations;
    const auto lambda_at = [&](int step) {
      if (!hinge) return 0.0;
      if (!ramp) return 1.0;
      const double prog = iters > 1 ? static_cast<double>(step) / (iters - 1) : 1.0;
      return lam_end * (0.1 + 0.9 * prog);
    };

    // Initial temperature from the spread of 100 random-move deltas.
    double t0;
    {
      double sum = 0.0, sq = 0.0;
      const int samples = 100;
      for (int i = 0; i < samples; ++i) {
        const Move m = propose(rng);
        const double de = -m.dr + lambda_at(0) * m.dp;
        sum += de;
        sq += de * de;
      }
      const double mean = sum / samples;
      const double var = std::max(0.0, sq / samples - mean * mean);
      t0 = var > 0.0 ? std::sqrt(var) : 1.0;
    }
    const double cool = iters > 1 ? std::pow(cfg_.final_temperature_ratio, 1.0 / (iters - 1)) : 1.0;

    double temp = t0;
    for (int step = 0; step < iters; ++step, temp *= cool) {
      const Move m = propose(rng);
      const double de = -m.dr + lambda_at(step) * m.dp;
      if (de <= 0.0 || uniform01(rng) < std::exp(-de / temp)) {
        apply(m);
        const double e = -realised + lam_end * penalty;
        if (e < best.energy - 1e-9) {
          best.energy = e;
          best.site_of = site_of;
        }
      }
    }
    return best;
  }

  double distance(int a, int b) const { return d_(a, b); }
  int sites() const { return s_; }

 private:
  double within(int a, int b) const { return d_(a, b) <= cfg_.r_b ? 1.0 : 0.0; }

  void delta_move(const std::vector<int>& site_of, int v, int to, bool hinge, double& dr, double& dp) const {
    const int from = site_of[v];
    for (int u : g_.neighbors(v)) dr += within(to, site_of[u]) - within(from, site_of[u]);
    if (!hinge) return;
    for (int u = 0; u < n_; ++u)
      if (u != v && !g_.adjacent(u, v)) dp += h_(to, site_of[u]) - h_(from, site_of[u]);
  }

  void delta_swap(const std::vector<int>& site_of, int v, int u, bool hinge, double& dr, double& dp) const {
    const int sv = site_of[v], su = site_of[u];
    for (int w : g_.neighbors(v))
      if (w != u) dr += within(su, site_of[w]) - within(sv, site_of[w]);
    for (int w : g_.neighbors(u))
      if (w != v) dr += within(sv, site_of[w]) - within(su, site_of[w]);
    if (!hinge) return;
    for (int w = 0; w < n_; ++w) {
      if (w == u || w == v) continue;
      if (!g_.adjacent(w, v)) dp += h_(su, site_of[w]) - h_(sv, site_of[w]);
      if (!g_.adjacent(w, u)) dp += h_(sv, site_of[w]) - h_(su, site_of[w]);
    }
  }

  const Graph& g_;
  const EmbedConfig& cfg_;
  int n_;
  int s_;
  Eigen::MatrixXd d_;
  Eigen::MatrixXd h_;
  std::vector<std::vector<int>> near_;
  bool use_h_ = false;
};

// Greedy projection: vertices nearest the layout centre claim their nearest free site first.
std::vector<int> project_to_sites(const Coords& layout, const Coords& sites) {
  const int n = static_cast<int>(layout.rows());
  const Eigen::RowVectorXd c = layout.colwise().mean();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> rad(n);
  for (int v = 0; v < n; ++v) rad[v] = (layout.row(v) - c).norm();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rad[a] < rad[b]; });
  std::vector<char> used(sites.rows(), 0);
  std::vector<int> site_of(n, -1);
  for (int v : order) {
    int best = -1;
    double bd = 0.0;
    for (int s = 0; s < sites.rows(); ++s) {
      if (used[s]) continue;
      const double d = (sites.row(s) - layout.row(v)).squaredNorm();
      if (best < 0 || d < bd) {
        best = s;
        bd = d;
      }
    }
    used[best] = 1;
    site_of[v] = best;
  }
  return site_of;
}

// Fruchterman-Reingold layout in `dim` dimensions, scaled so the mean edge
// length equals `edge_length` and centred on `centre`.
Coords spring_layout(const Graph& g, int dim, double edge_length, const Eigen::RowVectorXd& centre, Rng& rng) {
  const int n = g.n();
  Coords pos(n, dim);
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < dim; ++d) pos(i, d) = uniform01(rng) - 0.5;
  const double k = std::pow(1.0 / std::max(1, n), 1.0 / dim);
  const int iters = 300;
  for (int it = 0; it < iters; ++it) {
    const double t = 0.1 * (1.0 - static_cast<double>(it) / iters) + 1e-4;
    Coords disp = Coords::Zero(n, dim);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Eigen::RowVectorXd delta = pos.row(i) - pos.row(j);
        const double dist = std::max(delta.norm(), 1e-6);
        const Eigen::RowVectorXd f = delta / dist * (k * k / dist);
        disp.row(i) += f;
        disp.row(j) -= f;
      }
    for (const auto& [u, v] : g.edges()) {
      Eigen::RowVectorXd delta = pos.row(u) - pos.row(v);
      const double dist = std::max(delta.norm(), 1e-6);
      const Eigen::RowVectorXd f = delta / dist * (dist * dist / k);
      disp.row(u) -= f;
      disp.row(v) += f;
    }
    for (int i = 0; i < n; ++i) {
      const double len = disp.row(i).norm();
      if (len > 0.0) pos.row(i) += disp.row(i) / len * std::min(len, t);
    }
  }
  double mean_edge = 0.0;
  for (const auto& [u, v] : g.edges()) mean_edge += (pos.row(u) - pos.row(v)).norm();
  mean_edge = g.num_edges() > 0 ? mean_edge / g.num_edges() : k;
  const double scale = mean_edge > 0.0 ? edge_length / mean_edge : 1.0;
  const Eigen::RowVectorXd c = pos.colwise().mean();
  for (int i = 0; i < n; ++i) pos.row(i) = (pos.row(i) - c) * scale + centre;
  return pos;
}

std::vector<int> random_placement(int n, int sites, Rng& rng) {
  std::vector<int> perm(sites);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = sites - 1; i > 0; --i) std::swap(perm[i], perm[uniform_index(rng, i + 1)]);
  perm.resize(n);
  return perm;
}

std::vector<int> match_sites(const Coords& placement, const Coords& sites) {
  std::vector<int> site_of(placement.rows(), -1);
  std::vector<char> used(sites.rows(), 0);
  for (int v = 0; v < placement.rows(); ++v) {
    for (int s = 0; s < sites.rows(); ++s)
      if (!used[s] && (sites.row(s) - placement.row(v)).norm() <= 1e-9) {
        site_of[v] = s;
        used[s] = 1;
        break;
      }
    if (site_of[v] < 0) throw InputError("seed placement is not on the lattice");
  }
  return site_of;
}

bool better(const RestartScore& a, const RestartScore& b, bool by_energy) {
  if (by_energy && a.energy != b.energy) return a.energy < b.energy;
  if (a.recall != b.recall) return a.recall > b.recall;
  if (a.margin != b.margin) return a.margin > b.margin;
  return a.restart < b.restart;
}

EmbedResult finish(const Graph& target, const EmbedConfig& cfg, Register reg) {
  EmbedResult r;
  r.mode = cfg.mode;
  const UdgCheck chk = udg_check(target, reg.coords, reg.r_b);
  r.recall = target.num_edges() == 0 ? 1.0 : chk.recall;
  r.missing_edges = chk.missing_edges;
  r.extra_edges = chk.extra_edges;
  r.margin = blockade_margin(reg, target);
  r.reg = std::move(reg);
  return r;
}

EmbedResult embed_one(const Graph& target, const EmbedConfig& cfg, const std::optional<Coords>& seed_coords) {
  cfg.validate();
  const int n = target.n();
  const int dim = mode_dim(cfg.mode);
  const Coords sites = lattice_sites(cfg, n);
  const int n_init = cfg.init ? static_cast<int>(cfg.init->rows()) : 0;
  if (cfg.init && n_init != n) throw InputError("init coords must have one row per target vertex");
  if (n > sites.rows()) throw InputError("infeasible lattice: fewer sites than target vertices");

  Register empty;
  empty.coords = Coords(0, dim);
  empty.r_b = cfg.r_b;
  empty.lattice = lattice_json(cfg, n, static_cast<int>(sites.rows()), n_init);
  if (n == 0) return finish(target, cfg, empty);

  std::vector<std::string> kinds;
  if (seed_coords) kinds.push_back("seeded");
  if (cfg.init) kinds.push_back("given");
  for (int i = 0; static_cast<int>(kinds.size()) < cfg.restarts; ++i) kinds.push_back(i % 2 == 0 ? "spring" : "random");
  kinds.resize(cfg.restarts);

  const Annealer ann(target, sites, cfg);
  const Eigen::RowVectorXd centre = sites.colwise().mean();
  std::vector<Annealer::Outcome> outs(cfg.restarts);
  std::vector<RestartScore> scores(cfg.restarts);

  parallel_for(cfg.restarts, cfg.threads, [&](int r) {
    Rng rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(r));
    std::vector<int> start;
    if (kinds[r] == "seeded") {
      start = match_sites(pad_to(*seed_coords, dim), sites);
    } else if (kinds[r] == "given") {
      start.resize(n);
      std::iota(start.begin(), start.end(), 0);  // init rows lead the site list
    } else if (kinds[r] == "spring" && target.num_edges() > 0) {
      start = project_to_sites(spring_layout(target, dim, cfg.site_spacing, centre, rng), sites);
    } else {
      start = random_placement(n, static_cast<int>(sites.rows()), rng);
    }
    outs[r] = ann.run(std::move(start), rng);

    Register reg = empty;
    reg.coords.resize(n, dim);
    for (int v = 0; v < n; ++v) reg.coords.row(v) = sites.row(outs[r].site_of[v]);
    scores[r].restart = r;
    scores[r].init = kinds[r];
    scores[r].recall = edge_recall(target, reg);
    scores[r].margin = blockade_margin(reg, target);
    scores[r].energy = outs[r].energy;
  });

  const bool by_energy = cfg.margin_target.has_value();
  int best = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (better(scores[r], scores[best], by_energy)) best = r;

  Register reg = empty;
  reg.coords.resize(n, dim);
  reg.node_map = outs[best].site_of;
  for (int v = 0; v < n; ++v) reg.coords.row(v) = sites.row(outs[best].site_of[v]);
  EmbedResult res = finish(target, cfg, std::move(reg));
  res.best_restart = best;
  res.restarts = std::move(scores);
  return res;
}

}  // namespace

std::vector<EmbedResult> embed_ladder(const Graph& target, const EmbedConfig& cfg) {
  cfg.validate();
  std::vector<EmbedResult> out;
  std::optional<Coords> seed;
  for (LatticeMode m : {LatticeMode::planar, LatticeMode::bilayer, LatticeMode::volume}) {
    EmbedConfig c = cfg;
    c.mode = m;
    out.push_back(embed_one(target, c, seed));
    seed = out.back().reg.coords;
    if (m == cfg.mode) break;
  }
  return out;
}

EmbedResult sa_embed(const Graph& target, const EmbedConfig& cfg) { return embed_ladder(target, cfg).back(); }

Json embed_result_to_json(const EmbedResult& r) {
  Json missing = Json::array(), extra = Json::array(), restarts = Json::array();
  for (const auto& [u, v] : r.missing_edges) missing.push_back({u, v});
  for (const auto& [u, v] : r.extra_edges) extra.push_back({u, v});
  for (const auto& s : r.restarts)
    restarts.push_back({{"restart", s.restart},
                        {"init", s.init},
                        {"recall", s.recall},
                        {"margin", finite_or_null(s.margin)},
                        {"energy", s.energy}});
  return {{"mode", lattice_mode_name(r.mode)},
          {"register", register_to_json(r.reg)},
          {"recall", r.recall},
          {"margin", finite_or_null(r.margin)},
          {"missing_edges", missing},
          {"extra_edges", extra},
          {"best_restart", r.best_restart},
          {"restarts", restarts}};
}

std::vector<MarginSweepRow> margin_sweep(const Graph& target, const std::vector<double>& targets, const EmbedConfig& cfg) {
  if (!std::is_sorted(targets.begin(), targets.end())) throw InputError("margin targets must be sorted ascending");
  std::vector<MarginSweepRow> rows;
  for (double t : targets) {
    MarginSweepRow row;
    row.target_margin = t;
    try {
      EmbedConfig c = cfg;
      c.margin_target = t;
      const EmbedResult r = sa_embed(target, c);
      row.achieved_margin = r.margin;
      row.recall = r.recall;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HardwareProfile hardware_profile_from_json(const Json& j) {
  HardwareProfile p;
  if (!j.is_object()) throw InputError("hardware profile must be a JSON object");
  p.max_atoms = j.value("max_atoms", p.max_atoms);
  p.fov_radius = j.value("fov_radius", p.fov_radius);
  p.min_spacing = j.value("min_spacing", p.min_spacing);
  p.tolerance = j.value("tolerance", p.tolerance);
  return p;
}

Json hardware_profile_to_json(const HardwareProfile& p) {
  return {{"max_atoms", p.max_atoms}, {"fov_radius", p.fov_radius}, {"min_spacing", p.min_spacing}, {"tolerance", p.tolerance}};
}

std::vector<Violation> hardware_validate(const Register& reg, const HardwareProfile& profile) {
  std::vector<Violation> out;
  const int n = reg.n();
  if (n > profile.max_atoms)
    out.push_back({"atom_count", std::to_string(n) + " atoms exceed the limit of " + std::to_string(profile.max_atoms), {}});
  if (n == 0) return out;
  const Eigen::RowVectorXd c = reg.coords.colwise().mean();
  Violation fov{"field_of_view", "", {}};
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = (reg.coords.row(i) - c).norm();
    if (r > profile.fov_radius + profile.tolerance) {
      fov.atoms.push_back(i);
      worst = std::max(worst, r);
    }
  }
  if (!fov.atoms.empty()) {
    fov.detail = std::to_string(fov.atoms.size()) + " atoms outside the " + std::to_string(profile.fov_radius) +
                 " um field of view (max " + std::to_string(worst) + " um)";
    out.push_back(std::move(fov));
  }
  Violation sp{"min_spacing", "", {}};
  double closest = std::numeric_limits<double>::infinity();
  int pairs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d = point_distance(reg.coords, i, j);
      if (d < profile.min_spacing - profile.tolerance) {
        ++pairs;
        closest = std::min(closest, d);
        sp.atoms.push_back(i);
        sp.atoms.push_back(j);
      }
    }
  if (pairs > 0) {
    sp.detail = std::to_string(pairs) + " atom pairs closer than " + std::to_string(profile.min_spacing) + " um (min " +
                std::to_string(closest) + " um)";
    out.push_back(std::move(sp));
  }
  return out;
}

}  // namespace backbone
