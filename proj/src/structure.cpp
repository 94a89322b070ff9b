#include "backbone/structure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_set>

#include "backbone/mis.hpp"
#include "backbone/parallel.hpp"

namespace backbone {

std::string_view null_model_name(NullModel m) { return m == NullModel::er ? "er" : "config"; }

std::string_view baseline_name(BaselineMethod m) {
  return m == BaselineMethod::k_center ? "k_center" : "facility_location";
}

std::vector<int> NullEnsembleStats::alpha_values() const {
  std::vector<int> out;
  for (const auto& t : per_trial) out.push_back(t.alpha);
  return out;
}

std::map<int, int> NullEnsembleStats::alpha_histogram() const {
  std::map<int, int> h;
  for (const auto& t : per_trial)
    if (!t.flagged) ++h[t.alpha];
  return h;
}

int NullEnsembleStats::count_greater_than_real() const {
  int c = 0;
  for (const auto& t : per_trial)
    if (!t.flagged && t.alpha > real_alpha) ++c;
  return c;
}

namespace {

Edge pair_from_index(std::int64_t idx, int n) {
  // Row-major enumeration of i < j.
  int i = 0;
  std::int64_t row = n - 1;
  while (idx >= row) {
    idx -= row;
    ++i;
    --row;
  }
  return {i, i + 1 + static_cast<int>(idx)};
}

std::uint64_t key(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

void finish_p(NullEnsembleStats& s) {
  int valid = 0;
  int le = 0;
  s.flagged = 0;
  for (const auto& t : s.per_trial) {
    if (t.flagged) {
      ++s.flagged;
      continue;
    }
    ++valid;
    if (t.alpha <= s.real_alpha) ++le;
  }
  s.empirical_p = static_cast<double>(le + 1) / (valid + 1);
}

}  // namespace

Graph sample_gnm(int n, int m, Rng& rng) {
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > total) throw InputError("sample_gnm: edge count out of range");
  // Floyd's sampling of m distinct pair indices.
  std::unordered_set<std::int64_t> chosen;
  std::vector<std::int64_t> order;
  for (std::int64_t j = total - m; j < total; ++j) {
    const std::int64_t t = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(j + 1));
    const std::int64_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    order.push_back(pick);
  }
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (auto idx : order) edges.push_back(pair_from_index(idx, n));
  return Graph(n, std::move(edges));
}

RewireResult double_edge_swap(const Graph& g, std::int64_t target_swaps, std::int64_t max_attempts, Rng& rng) {
  const int n = g.n();
  std::vector<Edge> edges = g.edges();
  RewireResult out;
  if (edges.size() < 2) {
    out.graph = Graph(n, edges, g.attributes());
    out.complete = target_swaps <= 0;
    return out;
  }
  std::unordered_set<std::uint64_t> present;
  for (const auto& [u, v] : edges) present.insert(key(u, v, n));

  const int m = static_cast<int>(edges.size());
  for (std::int64_t attempt = 0; attempt < max_attempts && out.accepted < target_swaps; ++attempt) {
    const int i = uniform_index(rng, m);
    const int j = uniform_index(rng, m);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (rng() & 1) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    if (present.count(key(a, d, n)) || present.count(key(c, b, n))) continue;
    present.erase(key(a, b, n));
    present.erase(key(c, d, n));
    present.insert(key(a, d, n));
    present.insert(key(c, b, n));
    edges[i] = {std::min(a, d), std::max(a, d)};
    edges[j] = {std::min(c, b), std::max(c, b)};
    ++out.accepted;
  }
  out.complete = out.accepted >= target_swaps;
  GraphAttributes attrs;
  attrs.labels = g.labels();
  out.graph = Graph(n, std::move(edges), std::move(attrs));
  return out;
}

NullEnsembleStats er_null(const Graph& g, int trials, std::uint64_t seed, const NullOptions& opt) {
  if (trials < 1) throw InputError("er_null: trials must be at least 1");
  NullEnsembleStats s;
  s.model = NullModel::er;
  s.trials = trials;
  s.real_alpha = solve_exact(g).alpha;
  s.per_trial.resize(trials);
  parallel_for(trials, opt.threads, [&](int t) {
    NullTrial& tr = s.per_trial[t];
    tr.seed = stream_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(tr.seed);
    const Graph null = sample_gnm(g.n(), g.num_edges(), rng);
    const MisResult r = solve_exact(null, opt.time_limit_s);
    tr.alpha = r.alpha;
    if (!r.exact()) {
      tr.flagged = true;
      tr.flag_reason = "solver time limit";
    }
  });
  finish_p(s);
  return s;
}

NullEnsembleStats config_null(const Graph& g, int trials, std::uint64_t seed, const NullOptions& opt) {
  if (trials < 1) throw InputError("config_null: trials must be at least 1");
  if (g.num_edges() < 2) throw InputError("config_null: graph needs at least two edges");
  NullEnsembleStats s;
  s.model = NullModel::config;
  s.trials = trials;
  s.real_alpha = solve_exact(g).alpha;
  const std::int64_t target = static_cast<std::int64_t>(opt.swaps_per_edge) * g.num_edges();
  const std::int64_t budget = target * std::max(1, opt.attempts_per_swap);
  s.per_trial.resize(trials);
  parallel_for(trials, opt.threads, [&](int t) {
    NullTrial& tr = s.per_trial[t];
    tr.seed = stream_seed(seed, static_cast<std::uint64_t>(t));
    Rng rng(tr.seed);
    const RewireResult rw = double_edge_swap(g, target, budget, rng);
    tr.accepted_swaps = rw.accepted;
    const MisResult r = solve_exact(rw.graph, opt.time_limit_s);
    tr.alpha = r.alpha;
    if (!rw.complete) {
      tr.flagged = true;
      tr.flag_reason = "insufficient accepted swaps";
    } else if (!r.exact()) {
      tr.flagged = true;
      tr.flag_reason = "solver time limit";
    }
  });
  finish_p(s);
  return s;
}

namespace {

void check_square_symmetric(const Eigen::MatrixXd& m, const char* what, bool zero_diagonal) {
  if (m.rows() != m.cols() || m.rows() == 0) throw InputError(std::string(what) + ": matrix must be square and non-empty");
  if (!m.allFinite()) throw InputError(std::string(what) + ": non-finite entry");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw InputError(std::string(what) + ": matrix is not symmetric");
  if (zero_diagonal && m.diagonal().cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InputError(std::string(what) + ": diagonal must be zero");
}

}  // namespace

VertexList k_center_select(const Eigen::MatrixXd& dist, int size) {
  check_square_symmetric(dist, "k_center_select", true);
  const int n = static_cast<int>(dist.rows());
  if (size < 1 || size > n) throw InputError("k_center_select: size out of range");

  const Eigen::VectorXd totals = dist.rowwise().sum();
  int start = 0;
  for (int v = 1; v < n; ++v)
    if (totals(v) > totals(start)) start = v;

  VertexList sel{start};
  std::vector<char> taken(n, 0);
  taken[start] = 1;
  Eigen::VectorXd mind = dist.col(start);
  while (static_cast<int>(sel.size()) < size) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!taken[v] && (pick < 0 || mind(v) > mind(pick))) pick = v;
    sel.push_back(pick);
    taken[pick] = 1;
    mind = mind.cwiseMin(dist.col(pick));
  }
  return sel;
}

VertexList facility_location_select(const Eigen::MatrixXd& sim, int size) {
  check_square_symmetric(sim, "facility_location_select", false);
  const int n = static_cast<int>(sim.rows());
  if (size < 1 || size > n) throw InputError("facility_location_select: size out of range");

  Eigen::VectorXd cover = Eigen::VectorXd::Constant(n, -std::numeric_limits<double>::infinity());
  std::vector<char> taken(n, 0);
  VertexList sel;
  while (static_cast<int>(sel.size()) < size) {
    int pick = -1;
    double best = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      const double f = cover.cwiseMax(sim.col(v)).sum();
      if (pick < 0 || f > best) {
        best = f;
        pick = v;
      }
    }
    sel.push_back(pick);
    taken[pick] = 1;
    cover = cover.cwiseMax(sim.col(pick));
  }
  return sel;
}

double overlap(std::span<const int> a, std::span<const int> b) {
  VertexList sa(a.begin(), a.end());
  VertexList sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
  std::sort(sb.begin(), sb.end());
  sb.erase(std::unique(sb.begin(), sb.end()), sb.end());
  if (sb.empty()) return 0.0;
  VertexList common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(sb.size());
}

Eigen::MatrixXd hop_distance(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd d = Eigen::MatrixXd::Constant(n, n, static_cast<double>(n));
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int u : g.neighbors(v))
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0) d(s, v) = dist[v];
  }
  return d;
}

BaselineComparison compare_baseline(BaselineMethod method, VertexList selected, std::span<const int> backbone,
                                    const Graph& g) {
  BaselineComparison c;
  c.method = method;
  c.adjacency_violations = count_internal_edges(g, selected);
  c.overlap_with_backbone = overlap(selected, backbone);
  c.selected = std::move(selected);
  return c;
}

}  // namespace backbone
