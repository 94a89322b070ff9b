#include <doctest.h>

#include <algorithm>

#include "backbone/mis.hpp"
#include "backbone/structure.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  return d;
}

Graph perfect_matching(int pairs) {
  std::vector<Edge> e;
  for (int i = 0; i < pairs; ++i) e.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * pairs, e);
}

Eigen::MatrixXd euclid(const std::vector<std::pair<double, double>>& p) {
  const int n = static_cast<int>(p.size());
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = std::hypot(p[i].first - p[j].first, p[i].second - p[j].second);
  return d;
}

double fl_objective(const Eigen::MatrixXd& sim, const VertexList& s) {
  double f = 0;
  for (int u = 0; u < sim.rows(); ++u) {
    double m = -1e300;
    for (int c : s) m = std::max(m, sim(u, c));
    f += m;
  }
  return f;
}

}  // namespace

TEST_CASE("sample_gnm gives exactly m edges") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = stream_rng(s, 0);
    const Graph g = sample_gnm(15, static_cast<int>(s * 5), rng);
    CHECK(g.num_edges() == static_cast<int>(s * 5));
  }
  Rng rng = stream_rng(1, 0);
  CHECK_THROWS_AS(sample_gnm(4, 7, rng), InputError);
}

TEST_CASE("er_null") {
  const NullEnsembleStats e = er_null(Graph(6, {}), 3, 1);
  CHECK(e.alpha_values() == std::vector<int>{6, 6, 6});
  CHECK(e.empirical_p == 1.0);

  const Graph planted = build_knn_graph(planted_cluster_vectors(), planted_knn());
  const NullEnsembleStats s = er_null(planted, 30, 7);
  CHECK(s.real_alpha == 4);
  std::vector<int> a = s.alpha_values();
  std::sort(a.begin(), a.end());
  CHECK(a[a.size() / 2] > 4);

  CHECK(er_null(planted, 12, 3, {.threads = 1}).alpha_values() == er_null(planted, 12, 3, {.threads = 4}).alpha_values());
}

TEST_CASE("config_null preserves degrees") {
  const NullEnsembleStats m = config_null(perfect_matching(6), 10, 2);
  for (int a : m.alpha_values()) CHECK(a == 6);

  const NullEnsembleStats st = config_null(star(5), 3, 2);
  CHECK(st.flagged == 3);
  for (const auto& t : st.per_trial) CHECK(t.flagged);

  const Graph planted = build_knn_graph(planted_cluster_vectors(), planted_knn());
  const auto deg = degrees(planted);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = stream_rng(s, 0);
    const RewireResult r = double_edge_swap(planted, 10 * planted.num_edges(), 1000 * planted.num_edges(), rng);
    CHECK(r.complete);
    CHECK(degrees(r.graph) == deg);
  }
  const NullEnsembleStats c = config_null(planted, 20, 5);
  CHECK(c.flagged == 0);
  for (int a : c.alpha_values()) CHECK(a >= 4);
  CHECK_THROWS_AS(config_null(Graph(3, {{0, 1}}), 2, 1), InputError);
}

TEST_CASE("empirical p counts alpha at or below the real value") {
  const Graph planted = build_knn_graph(planted_cluster_vectors(), planted_knn());
  const NullEnsembleStats s = er_null(planted, 25, 11);
  int le = 0;
  for (int a : s.alpha_values()) le += a <= s.real_alpha;
  CHECK(s.empirical_p == doctest::Approx((le + 1.0) / (25 + 1.0)));
}

TEST_CASE("k_center_select") {
  const auto rect = euclid({{0, 0}, {10, 0}, {0, 1}, {10, 1}});
  CHECK(k_center_select(rect, 4).size() == 4);
  const VertexList two = k_center_select(rect, 2);
  CHECK(rect(two[0], two[1]) == doctest::Approx(std::hypot(10.0, 1.0)));

  const auto line = euclid({{0, 0}, {1, 0}, {5, 0}});
  CHECK(k_center_select(line, 1) == VertexList{2});

  Eigen::MatrixXd bad = rect;
  bad(0, 1) = 3;
  CHECK_THROWS_AS(k_center_select(bad, 2), InputError);
  CHECK_THROWS_AS(k_center_select(rect, 0), InputError);
}

TEST_CASE("facility_location_select") {
  const auto pts = euclid({{0, 0}, {0.1, 0}, {0, 0.1}, {10, 10}, {10.1, 10}});
  const Eigen::MatrixXd sim = (-pts.array()).matrix();
  CHECK(facility_location_select(sim, 5).size() == 5);
  const VertexList two = facility_location_select(sim, 2);
  CHECK((two[0] < 3) != (two[1] < 3));
  // Brute force over pairs: the best pair also takes one point per cluster.
  double best = -1e300;
  VertexList arg;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (const double f = fl_objective(sim, {i, j}); f > best) {
        best = f;
        arg = {i, j};
      }
  CHECK((arg[0] < 3) != (arg[1] < 3));

  CHECK(facility_location_select(Eigen::MatrixXd::Constant(6, 6, 0.5), 3) == VertexList{0, 1, 2});
}

TEST_CASE("overlap") {
  CHECK(overlap(VertexList{1, 2}, VertexList{1, 2}) == 1.0);
  CHECK(overlap(VertexList{1, 2}, VertexList{3}) == 0.0);
  CHECK(overlap(VertexList{1, 2, 3}, VertexList{3, 4, 5, 6}) == 0.25);
  CHECK(overlap(VertexList{1}, VertexList{}) == 0.0);
}

TEST_CASE("baselines break independence on the planted fixture") {
  const EmbeddingMatrix e = planted_cluster_vectors();
  const Graph g = build_knn_graph(e, planted_knn());
  const MisResult mis = solve_exact(g);
  CHECK(count_internal_edges(g, mis.witness) == 0);
  const Eigen::MatrixXd sim = cosine_matrix(e);
  Eigen::MatrixXd dist = (1.0 - sim.array()).matrix();
  dist.diagonal().setZero();
  const auto kc = compare_baseline(BaselineMethod::k_center, k_center_select(dist, mis.alpha), mis.witness, g);
  const auto fl = compare_baseline(BaselineMethod::facility_location, facility_location_select(sim, mis.alpha),
                                   mis.witness, g);
  CHECK(kc.adjacency_violations >= 1);
  CHECK(fl.adjacency_violations >= 1);
  CHECK(kc.overlap_with_backbone < 1.0);
  CHECK(fl.overlap_with_backbone < 1.0);
}

TEST_CASE("hop distances") {
  const Eigen::MatrixXd h = hop_distance(Graph(4, {{0, 1}, {1, 2}}));
  CHECK(h(0, 2) == 2);
  CHECK(h(0, 3) == 4);
  CHECK(h(3, 3) == 0);
}
