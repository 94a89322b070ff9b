#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "backbone/graph_io.hpp"
#include "backbone/textgraph.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

EmbeddingMatrix rows(std::initializer_list<std::initializer_list<double>> r) {
  const int n = static_cast<int>(r.size());
  const int d = static_cast<int>(r.begin()->size());
  Eigen::MatrixXd m(n, d);
  int i = 0;
  for (const auto& row : r) {
    int j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return make_embeddings(m);
}

EmbeddingMatrix random_vectors(int n, int d, std::uint64_t seed) {
  Rng rng = stream_rng(seed, 9);
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::MatrixXd m(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = N(rng);
  return make_embeddings(m);
}

std::set<Edge> edge_set(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

KnnConfig cfg(int k, double t, KnnMode mode) {
  KnnConfig c;
  c.k = k;
  c.t = t;
  c.mode = mode;
  return c;
}

}  // namespace

TEST_CASE("cosine_matrix") {
  const auto e = rows({{1, 2, 3}, {1, 2, 3}, {-3, 0, 1}});
  const auto S = cosine_matrix(e);
  CHECK(S(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(S(0, 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(S(1, 1) == 1.0);
  CHECK((S - S.transpose()).cwiseAbs().maxCoeff() <= 1e-9);

  const auto h = cosine_matrix(rows({{1, 0}, {1, 1}}));
  CHECK(std::abs(h(0, 1) - std::sqrt(2.0) / 2.0) < 1e-7);  // float32 storage

  CHECK_THROWS_AS(cosine_matrix(rows({{1, 0}, {0, 0}})), InputError);
}

TEST_CASE("build_knn_graph examples") {
  const auto two = rows({{1, 0}, {0.3, 1}});
  for (auto mode : {KnnMode::union_, KnnMode::mutual}) {
    const Graph g = build_knn_graph(two, cfg(1, -1.0, mode));
    CHECK(g.num_edges() == 1);
  }

  // Two similar pairs far apart; oracle from explicit neighbour lists.
  const auto four = rows({{1, 0.05, 0}, {1, -0.05, 0}, {0, 0.05, 1}, {0, -0.05, 1}});
  const auto S = cosine_matrix(four);
  std::set<Edge> expect;
  for (int i = 0; i < 4; ++i) {
    int best = -1;
    for (int j = 0; j < 4; ++j)
      if (j != i && (best < 0 || S(i, j) > S(i, best))) best = j;
    if (S(i, best) >= 0.5) expect.insert({std::min(i, best), std::max(i, best)});
  }
  const Graph g = build_knn_graph(four, cfg(1, 0.5, KnnMode::union_));
  CHECK(edge_set(g) == expect);
  CHECK(g.num_edges() == 2);

  const Graph none = build_knn_graph(random_vectors(10, 5, 1), cfg(3, 0.999, KnnMode::union_));
  CHECK(none.num_edges() == 0);

  CHECK_THROWS_AS(build_knn_graph(four, cfg(4, 0.0, KnnMode::union_)), InputError);
  CHECK_THROWS_AS(build_knn_graph(four, cfg(0, 0.0, KnnMode::union_)), InputError);
}

TEST_CASE("ties go to the lower index") {
  const auto e = rows({{1, 0}, {0, 1}, {0, 1}, {0, 1}});
  const auto lists = knn_lists(cosine_matrix(e), 1);
  CHECK(lists[0] == VertexList{1});
  CHECK(lists[1] == VertexList{2});
  CHECK(lists[3] == VertexList{1});
}

TEST_CASE("union contains mutual, density band, scale invariance") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto e = random_vectors(60, 16, s);
    for (int k : {3, 6, 10}) {
      const Graph u = build_knn_graph(e, cfg(k, -1.0, KnnMode::union_));
      const Graph m = build_knn_graph(e, cfg(k, -1.0, KnnMode::mutual));
      const auto su = edge_set(u);
      for (const auto& x : m.edges()) CHECK(su.count(x) == 1);
      const double d = density(u);
      CHECK(d >= k / (2.0 * 60));
      CHECK(d <= 2.0 * k / 60);
    }
    EmbeddingMatrix scaled = e;
    for (int i = 0; i < scaled.n_units(); ++i) scaled.rows.row(i) *= static_cast<float>(1 + i % 4);
    CHECK(build_knn_graph(scaled, cfg(5, 0.1, KnnMode::union_)).edges() ==
          build_knn_graph(e, cfg(5, 0.1, KnnMode::union_)).edges());
  }
}

TEST_CASE("metadata records the build") {
  const Graph g = build_knn_graph(random_vectors(12, 4, 3), cfg(3, 0.2, KnnMode::mutual));
  const Json& k = g.metadata().at("knn");
  CHECK(k.at("k") == 3);
  CHECK(k.at("mode") == "mutual");
  CHECK(k.at("threshold_stage") == "after_knn");
  CHECK(g.labels().size() == 12);
}

TEST_CASE("planted fixture is four disjoint K5") {
  const Graph g = build_knn_graph(planted_cluster_vectors(), planted_knn());
  CHECK(g.n() == 20);
  CHECK(g.num_edges() == 40);
  for (const auto& [u, v] : g.edges()) CHECK(u / 5 == v / 5);
}

TEST_CASE("EMB1 and CSV files") {
  const auto dir = std::filesystem::temp_directory_path();
  EmbeddingMatrix e = random_vectors(7, 5, 11);
  e.labels = {"a", "b", "c", "d", "e", "f", "g,h"};
  const auto bin = (dir / "backbone_vectors.emb").string();
  write_emb1(bin, e);
  const EmbeddingMatrix r = read_emb1(bin);
  CHECK(r.rows == e.rows);
  CHECK(r.labels == e.labels);
  CHECK(load_embeddings(bin).labels == e.labels);

  {
    std::ifstream in(bin, std::ios::binary);
    char magic[4];
    in.read(magic, 4);
    CHECK(std::string(magic, 4) == "EMB1");
  }

  const auto csv = (dir / "backbone_vectors.csv").string();
  {
    std::ofstream out(csv);
    out << "label,x,y\n\"p,1\",1,0\nq,0.5,0.5\n";
  }
  const EmbeddingMatrix c = load_embeddings(csv);
  CHECK(c.n_units() == 2);
  CHECK(c.labels[0] == "p,1");
  CHECK(c.rows(1, 1) == 0.5f);

  {
    std::ofstream out(csv);
    out << "a,1,2\nb,1\n";
  }
  CHECK_THROWS_AS(load_embeddings(csv), InputError);
  {
    std::ofstream out(bin, std::ios::binary);
    out << "EMB1";
  }
  CHECK_THROWS_AS(read_emb1(bin), InputError);
  std::filesystem::remove(bin);
  std::filesystem::remove(csv);
}
