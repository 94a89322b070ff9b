#include <doctest.h>

#include <filesystem>

#include "backbone/forge.hpp"
#include "backbone/graph_io.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Coords grid_coords(int rows, int cols, double a) {
  Coords c(rows * cols, 2);
  for (int r = 0; r < rows; ++r)
    for (int q = 0; q < cols; ++q) c.row(r * cols + q) << q * a, r * a;
  return c;
}

}  // namespace

TEST_CASE("density") {
  CHECK(density(generate(design::king(5, 5))) == doctest::Approx(0.24).epsilon(1e-12));
  CHECK(density(Graph(7, {})) == 0.0);
  CHECK(density(Graph(1, {})) == 0.0);
  CHECK(density(complete(4)) == 1.0);
}

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  const Graph g(3, {{2, 0}});
  CHECK(g.edges().front() == Edge{0, 2});
}

TEST_CASE("is_independent_set") {
  const Graph c5 = cycle(5);
  CHECK(is_independent_set(c5, VertexList{}));
  for (const auto& [u, v] : c5.edges()) CHECK_FALSE(is_independent_set(c5, VertexList{u, v}));
  CHECK(is_independent_set(c5, VertexList{0, 2}));
  CHECK_THROWS_AS(is_independent_set(c5, VertexList{0, 5}), InputError);
  CHECK_THROWS_AS(is_independent_set(c5, VertexList{-1}), InputError);
}

TEST_CASE("geometric_adjacency") {
  Coords two(2, 2);
  two << 0, 0, 5, 0;
  CHECK(geometric_adjacency(two, 8.0).num_edges() == 1);

  // a, a*sqrt(2) inside 8, 2a outside: exactly the king adjacency.
  const Graph k = geometric_adjacency(grid_coords(5, 5, 5.0), 8.0);
  const Graph ref = generate(design::king(5, 5));
  CHECK(k.edges() == ref.edges());

  CHECK(geometric_adjacency(grid_coords(3, 3, 5.0), 4.9).num_edges() == 0);
  CHECK_THROWS_AS(coords_from_rows({{0, 0}, {1, 1, 1}}), InputError);
  CHECK_THROWS_AS(geometric_adjacency(two, 0.0), InputError);
}

TEST_CASE("udg_check") {
  const Graph k = generate(design::king(5, 5));
  const UdgCheck own = udg_check(k, *k.coords(), 8.0);
  CHECK(own.recall == 1.0);
  CHECK(own.extra_edges.empty());
  CHECK(own.missing_edges.empty());

  const Coords same = Coords::Zero(5, 2);
  const UdgCheck deg = udg_check(cycle(5), same, 1.0);
  CHECK(deg.recall == 1.0);
  CHECK(deg.extra_edges.size() == 5);  // C5 has 5 non-edges

  CHECK(udg_check(k, *k.coords(), 0.0).recall == 0.0);
  CHECK(udg_check(Graph(3, {}), Coords::Zero(3, 2), 1.0).recall == 1.0);
  CHECK_THROWS_AS(udg_check(k, Coords::Zero(3, 2), 1.0), InputError);
}

TEST_CASE("geometric_adjacency then udg_check is exact") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = stream_rng(s, 1);
    Coords c(30, s % 2 ? 3 : 2);
    for (int i = 0; i < c.rows(); ++i)
      for (int d = 0; d < c.cols(); ++d) c(i, d) = 40.0 * uniform01(rng);
    const Graph g = geometric_adjacency(c, 9.0);
    const UdgCheck u = udg_check(g, c, 9.0);
    CHECK(u.recall == 1.0);
    CHECK(u.extra_edges.empty());
  }
}

TEST_CASE("file round trip") {
  const Graph k = generate(design::king(3, 4));
  const std::string s = serialize(k);
  CHECK(serialize(graph_from_json(Json::parse(s))) == s);
  CHECK(graph_from_json(Json::parse(s)) == k);

  const auto path = std::filesystem::temp_directory_path() / "backbone_graph_roundtrip.json";
  save_graph(k, path);
  CHECK(load_graph(path) == k);
  CHECK(read_text_file(path) == s);
  std::filesystem::remove(path);

  const Graph labelled(3, {{0, 1}}, {{"a", "b", "c"}, std::nullopt, {{"family", "toy"}}});
  CHECK(graph_from_json(to_json(labelled)) == labelled);
}

TEST_CASE("import accepts alternate field names") {
  const Graph g = graph_from_json(Json::parse(R"({"num_nodes": 3, "edges": [[1, 0], [2, 1]]})"));
  CHECK(g.n() == 3);
  CHECK(g.num_edges() == 2);
  CHECK_THROWS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")));
}

TEST_CASE("density is permutation invariant") {
  const Graph g = random_graph(15, 0.3, 4);
  std::vector<int> perm(15);
  for (int i = 0; i < 15; ++i) perm[i] = (i * 7) % 15;
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  CHECK(density(Graph(15, e)) == density(g));
}
