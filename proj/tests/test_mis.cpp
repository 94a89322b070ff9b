#include <doctest.h>

#include <set>

#include "backbone/forge.hpp"
#include "backbone/mis.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

std::set<std::uint32_t> masks(const OptimaEnumeration& e) {
  std::set<std::uint32_t> s;
  for (const auto& v : e.solutions) s.insert(to_mask(v));
  return s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), e);
}

}  // namespace

TEST_CASE("solve_exact examples") {
  CHECK(solve_exact(cycle(5)).alpha == 2);
  const MisResult k = solve_exact(generate(design::king(5, 5)));
  CHECK(k.alpha == 9);
  CHECK(k.exact());
  const MisResult e = solve_exact(Graph(7, {}));
  CHECK(e.alpha == 7);
  CHECK(e.witness == VertexList{0, 1, 2, 3, 4, 5, 6});
  CHECK(solve_exact(Graph()).alpha == 0);
}

TEST_CASE("alpha lower bound N/(max degree + 1)") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = random_graph(18, 0.4, s);
    const int a = solve_exact(g).alpha;
    CHECK(a * (g.max_degree() + 1) >= g.n());
  }
}

TEST_CASE("enumerate_optima examples") {
  CHECK(enumerate_optima(generate(design::king(5, 5))).solutions.size() == 1);
  const OptimaEnumeration d = enumerate_optima(generate(design::dodecahedron()));
  CHECK(d.solutions.size() == 5);
  CHECK_FALSE(d.hit_cap);
  for (const auto& s : d.solutions) CHECK(s.size() == 8);
  const OptimaEnumeration t = enumerate_optima(generate(design::disjoint_cliques(17, 3)));
  CHECK(t.hit_cap);
  CHECK(t.solutions.size() == 500);
  CHECK(masks(t).size() == 500);
  CHECK(enumerate_optima(generate(design::disjoint_cliques(17, 3)), 40).solutions.size() == 40);
}

TEST_CASE("enumeration order is deterministic") {
  const Graph g = random_graph(18, 0.2, 77);
  CHECK(enumerate_optima(g).solutions == enumerate_optima(g).solutions);
}

TEST_CASE("certify_core examples") {
  const Graph kab = generate(design::complete_bipartite(25, 25));
  const RigidityReport b = certify_core(kab, solve_exact(kab));
  CHECK(b.core.empty());
  CHECK(b.rho == 0.0);
  CHECK(b.certified);

  const Graph k = generate(design::king(5, 5));
  CHECK(certify_core(k, solve_exact(k)).rho == 1.0);

  const RigidityReport p = certify_core(path(3), solve_exact(path(3)));
  CHECK(p.alpha == 2);
  CHECK(p.core == VertexList{0, 2});
  CHECK(p.rho == 1.0);

  CHECK(analyze_rigidity(Graph()).rho == 1.0);
}

TEST_CASE("solver, enumeration and certification agree with brute force") {
  int checked = 0;
  for (std::uint64_t s = 0; s < 120; ++s) {
    const int n = 4 + static_cast<int>(s % 13);
    const double p = 0.05 + 0.55 * static_cast<double>(s % 11) / 10.0;
    const Graph g = random_graph(n, p, 1000 + s);
    const BruteForce bf = brute_force(g);

    const MisResult r = solve_exact(g);
    REQUIRE(r.alpha == bf.alpha);
    CHECK(is_independent_set(g, r.witness));
    CHECK(static_cast<int>(r.witness.size()) == r.alpha);

    const OptimaEnumeration e = enumerate_optima(g, 1 << 20);
    CHECK_FALSE(e.hit_cap);
    CHECK(masks(e) == std::set<std::uint32_t>(bf.optima.begin(), bf.optima.end()));

    const RigidityReport c = certify_core(g, r);
    CHECK(c.certified);
    CHECK(to_mask(c.core) == bf.core);
    CHECK(c.rho == bf.rho());
    CHECK(to_mask(intersect_optima(e, g.n())) == bf.core);
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("deleting a vertex lowers alpha by at most one") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(14, 0.3, 50 + s);
    const int a = solve_exact(g).alpha;
    for (int v = 0; v < g.n(); ++v) {
      VertexList keep;
      for (int u = 0; u < g.n(); ++u)
        if (u != v) keep.push_back(u);
      const int av = solve_exact_within(g, keep).alpha;
      CHECK((av == a || av == a - 1));
    }
  }
}

TEST_CASE("alpha adds and optimum counts multiply over components") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph a = random_graph(8, 0.35, 200 + s);
    const Graph b = random_graph(9, 0.25, 300 + s);
    const Graph u = disjoint_union(a, b);
    CHECK(solve_exact(u).alpha == solve_exact(a).alpha + solve_exact(b).alpha);
    CHECK(enumerate_optima(u, 1 << 20).solutions.size() ==
          enumerate_optima(a, 1 << 20).solutions.size() * enumerate_optima(b, 1 << 20).solutions.size());
  }
}

TEST_CASE("analyze_rigidity merges enumeration and certification") {
  const RigidityReport r = analyze_rigidity(generate(design::planar_grid(5, 10)));
  CHECK(r.alpha == 25);
  CHECK(r.n_optima == 2);
  CHECK(r.n_optima_exact);
  CHECK(r.rho == 0.0);
  const RigidityReport t = analyze_rigidity(generate(design::disjoint_cliques(17, 3)));
  CHECK(t.hit_cap);
  CHECK_FALSE(t.n_optima_exact);
  CHECK(t.n_optima == 500);
  CHECK(t.core.empty());
}

TEST_CASE("time limits flag the result") {
  const Graph g = random_graph(200, 0.05, 5);
  const MisResult r = solve_exact(g, 1e-4);
  CHECK(is_independent_set(g, r.witness));
  CHECK(static_cast<int>(r.witness.size()) == r.alpha);
  if (r.stats.timed_out) CHECK_FALSE(r.exact());
}

TEST_CASE("greedy_mis") {
  CHECK(greedy_mis(star(5)) == VertexList{1, 2, 3, 4, 5});
  CHECK(greedy_mis(Graph(4, {})) == VertexList{0, 1, 2, 3});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_graph(30, 0.15, s);
    for (auto rule : {GreedyRule::delete_max_degree, GreedyRule::select_max_degree}) {
      const VertexList v = greedy_mis(g, rule);
      CHECK(is_independent_set(g, v));
      CHECK(is_maximal_independent_set(g, v));
    }
  }
}

TEST_CASE("sa_mis") {
  const SaMisSchedule sched;
  CHECK(sa_mis(Graph(6, {}), sched, 1).size() == 6);
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(sa_mis(cycle(5), sched, s).size() == 2);
  const Graph k = generate(design::king(5, 5));
  int best = 0;
  for (std::uint64_t s = 0; s < 10; ++s) best = std::max<int>(best, static_cast<int>(sa_mis(k, sched, s).size()));
  CHECK(best == 9);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(40, 0.1, 70 + s);
    const VertexList v = sa_mis(g, sched, s);
    CHECK(is_independent_set(g, v));
    CHECK(is_maximal_independent_set(g, v));
    CHECK(sa_mis(g, sched, s) == v);
  }
}

TEST_CASE("approximation_ratio") {
  const Graph k = generate(design::king(5, 5));
  const MisResult r = solve_exact(k);
  CHECK(approximation_ratio(r.witness, k) == 1.0);
  CHECK(approximation_ratio(VertexList{}, k) == 0.0);
  VertexList eight(r.witness.begin(), r.witness.end() - 1);
  CHECK(approximation_ratio(eight, k) == doctest::Approx(8.0 / 9.0));
  CHECK_THROWS_AS(approximation_ratio(VertexList{0, 1}, k), ValidityError);
}
