#pragma once

// Brute-force oracles and shared fixtures for the test binaries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "backbone/graph.hpp"
#include "backbone/random.hpp"
#include "backbone/textgraph.hpp"

namespace backbone::testing {

struct BruteForce {
  int alpha = 0;
  std::vector<std::uint32_t> optima;  // bitmasks, ascending
  std::uint32_t core = 0;             // intersection of all optima

  double rho() const {
    return alpha == 0 ? 1.0 : static_cast<double>(std::popcount(core)) / alpha;
  }
};

// Every subset of an n <= 22 vertex graph.
inline BruteForce brute_force(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t total = 1u << n;
  std::vector<char> indep(total, 0);
  std::vector<std::uint8_t> size(total, 0);
  indep[0] = 1;
  BruteForce bf;
  for (std::uint32_t m = 1; m < total; ++m) {
    const int low = std::countr_zero(m);
    const std::uint32_t rest = m & (m - 1);
    size[m] = size[rest] + 1;
    indep[m] = indep[rest] && !(adj[low] & rest);
    if (indep[m]) bf.alpha = std::max<int>(bf.alpha, size[m]);
  }
  bf.core = total - 1;
  for (std::uint32_t m = 0; m < total; ++m)
    if (indep[m] && size[m] == bf.alpha) {
      bf.optima.push_back(m);
      bf.core &= m;
    }
  if (n == 0) bf.core = 0;
  return bf;
}

inline std::uint32_t to_mask(const VertexList& s) {
  std::uint32_t m = 0;
  for (int v : s) m |= 1u << v;
  return m;
}

inline VertexList from_mask(std::uint32_t m) {
  VertexList s;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) s.push_back(v);
  return s;
}

// G(n, p) with a fixed stream.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng = stream_rng(seed, 0);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

// Four clusters of five unit vectors in R^6: a wide arc, a tight cluster and
// two clusters that nearly touch. k = 4 union k-NN gives four disjoint K5.
inline EmbeddingMatrix planted_cluster_vectors() {
  const int D = 6;
  auto e = [&](int i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(D);
    v[i] = 1.0;
    return v;
  };
  std::vector<Eigen::VectorXd> rows;
  for (int i = 0; i < 5; ++i) {
    const double t = -0.6 + 0.3 * i;
    rows.push_back((std::cos(t) * e(0) + std::sin(t) * e(1)).normalized());
  }
  for (int j = 0; j < 5; ++j) rows.push_back((e(2) + 0.05 * e(j % 3 + 3) * (j < 3 ? 1.0 : -1.0)).normalized());
  const Eigen::VectorXd cC = (e(4) + 0.1 * e(5)).normalized();
  const Eigen::VectorXd cD = (e(4) - 0.1 * e(5)).normalized();
  for (const auto& c : {cC, cD})
    for (int j = 0; j < 5; ++j) {
      Eigen::VectorXd off = Eigen::VectorXd::Zero(D);
      off[j % 4] = 0.03 * (j < 4 ? 1.0 : -1.0);
      rows.push_back((c + off).normalized());
    }
  Eigen::MatrixXd m(static_cast<int>(rows.size()), D);
  for (int i = 0; i < m.rows(); ++i) m.row(i) = rows[i].transpose();
  return make_embeddings(m);
}

inline KnnConfig planted_knn() {
  KnnConfig c;
  c.k = 4;
  c.t = 0.0;
  c.mode = KnnMode::union_;
  return c;
}

}  // namespace backbone::testing
