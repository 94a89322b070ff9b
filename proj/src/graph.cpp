#include "backbone/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace backbone {

Graph::Graph(int n, std::vector<Edge> edges, GraphAttributes attrs)
    : n_(n), words_(words_for(n)), attrs_(std::move(attrs)) {
  if (n < 0) throw InputError("graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InputError("graph: duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  edges_ = std::move(edges);

  nbrs_.assign(n, {});
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges_) {
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    bits::set({adj_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)}, v);
    bits::set({adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)}, u);
  }
  for (auto& l : nbrs_) std::sort(l.begin(), l.end());

  if (!attrs_.labels.empty() && static_cast<int>(attrs_.labels.size()) != n)
    throw InputError("graph: label count does not match n");
  if (attrs_.coords) {
    const auto& c = *attrs_.coords;
    if (c.rows() != n) throw InputError("graph: coordinate count does not match n");
    if (c.cols() != 2 && c.cols() != 3) throw InputError("graph: coordinates must be 2D or 3D");
    if (!c.allFinite()) throw InputError("graph: non-finite coordinate");
  }
  if (!attrs_.metadata.is_object()) throw InputError("graph: metadata must be an object");
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& l : nbrs_) d = std::max(d, static_cast<int>(l.size()));
  return d;
}

Graph Graph::with_metadata(Json metadata) const {
  GraphAttributes a = attrs_;
  a.metadata = std::move(metadata);
  return Graph(n_, edges_, std::move(a));
}

Graph Graph::with_coords(Coords coords) const {
  GraphAttributes a = attrs_;
  a.coords = std::move(coords);
  return Graph(n_, edges_, std::move(a));
}

Graph Graph::without_coords() const {
  GraphAttributes a = attrs_;
  a.coords.reset();
  return Graph(n_, edges_, std::move(a));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_ != b.edges_ || a.attrs_.labels != b.attrs_.labels ||
      a.attrs_.metadata != b.attrs_.metadata)
    return false;
  if (a.attrs_.coords.has_value() != b.attrs_.coords.has_value()) return false;
  if (a.attrs_.coords) {
    const auto& ca = *a.attrs_.coords;
    const auto& cb = *b.attrs_.coords;
    if (ca.rows() != cb.rows() || ca.cols() != cb.cols() || ca != cb) return false;
  }
  return true;
}

double density(const Graph& g) {
  const double n = g.n();
  if (g.n() < 2) return 0.0;
  return 2.0 * g.num_edges() / (n * (n - 1.0));
}

VertexList normalize_set(std::span<const int> s, int n) {
  VertexList out(s.begin(), s.end());
  for (int v : out)
    if (v < 0 || v >= n)
      throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_internal_edges(const Graph& g, std::span<const int> s) {
  const VertexList vs = normalize_set(s, g.n());
  std::vector<Word> mask(g.words(), 0);
  for (int v : vs) bits::set(mask, v);
  int twice = 0;
  for (int v : vs) twice += bits::count_and(g.row(v), mask);
  return twice / 2;
}

bool is_independent_set(const Graph& g, std::span<const int> s) {
  return count_internal_edges(g, s) == 0;
}

bool is_maximal_independent_set(const Graph& g, std::span<const int> s) {
  if (!is_independent_set(g, s)) return false;
  std::vector<Word> mask(g.words(), 0);
  for (int v : s) bits::set(mask, v);
  for (int v = 0; v < g.n(); ++v) {
    if (bits::test(mask, v)) continue;
    if (bits::count_and(g.row(v), mask) == 0) return false;
  }
  return true;
}

Coords coords_from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Coords(0, 2);
  const std::size_t dim = rows.front().size();
  if (dim != 2 && dim != 3) throw InputError("coordinates must have 2 or 3 components");
  Coords c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim)
      throw InputError("mixed coordinate dimensions at vertex " + std::to_string(i));
    for (std::size_t k = 0; k < dim; ++k) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return c;
}

Graph geometric_adjacency(const Coords& coords, double radius) {
  if (coords.rows() == 0) throw InputError("geometric_adjacency: empty coordinates");
  if (!(radius > 0)) throw InputError("geometric_adjacency: radius must be positive");
  if (coords.cols() != 2 && coords.cols() != 3)
    throw InputError("geometric_adjacency: coordinates must be 2D or 3D");
  const int n = static_cast<int>(coords.rows());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (point_distance(coords, i, j) <= radius) edges.emplace_back(i, j);
  GraphAttributes a;
  a.coords = coords;
  a.metadata = {{"radius", radius}};
  return Graph(n, std::move(edges), std::move(a));
}

UdgCheck udg_check(const Graph& g, const Coords& coords, double radius) {
  if (coords.rows() != g.n())
    throw InputError("udg_check: graph has " + std::to_string(g.n()) + " vertices but " +
                     std::to_string(coords.rows()) + " coordinates");
  UdgCheck out;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      const bool within = point_distance(coords, i, j) <= radius;
      const bool edge = g.adjacent(i, j);
      if (edge && !within) out.missing_edges.emplace_back(i, j);
      if (!edge && within) out.extra_edges.emplace_back(i, j);
    }
  }
  out.recall = g.num_edges() == 0
                   ? 1.0
                   : 1.0 - static_cast<double>(out.missing_edges.size()) / g.num_edges();
  return out;
}

}  // namespace backbone
