#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "backbone/bits.hpp"
#include "backbone/error.hpp"

namespace backbone {

using Json = nlohmann::json;
using VertexList = std::vector<int>;
using Edge = std::pair<int, int>;

// Per-vertex positions in micrometres, one row per vertex, 2 or 3 columns.
using Coords = Eigen::MatrixXd;

struct GraphAttributes {
  std::vector<std::string> labels;  // empty or one per vertex
  std::optional<Coords> coords;
  Json metadata = Json::object();
};

// Undirected simple graph. Edges are stored as (min, max) pairs in
// lexicographic order; the value is immutable after construction.
class Graph {
 public:
  Graph() : Graph(0, {}) {}
  Graph(int n, std::vector<Edge> edges, GraphAttributes attrs = {});

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexList& neighbors(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const { return bits::test(row(u), v); }

  // Adjacency row of v as a word span of length words().
  std::span<const Word> row(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int words() const { return words_; }

  const std::vector<std::string>& labels() const { return attrs_.labels; }
  const std::optional<Coords>& coords() const { return attrs_.coords; }
  const Json& metadata() const { return attrs_.metadata; }
  const GraphAttributes& attributes() const { return attrs_; }

  Graph with_metadata(Json metadata) const;
  Graph with_coords(Coords coords) const;
  Graph without_coords() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexList> nbrs_;
  std::vector<Word> adj_;
  GraphAttributes attrs_;
};

// Edge density 2|E| / (N(N-1)); zero below two vertices.
double density(const Graph& g);

bool is_independent_set(const Graph& g, std::span<const int> s);

// Number of edges of g with both endpoints in s.
int count_internal_edges(const Graph& g, std::span<const int> s);

// True if no vertex outside s can be added without breaking independence.
bool is_maximal_independent_set(const Graph& g, std::span<const int> s);

// Sorted, deduplicated copy with range check against n.
VertexList normalize_set(std::span<const int> s, int n);

inline double point_distance(const Coords& c, int i, int j) { return (c.row(i) - c.row(j)).norm(); }

// Unit-disk / unit-ball graph: edge (i, j) iff distance <= radius.
Graph geometric_adjacency(const Coords& coords, double radius);

// Row-per-point form used by file loaders; rejects ragged or mixed-dimension input.
Coords coords_from_rows(const std::vector<std::vector<double>>& rows);

struct UdgCheck {
  std::vector<Edge> missing_edges;  // edges of g farther apart than radius
  std::vector<Edge> extra_edges;    // non-edges of g within radius
  double recall = 1.0;
};

UdgCheck udg_check(const Graph& g, const Coords& coords, double radius);

}  // namespace backbone
