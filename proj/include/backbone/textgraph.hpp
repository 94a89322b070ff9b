#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "backbone/graph.hpp"

namespace backbone {

// One embedding per textual unit, stored row-major as float32.
struct EmbeddingMatrix {
  Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows;
  std::vector<std::string> labels;  // one per row; index strings when absent

  int n_units() const { return static_cast<int>(rows.rows()); }
  int dim() const { return static_cast<int>(rows.cols()); }

  // Throws InputError unless n_units >= 1, dim >= 1, rows finite and labels sized.
  void validate() const;
};

EmbeddingMatrix make_embeddings(const Eigen::MatrixXd& rows, std::vector<std::string> labels = {});

enum class KnnMode { mutual, union_ };

std::string_view knn_mode_name(KnnMode m);
KnnMode knn_mode_from_name(std::string_view s);

struct KnnConfig {
  int k = 8;
  double t = 0.78;
  KnnMode mode = KnnMode::union_;
  bool normalize = true;
};

// Pairwise cosine similarity, accumulated in double. With normalize = false
// the rows are taken as already unit length and raw dot products are used.
Eigen::MatrixXd cosine_matrix(const EmbeddingMatrix& e, bool normalize = true);

// k nearest neighbours of every row by similarity (ties -> lower index), self excluded.
std::vector<VertexList> knn_lists(const Eigen::MatrixXd& sim, int k);

// Candidate pairs come from the k-NN lists (union: either direction, mutual:
// both); the threshold t then filters candidates. Labels and cfg are carried
// into the graph.
Graph build_knn_graph(const EmbeddingMatrix& e, const KnnConfig& cfg);
Graph build_knn_graph(const Eigen::MatrixXd& sim, const KnnConfig& cfg, std::vector<std::string> labels = {});

// Binary vector file: "EMB1", u32 n, u32 dim, n*dim float32 (all little
// endian, row-major), then a UTF-8 JSON trailer {"labels": [...]}.
EmbeddingMatrix read_emb1(const std::string& path);
void write_emb1(const std::string& path, const EmbeddingMatrix& e);

// One unit per line: label, then dim numbers. A first line whose numeric
// fields do not parse is treated as a header.
EmbeddingMatrix read_embedding_csv(const std::string& path);

// Dispatch on the magic bytes: EMB1 or CSV.
EmbeddingMatrix load_embeddings(const std::string& path);

}  // namespace backbone
