#include "backbone/textgraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "backbone/graph_io.hpp"

namespace backbone {

void EmbeddingMatrix::validate() const {
  if (rows.rows() < 1) throw InputError("embedding matrix has no rows");
  if (rows.cols() < 1) throw InputError("embedding dimension must be at least 1");
  if (!rows.allFinite()) throw InputError("embedding matrix contains non-finite values");
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != rows.rows())
    throw InputError("embedding labels do not match the row count");
}

EmbeddingMatrix make_embeddings(const Eigen::MatrixXd& rows, std::vector<std::string> labels) {
  EmbeddingMatrix e;
  e.rows = rows.cast<float>();
  e.labels = std::move(labels);
  if (e.labels.empty())
    for (Eigen::Index i = 0; i < rows.rows(); ++i) e.labels.push_back(std::to_string(i));
  e.validate();
  return e;
}

std::string_view knn_mode_name(KnnMode m) { return m == KnnMode::mutual ? "mutual" : "union"; }

KnnMode knn_mode_from_name(std::string_view s) {
  if (s == "mutual") return KnnMode::mutual;
  if (s == "union") return KnnMode::union_;
  throw InputError("knn mode must be 'mutual' or 'union'");
}

Eigen::MatrixXd cosine_matrix(const EmbeddingMatrix& e, bool normalize) {
  e.validate();
  Eigen::MatrixXd x = e.rows.cast<double>();
  if (normalize) {
    const Eigen::VectorXd norms = x.rowwise().norm();
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (norms(i) == 0.0) throw InputError("zero-norm embedding row " + std::to_string(i));
      x.row(i) /= norms(i);
    }
  }
  Eigen::MatrixXd s = x * x.transpose();
  // Exact symmetry and unit diagonal.
  s = 0.5 * (s + s.transpose()).eval();
  if (normalize) s.diagonal().setOnes();
  return s;
}

std::vector<VertexList> knn_lists(const Eigen::MatrixXd& sim, int k) {
  const int n = static_cast<int>(sim.rows());
  if (sim.rows() != sim.cols()) throw InputError("similarity matrix must be square");
  if (k < 1 || k >= n) throw InputError("k must satisfy 1 <= k < n_units");
  std::vector<VertexList> out(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + i);
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](int a, int b) {
      if (sim(i, a) != sim(i, b)) return sim(i, a) > sim(i, b);
      return a < b;
    });
    out[i].assign(order.begin(), order.begin() + k);
    order.resize(n);
  }
  return out;
}

Graph build_knn_graph(const Eigen::MatrixXd& sim, const KnnConfig& cfg, std::vector<std::string> labels) {
  if (cfg.t < -1.0 || cfg.t > 1.0 || !std::isfinite(cfg.t)) throw InputError("threshold t must lie in [-1, 1]");
  const int n = static_cast<int>(sim.rows());
  const auto lists = knn_lists(sim, cfg.k);

  std::vector<std::vector<char>> in(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j : lists[i]) in[i][j] = 1;

  std::vector<Edge> edges;
  int candidates = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool cand = cfg.mode == KnnMode::union_ ? (in[i][j] || in[j][i]) : (in[i][j] && in[j][i]);
      if (!cand) continue;
      ++candidates;
      if (sim(i, j) >= cfg.t) edges.push_back({i, j});
    }

  GraphAttributes attrs;
  attrs.labels = std::move(labels);
  attrs.metadata = {{"knn",
                     {{"k", cfg.k},
                      {"t", cfg.t},
                      {"mode", knn_mode_name(cfg.mode)},
                      {"normalize", cfg.normalize},
                      {"threshold_stage", "after_knn"},
                      {"candidate_edges", candidates}}}};
  return Graph(n, std::move(edges), std::move(attrs));
}

Graph build_knn_graph(const EmbeddingMatrix& e, const KnnConfig& cfg) {
  return build_knn_graph(cosine_matrix(e, cfg.normalize), cfg, e.labels);
}

namespace {

constexpr char kMagic[4] = {'E', 'M', 'B', '1'};

std::uint32_t to_le(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big)
    v = ((v & 0xFFu) << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
  return v;
}

std::uint32_t read_u32(const std::string& buf, std::size_t off) {
  std::uint32_t v;
  std::memcpy(&v, buf.data() + off, 4);
  return to_le(v);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_double(std::string s, double& out) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return false;
  s = s.substr(b, e - b + 1);
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

EmbeddingMatrix read_emb1(const std::string& path) {
  const std::string buf = read_text_file(path);
  if (buf.size() < 12 || std::memcmp(buf.data(), kMagic, 4) != 0) throw InputError(path + ": not an EMB1 file");
  const std::uint32_t n = read_u32(buf, 4), dim = read_u32(buf, 8);
  const std::size_t payload = static_cast<std::size_t>(n) * dim * 4;
  if (buf.size() < 12 + payload) throw InputError(path + ": truncated EMB1 payload");

  EmbeddingMatrix e;
  e.rows.resize(n, dim);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n) * dim; ++i) {
    std::uint32_t bits = read_u32(buf, 12 + 4 * i);
    float f;
    std::memcpy(&f, &bits, 4);
    e.rows.data()[i] = f;
  }
  const std::string trailer = buf.substr(12 + payload);
  if (trailer.find_first_not_of(" \t\r\n") != std::string::npos) {
    Json j;
    try {
      j = Json::parse(trailer);
    } catch (const Json::parse_error& ex) {
      throw InputError(path + ": bad EMB1 trailer: " + ex.what());
    }
    if (j.contains("labels")) {
      for (const auto& l : j.at("labels")) e.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    }
  }
  if (e.labels.empty())
    for (std::uint32_t i = 0; i < n; ++i) e.labels.push_back(std::to_string(i));
  e.validate();
  return e;
}

void write_emb1(const std::string& path, const EmbeddingMatrix& e) {
  e.validate();
  std::string buf(kMagic, 4);
  const auto put = [&](std::uint32_t v) {
    v = to_le(v);
    buf.append(reinterpret_cast<const char*>(&v), 4);
  };
  put(static_cast<std::uint32_t>(e.n_units()));
  put(static_cast<std::uint32_t>(e.dim()));
  for (Eigen::Index i = 0; i < e.rows.size(); ++i) {
    std::uint32_t bits;
    const float f = e.rows.data()[i];
    std::memcpy(&bits, &f, 4);
    put(bits);
  }
  Json trailer = {{"labels", e.labels}};
  buf += trailer.dump();
  write_text_file(path, buf);
}

EmbeddingMatrix read_embedding_csv(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  bool first = true;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 2) throw InputError(path + ":" + std::to_string(lineno) + ": expected label and values");
    std::vector<double> vals;
    bool ok = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v;
      if (!parse_double(fields[i], v)) {
        ok = false;
        break;
      }
      vals.push_back(v);
    }
    if (!ok) {
      if (first) {
        first = false;
        continue;
      }
      throw InputError(path + ":" + std::to_string(lineno) + ": non-numeric value");
    }
    first = false;
    if (!rows.empty() && vals.size() != rows.front().size())
      throw InputError(path + ":" + std::to_string(lineno) + ": row length differs");
    rows.push_back(std::move(vals));
    labels.push_back(fields[0]);
  }
  if (rows.empty()) throw InputError(path + ": no embedding rows");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return make_embeddings(m, std::move(labels));
}

EmbeddingMatrix load_embeddings(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  char head[4] = {};
  f.read(head, 4);
  if (f.gcount() == 4 && std::memcmp(head, kMagic, 4) == 0) return read_emb1(path);
  return read_embedding_csv(path);
}

}  // namespace backbone
