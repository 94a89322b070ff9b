#include "backbone/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace backbone {

namespace {

// Field aliases accepted on import, canonical name first.
const char* const kCountKeys[] = {"n", "N", "num_nodes", "n_nodes"};
const char* const kEdgeKeys[] = {"edges", "edge_list"};

const Json* find_any(const Json& j, std::span<const char* const> keys) {
  for (const char* k : keys)
    if (auto it = j.find(k); it != j.end()) return &*it;
  return nullptr;
}

}  // namespace

Json coords_to_json(const Coords& c) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    Json r = Json::array();
    for (Eigen::Index k = 0; k < c.cols(); ++k) r.push_back(c(i, k));
    rows.push_back(std::move(r));
  }
  return rows;
}

Coords coords_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("coords must be an array");
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  for (const auto& r : j) {
    if (!r.is_array()) throw InputError("coords rows must be arrays");
    rows.push_back(r.get<std::vector<double>>());
  }
  return coords_from_rows(rows);
}

Json to_json(const Graph& g) {
  Json j = Json::object();
  j["n"] = g.n();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  if (g.coords()) j["coords"] = coords_to_json(*g.coords());
  j["metadata"] = g.metadata();
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph file: top level must be an object");
  const Json* n_field = find_any(j, kCountKeys);
  if (!n_field || !n_field->is_number_integer()) throw InputError("graph file: missing integer 'n'");
  const int n = n_field->get<int>();

  std::vector<Edge> edges;
  if (const Json* e = find_any(j, kEdgeKeys)) {
    for (const auto& p : *e) {
      if (!p.is_array() || p.size() != 2) throw InputError("graph file: edges must be [i,j] pairs");
      edges.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
  } else if (auto links = j.find("links"); links != j.end()) {
    // node-link style: [{"source": i, "target": j}, ...]
    for (const auto& l : *links) edges.emplace_back(l.at("source").get<int>(), l.at("target").get<int>());
  } else {
    throw InputError("graph file: missing 'edges'");
  }

  GraphAttributes a;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null())
    a.labels = it->get<std::vector<std::string>>();
  if (auto it = j.find("coords"); it != j.end() && !it->is_null()) a.coords = coords_from_json(*it);
  if (auto it = j.find("metadata"); it != j.end() && !it->is_null()) a.metadata = *it;
  return Graph(n, std::move(edges), std::move(a));
}

std::string dump_canonical(const Json& j) { return j.dump() + "\n"; }

std::string serialize(const Graph& g) { return dump_canonical(to_json(g)); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Json load_json(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_json(const Json& j, const std::filesystem::path& path) { write_text_file(path, dump_canonical(j)); }

Graph load_graph(const std::filesystem::path& path) {
  try {
    return graph_from_json(load_json(path));
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_graph(const Graph& g, const std::filesystem::path& path) { write_text_file(path, serialize(g)); }

}  // namespace backbone
