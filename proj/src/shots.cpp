#include "backbone/shots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "backbone/graph_io.hpp"
#include "backbone/mis.hpp"

namespace backbone {

void ShotSet::validate() const {
  if (shots.empty()) throw InputError("shot set is empty");
  for (const auto& s : shots) {
    if (static_cast<int>(s.size()) != n_atoms) throw InputError("shot length differs from n_atoms");
    if (s.find_first_not_of("01") != std::string::npos) throw InputError("shots must contain only '0' and '1'");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Json header_value(const std::string& v) {
  if (!v.empty() && v.find_first_not_of("0123456789") == std::string::npos && v.size() < 10) return std::stoi(v);
  return v;
}

}  // namespace

ShotSet parse_shots(std::string_view text) {
  ShotSet s;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::string body = trim(std::string_view(t).substr(1));
      const auto sep = body.find_first_of(":=");
      if (sep != std::string::npos) s.metadata[trim(body.substr(0, sep))] = header_value(trim(body.substr(sep + 1)));
      continue;
    }
    if (t.find_first_not_of("01") != std::string::npos)
      throw InputError("shots line " + std::to_string(lineno) + ": not a bitstring");
    if (!s.shots.empty() && t.size() != s.shots.front().size())
      throw InputError("shots line " + std::to_string(lineno) + ": length differs from earlier shots");
    s.shots.push_back(t);
  }
  if (s.shots.empty()) throw InputError("no shots found");
  s.n_atoms = static_cast<int>(s.shots.front().size());
  if (s.metadata.contains("n_atoms")) {
    const auto& v = s.metadata["n_atoms"];
    if (!v.is_number_integer() || v.get<int>() != s.n_atoms) throw InputError("header n_atoms does not match shot length");
  }
  return s;
}

ShotSet load_shots(const std::string& path) { return parse_shots(read_text_file(path)); }

std::string format_shots(const ShotSet& s) {
  std::string out;
  Json meta = s.metadata;
  meta["n_atoms"] = s.n_atoms;
  for (const auto& [k, v] : meta.items()) out += "# " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  for (const auto& b : s.shots) out += b + "\n";
  return out;
}

VertexList shot_vertices(std::string_view shot) {
  VertexList v;
  for (std::size_t i = 0; i < shot.size(); ++i)
    if (shot[i] == '1') v.push_back(static_cast<int>(i));
  return v;
}

std::string_view regime_name(ShotRegime r) { return r == ShotRegime::embedded ? "embedded" : "exact_udg"; }

ShotRegime regime_from_name(std::string_view s) {
  if (s == "embedded") return ShotRegime::embedded;
  if (s == "exact_udg") return ShotRegime::exact_udg;
  throw InputError("regime must be 'embedded' or 'exact_udg'");
}

ShotReport analyze(const ShotSet& shots, const Graph& benchmark, int alpha, ShotRegime regime) {
  shots.validate();
  if (shots.n_atoms != benchmark.n()) throw InputError("shot length differs from the benchmark graph size");
  if (alpha < 1) throw InputError("alpha must be at least 1");

  ShotReport r;
  r.regime = regime;
  r.alpha = alpha;
  r.n_shots = static_cast<int>(shots.shots.size());
  int valid = 0, near_w = 0, near_e = 0, best_w = -1;
  for (const auto& s : shots.shots) {
    const VertexList v = shot_vertices(s);
    const int w = static_cast<int>(v.size());
    const int violated = count_internal_edges(benchmark, v);
    ++r.hamming_histogram[w];
    if (std::abs(w - alpha) <= 1) ++near_w;
    if (violated <= 2) ++near_e;
    if (violated == 0) {
      ++valid;
      if (w > best_w) {
        best_w = w;
        r.best_shot = s;
      }
    }
  }
  const double n = r.n_shots;
  r.valid_fraction = valid / n;
  r.best_ratio = best_w > 0 ? static_cast<double>(best_w) / alpha : 0.0;
  r.near_valid_weight_fraction = near_w / n;
  r.near_valid_edge_fraction = near_e / n;
  r.near_valid_fraction = regime == ShotRegime::embedded ? r.near_valid_weight_fraction : r.near_valid_edge_fraction;
  return r;
}

Json shot_report_to_json(const ShotReport& r) {
  Json hist = Json::object();
  for (const auto& [w, c] : r.hamming_histogram) hist[std::to_string(w)] = c;
  return {{"regime", regime_name(r.regime)},
          {"n_shots", r.n_shots},
          {"alpha", r.alpha},
          {"valid_fraction", r.valid_fraction},
          {"best_ratio", r.best_ratio},
          {"near_valid_weight_fraction", r.near_valid_weight_fraction},
          {"near_valid_edge_fraction", r.near_valid_edge_fraction},
          {"near_valid_fraction", r.near_valid_fraction},
          {"hamming_histogram", hist},
          {"best_shot", r.best_shot ? Json(*r.best_shot) : Json()},
          {"canonical_recovery", r.canonical_recovery ? Json(*r.canonical_recovery) : Json()}};
}

std::string_view recovery_mode_name(RecoveryMode m) {
  return m == RecoveryMode::backbone_overlap ? "backbone_overlap" : "largest_sub_is";
}

RecoveryMode recovery_mode_from_name(std::string_view s) {
  if (s == "backbone_overlap") return RecoveryMode::backbone_overlap;
  if (s == "largest_sub_is") return RecoveryMode::largest_sub_is;
  throw InputError("recovery mode must be 'backbone_overlap' or 'largest_sub_is'");
}

RecoveryResult canonical_recovery(const ShotSet& shots, std::span<const int> reg_to_text, const Graph& register_graph,
                                  const Graph& g_text, int alpha_text, RecoveryMode mode,
                                  std::optional<VertexList> reference_backbone) {
  shots.validate();
  if (static_cast<int>(reg_to_text.size()) != shots.n_atoms) throw InputError("register map length differs from shots");
  if (register_graph.n() != shots.n_atoms) throw InputError("register graph size differs from shots");
  if (alpha_text < 1) throw InputError("alpha_text must be at least 1");
  {
    std::vector<char> seen(g_text.n(), 0);
    for (int t : reg_to_text) {
      if (t < 0 || t >= g_text.n()) throw InputError("register map points outside the text graph");
      if (seen[t]) throw InputError("register map is not injective");
      seen[t] = 1;
    }
  }
  if (mode == RecoveryMode::backbone_overlap && !reference_backbone)
    throw InputError("backbone_overlap mode needs a reference backbone");
  VertexList ref;
  if (reference_backbone) ref = normalize_set(*reference_backbone, g_text.n());

  RecoveryResult res;
  res.mode = mode;
  for (std::size_t i = 0; i < shots.shots.size(); ++i) {
    const VertexList on = shot_vertices(shots.shots[i]);
    if (!is_independent_set(register_graph, on)) continue;
    VertexList mapped;
    for (int a : on) mapped.push_back(reg_to_text[a]);
    std::sort(mapped.begin(), mapped.end());
    int score = 0;
    if (mode == RecoveryMode::backbone_overlap) {
      VertexList common;
      std::set_intersection(mapped.begin(), mapped.end(), ref.begin(), ref.end(), std::back_inserter(common));
      score = static_cast<int>(common.size());
    } else {
      score = mapped.empty() ? 0 : solve_exact_within(g_text, mapped).alpha;
    }
    if (res.best_shot_index < 0 || score > res.recovered) {
      res.recovered = score;
      res.best_shot_index = static_cast<int>(i);
    }
  }
  res.value = static_cast<double>(res.recovered) / alpha_text;
  return res;
}

}  // namespace backbone
