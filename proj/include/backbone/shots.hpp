#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

// Measurement bitstrings in register node order ('1' = excited atom).
struct ShotSet {
  int n_atoms = 0;
  std::vector<std::string> shots;
  Json metadata = Json::object();  // from '#' header lines

  void validate() const;
};

// Text form: '#'-prefixed "key: value" header lines, then one bitstring per
// line. A header n_atoms, when present, must match the bitstring length.
ShotSet parse_shots(std::string_view text);
ShotSet load_shots(const std::string& path);
std::string format_shots(const ShotSet& s);

VertexList shot_vertices(std::string_view shot);

enum class ShotRegime { embedded, exact_udg };

std::string_view regime_name(ShotRegime r);
ShotRegime regime_from_name(std::string_view s);

struct ShotReport {
  ShotRegime regime = ShotRegime::embedded;
  int n_shots = 0;
  int alpha = 0;
  double valid_fraction = 0.0;
  double best_ratio = 0.0;  // 0 when no shot is valid
  double near_valid_weight_fraction = 0.0;  // |w - alpha| <= 1
  double near_valid_edge_fraction = 0.0;    // at most two violated edges
  double near_valid_fraction = 0.0;         // the regime's definition
  std::map<int, int> hamming_histogram;
  std::optional<std::string> best_shot;     // heaviest valid shot, first on ties
  std::optional<double> canonical_recovery;
};

ShotReport analyze(const ShotSet& shots, const Graph& benchmark, int alpha, ShotRegime regime);

Json shot_report_to_json(const ShotReport& r);

enum class RecoveryMode { backbone_overlap, largest_sub_is };

std::string_view recovery_mode_name(RecoveryMode m);
RecoveryMode recovery_mode_from_name(std::string_view s);

struct RecoveryResult {
  RecoveryMode mode = RecoveryMode::backbone_overlap;
  double value = 0.0;
  int best_shot_index = -1;  // -1 when no shot is register-valid
  int recovered = 0;
};

// Max over shots valid on the register graph of the text-side score divided
// by alpha_text. reg_to_text[i] is the text vertex of register atom i.
RecoveryResult canonical_recovery(const ShotSet& shots, std::span<const int> reg_to_text, const Graph& register_graph,
                                  const Graph& g_text, int alpha_text, RecoveryMode mode,
                                  std::optional<VertexList> reference_backbone = std::nullopt);

}  // namespace backbone
