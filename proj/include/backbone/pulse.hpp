#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

enum class PulseVariant { baseline, trapezoid, four_knot, cubic_detuning, reduced_omega };

std::string_view pulse_variant_name(PulseVariant v);
PulseVariant pulse_variant_from_name(std::string_view s);

using Knot = std::pair<double, double>;  // (time us, value rad/us)

struct Waveform {
  std::string interpolation;  // "constant", "piecewise_linear", "monotone_cubic"
  std::vector<Knot> knots;
};

// Exported data only; nothing here is executed.
struct PulseSpec {
  PulseVariant variant = PulseVariant::baseline;
  int n_atoms = 0;
  double omega = 3.30;     // peak Rabi frequency, rad/us
  double duration = 4.0;   // us
  Waveform envelope;       // Rabi amplitude over time
  Waveform detuning;
  double r_b = 8.0;        // stored alongside omega, never derived from it
  Json parameters = Json::object();  // variant-specific shape parameters
};

struct PulseOptions {
  std::optional<double> omega;     // overrides the variant's amplitude
  std::optional<double> duration;  // overrides the size rule
  double r_b = 8.0;
};

inline constexpr double kBaselineOmega = 3.30;
inline constexpr double kReducedOmega = 1.63;
inline constexpr double kDetuningSpan = 3.0;  // detuning sweeps -3 omega -> +3 omega
inline constexpr int kLongRampAtoms = 81;     // 6 us ramp at or above this size

PulseSpec pulse_spec(int n_atoms, PulseVariant variant, const PulseOptions& opt = {});

Json pulse_to_json(const PulseSpec& p);

}  // namespace backbone
