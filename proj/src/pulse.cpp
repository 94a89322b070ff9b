#include "backbone/pulse.hpp"

#include <cmath>

namespace backbone {

namespace {

// Waveform values are kept on a 1e-9 grid so that 3 * 3.30 is stored as 9.9.
double tidy(double x) { return std::round(x * 1e9) / 1e9; }

Json waveform_json(const Waveform& w) {
  Json knots = Json::array();
  for (const auto& [t, v] : w.knots) knots.push_back({t, v});
  return {{"interpolation", w.interpolation}, {"knots", knots}};
}

}  // namespace

std::string_view pulse_variant_name(PulseVariant v) {
  switch (v) {
    case PulseVariant::baseline: return "baseline";
    case PulseVariant::trapezoid: return "trapezoid";
    case PulseVariant::four_knot: return "four_knot";
    case PulseVariant::cubic_detuning: return "cubic_detuning";
    case PulseVariant::reduced_omega: return "reduced_omega";
  }
  return "baseline";
}

PulseVariant pulse_variant_from_name(std::string_view s) {
  for (auto v : {PulseVariant::baseline, PulseVariant::trapezoid, PulseVariant::four_knot, PulseVariant::cubic_detuning,
                 PulseVariant::reduced_omega})
    if (pulse_variant_name(v) == s) return v;
  throw InputError("unknown pulse variant: " + std::string(s));
}

PulseSpec pulse_spec(int n_atoms, PulseVariant variant, const PulseOptions& opt) {
  if (n_atoms < 1) throw InputError("n_atoms must be at least 1");
  PulseSpec p;
  p.variant = variant;
  p.n_atoms = n_atoms;
  p.r_b = opt.r_b;
  p.omega = opt.omega.value_or(variant == PulseVariant::reduced_omega ? kReducedOmega : kBaselineOmega);
  p.duration = opt.duration.value_or(n_atoms >= kLongRampAtoms ? 6.0 : 4.0);
  if (!(p.omega > 0.0) || !std::isfinite(p.omega)) throw InputError("omega must be positive");
  if (!(p.duration > 0.0) || !std::isfinite(p.duration)) throw InputError("duration must be positive");

  const double T = p.duration;
  const double W = p.omega;
  const double span = tidy(kDetuningSpan * W);

  p.envelope = {"constant", {{0.0, W}, {T, W}}};
  p.detuning = {"piecewise_linear", {{0.0, -span}, {T, span}}};

  switch (variant) {
    case PulseVariant::baseline:
    case PulseVariant::reduced_omega:
      break;
    case PulseVariant::trapezoid: {
      const double rise = 0.1;
      p.parameters = {{"rise_fraction", rise}};
      p.envelope = {"piecewise_linear", {{0.0, 0.0}, {tidy(rise * T), W}, {tidy((1.0 - rise) * T), W}, {T, 0.0}}};
      break;
    }
    case PulseVariant::four_knot: {
      // Asymmetric ramp: fast approach, slow passage through resonance.
      const std::vector<double> times = {0.0, 0.25, 0.75, 1.0};
      const std::vector<double> levels = {-3.0, -0.5, 1.0, 3.0};
      p.parameters = {{"knot_times", times}, {"knot_levels", levels}};
      p.detuning.knots.clear();
      for (std::size_t i = 0; i < times.size(); ++i) p.detuning.knots.push_back({tidy(times[i] * T), tidy(levels[i] * W)});
      break;
    }
    case PulseVariant::cubic_detuning: {
      const std::vector<double> times = {0.0, 0.25, 0.5, 0.75, 1.0};
      const std::vector<double> levels = {-3.0, -1.0, 0.0, 1.0, 3.0};
      p.parameters = {{"knot_times", times}, {"knot_levels", levels}};
      p.detuning.interpolation = "monotone_cubic";
      p.detuning.knots.clear();
      for (std::size_t i = 0; i < times.size(); ++i) p.detuning.knots.push_back({tidy(times[i] * T), tidy(levels[i] * W)});
      break;
    }
  }
  return p;
}

Json pulse_to_json(const PulseSpec& p) {
  return {{"variant", pulse_variant_name(p.variant)},
          {"n_atoms", p.n_atoms},
          {"omega", p.omega},
          {"duration", p.duration},
          {"envelope", waveform_json(p.envelope)},
          {"detuning", waveform_json(p.detuning)},
          {"r_b", p.r_b},
          {"parameters", p.parameters},
          {"units", {{"time", "us"}, {"omega", "rad/us"}, {"detuning", "rad/us"}, {"r_b", "um"}}}};
}

}  // namespace backbone
