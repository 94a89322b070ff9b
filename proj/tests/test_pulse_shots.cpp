#include <doctest.h>

#include "backbone/forge.hpp"
#include "backbone/mis.hpp"
#include "backbone/pulse.hpp"
#include "backbone/shots.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

ShotSet make_shots(std::vector<std::string> s) {
  ShotSet x;
  x.n_atoms = static_cast<int>(s.front().size());
  x.shots = std::move(s);
  return x;
}

std::string bits_of(const VertexList& v, int n) {
  std::string s(n, '0');
  for (int i : v) s[i] = '1';
  return s;
}

}  // namespace

TEST_CASE("baseline pulse") {
  const PulseSpec p = pulse_spec(50, PulseVariant::baseline);
  CHECK(p.omega == 3.30);
  CHECK(p.duration == 4.0);
  CHECK(p.detuning.knots.front().second == -9.9);
  CHECK(p.detuning.knots.back().second == 9.9);
  CHECK(p.detuning.knots.back().first == 4.0);
  CHECK(pulse_spec(81, PulseVariant::baseline).duration == 6.0);
  CHECK(pulse_spec(80, PulseVariant::baseline).duration == 4.0);
  const PulseSpec r = pulse_spec(50, PulseVariant::reduced_omega);
  CHECK(r.omega == 1.63);
  CHECK(r.detuning.knots.back().second == 4.89);
}

TEST_CASE("every variant ramps from negative to positive over the duration") {
  for (auto v : {PulseVariant::baseline, PulseVariant::trapezoid, PulseVariant::four_knot,
                 PulseVariant::cubic_detuning, PulseVariant::reduced_omega}) {
    const PulseSpec p = pulse_spec(30, v);
    CHECK(p.detuning.knots.front().second < 0);
    CHECK(p.detuning.knots.back().second > 0);
    CHECK(p.detuning.knots.front().first == 0.0);
    CHECK(p.detuning.knots.back().first == p.duration);
    CHECK(p.envelope.knots.back().first == p.duration);
    for (std::size_t i = 1; i < p.detuning.knots.size(); ++i)
      CHECK(p.detuning.knots[i].second > p.detuning.knots[i - 1].second);
    CHECK(pulse_variant_from_name(pulse_variant_name(v)) == v);
  }
  CHECK_THROWS_AS(pulse_variant_from_name("square"), InputError);
  CHECK_THROWS_AS(pulse_spec(0, PulseVariant::baseline), InputError);
  CHECK(pulse_to_json(pulse_spec(10, PulseVariant::trapezoid)).at("envelope").at("knots").size() == 4);
}

TEST_CASE("analyze: trivial shots") {
  const Graph c5 = cycle(5);
  const ShotReport z = analyze(make_shots({"00000"}), c5, 2, ShotRegime::embedded);
  CHECK(z.valid_fraction == 1.0);
  CHECK(z.best_ratio == 0.0);
  const ShotReport w = analyze(make_shots({bits_of(solve_exact(c5).witness, 5)}), c5, 2, ShotRegime::embedded);
  CHECK(w.best_ratio == 1.0);
}

TEST_CASE("analyze: C5 worked example") {
  const ShotReport r = analyze(make_shots({"10100", "11000", "00000"}), cycle(5), 2, ShotRegime::embedded);
  CHECK(r.valid_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(r.best_ratio == 1.0);
  // weights 2, 2, 0: |w - 2| <= 1 only for the first two.
  CHECK(r.near_valid_weight_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(r.hamming_histogram == std::map<int, int>{{0, 1}, {2, 2}});
  CHECK(r.best_shot == "10100");
}

TEST_CASE("analyze: no valid shot gives r = 0") {
  const ShotReport r = analyze(make_shots({"11000", "01100", "11111"}), cycle(5), 2, ShotRegime::exact_udg);
  CHECK(r.valid_fraction == 0.0);
  CHECK(r.best_ratio == 0.0);
  CHECK_FALSE(r.best_shot.has_value());
  CHECK(r.near_valid_edge_fraction == doctest::Approx(2.0 / 3.0));
  CHECK(r.near_valid_fraction == r.near_valid_edge_fraction);
}

TEST_CASE("analyze: shots drawn from the optima") {
  const Graph k = generate(design::king(5, 5));
  const OptimaEnumeration e = enumerate_optima(k);
  std::vector<std::string> s;
  Rng rng = stream_rng(3, 0);
  for (int i = 0; i < 200; ++i) s.push_back(bits_of(e.solutions[uniform_index(rng, static_cast<int>(e.solutions.size()))], 25));
  const ShotReport r = analyze(make_shots(s), k, 9, ShotRegime::exact_udg);
  CHECK(r.valid_fraction == 1.0);
  CHECK(r.best_ratio == 1.0);
}

TEST_CASE("analyze properties") {
  const Graph g = random_graph(12, 0.25, 3);
  const Graph super(12, [&] {
    auto e = g.edges();
    for (int v = 1; v < 12; ++v)
      if (!g.adjacent(0, v)) {
        e.emplace_back(0, v);
        break;
      }
    return e;
  }());
  const int alpha = solve_exact(g).alpha;
  Rng rng = stream_rng(5, 0);
  std::vector<std::string> s;
  double last = 0.0;
  for (int i = 0; i < 60; ++i) {
    std::string b(12, '0');
    for (auto& ch : b) ch = uniform01(rng) < 0.3 ? '1' : '0';
    s.push_back(b);
    const ShotReport r = analyze(make_shots(s), g, alpha, ShotRegime::exact_udg);
    CHECK(r.best_ratio >= last);
    last = r.best_ratio;
    CHECK(r.near_valid_edge_fraction >= r.valid_fraction);
    CHECK(analyze(make_shots(s), super, alpha, ShotRegime::exact_udg).valid_fraction <= r.valid_fraction);
  }
}

TEST_CASE("analyze errors") {
  CHECK_THROWS_AS(analyze(make_shots({"0000"}), cycle(5), 2, ShotRegime::embedded), InputError);
  CHECK_THROWS_AS(analyze(make_shots({"00000"}), cycle(5), 0, ShotRegime::embedded), InputError);
  CHECK_THROWS_AS(regime_from_name("soft"), InputError);
}

TEST_CASE("shots file") {
  const ShotSet s = parse_shots("# device: emulator\n# n_atoms=3\n101\n\n010\n");
  CHECK(s.n_atoms == 3);
  CHECK(s.shots.size() == 2);
  CHECK(s.metadata.at("device") == "emulator");
  CHECK(parse_shots(format_shots(s)).shots == s.shots);
  CHECK_THROWS_AS(parse_shots("101\n01\n"), InputError);
  CHECK_THROWS_AS(parse_shots("# n_atoms: 4\n101\n"), InputError);
  CHECK_THROWS_AS(parse_shots("10a\n"), InputError);
  CHECK_THROWS_AS(parse_shots("# only header\n"), InputError);
}

TEST_CASE("canonical recovery") {
  const Graph p5 = path(5);
  const Graph reg(5, {});
  const std::vector<int> id = {0, 1, 2, 3, 4};
  const VertexList backbone = {0, 2, 4};

  const ShotSet toy = make_shots({"11001"});
  CHECK(canonical_recovery(toy, id, reg, p5, 3, RecoveryMode::backbone_overlap, backbone).value ==
        doctest::Approx(2.0 / 3.0));
  CHECK(canonical_recovery(toy, id, reg, p5, 3, RecoveryMode::largest_sub_is).value == doctest::Approx(2.0 / 3.0));

  const ShotSet exact = make_shots({"10101"});
  CHECK(canonical_recovery(exact, id, reg, p5, 3, RecoveryMode::backbone_overlap, backbone).value == 1.0);
  CHECK(canonical_recovery(exact, id, reg, p5, 3, RecoveryMode::largest_sub_is).value == 1.0);

  const ShotSet empty = make_shots({"00000"});
  CHECK(canonical_recovery(empty, id, reg, p5, 3, RecoveryMode::largest_sub_is).value == 0.0);

  // A shot that breaks the register graph is not counted.
  const Graph reg_edge(5, {{0, 2}});
  const RecoveryResult r = canonical_recovery(exact, id, reg_edge, p5, 3, RecoveryMode::largest_sub_is);
  CHECK(r.value == 0.0);
  CHECK(r.best_shot_index == -1);

  // Mapping through a permutation.
  const std::vector<int> rev = {4, 3, 2, 1, 0};
  CHECK(canonical_recovery(make_shots({"10011"}), rev, reg, p5, 3, RecoveryMode::backbone_overlap, backbone).value ==
        doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(canonical_recovery(toy, id, reg, p5, 3, RecoveryMode::backbone_overlap), InputError);
  CHECK_THROWS_AS(canonical_recovery(toy, std::vector<int>{0, 0, 1, 2, 3}, reg, p5, 3, RecoveryMode::largest_sub_is),
                  InputError);
}
