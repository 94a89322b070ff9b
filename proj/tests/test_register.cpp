#include <doctest.h>

#include <cmath>
#include <set>

#include "backbone/forge.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/register.hpp"
#include "support.hpp"

using namespace backbone;
using namespace backbone::testing;

namespace {

Register line_register(std::initializer_list<double> xs, double r_b = 8.0) {
  Coords c(static_cast<int>(xs.size()), 2);
  int i = 0;
  for (double x : xs) c.row(i++) << x, 0.0;
  return register_from_coords(c, r_b);
}

EmbedConfig quick(LatticeMode mode, std::uint64_t seed) {
  EmbedConfig c;
  c.mode = mode;
  c.iterations = 3000;
  c.restarts = 4;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("king register geometry") {
  const Graph k = generate(design::king(5, 5));
  const Register reg = register_from_coords(*k.coords(), 8.0);
  CHECK(edge_recall(k, reg) == 1.0);
  CHECK(blockade_margin(reg, k) == 1.25);

  Coords centred = *k.coords();
  centred.rowwise() -= centred.colwise().mean();
  CHECK(hardware_validate(register_from_coords(centred, 8.0)).empty());
}

TEST_CASE("re-spacing the hex patch raises the margin") {
  const Graph hex = generate(design::centered_hex(5));
  REQUIRE(hex.n() == 91);
  const Register a5 = register_from_coords(*hex.coords(), 8.0);
  const Register a6 = register_from_coords(*hex.coords() * 1.2, 8.0);
  CHECK(edge_recall(hex, a6) == 1.0);
  CHECK(std::abs(blockade_margin(a5, hex) - 1.08) <= 0.01);
  CHECK(std::abs(blockade_margin(a6, hex) - 1.30) <= 0.01);
  CHECK(blockade_margin(a5, hex) == doctest::Approx(5 * std::sqrt(3.0) / 8));
}

TEST_CASE("edge_recall examples") {
  const Graph p = path(4);
  CHECK(edge_recall(p, line_register({0, 10, 20, 30})) == 0.0);
  const Graph four(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(edge_recall(four, line_register({0, 5, 20, 25})) == 0.5);
  CHECK(edge_recall(Graph(3, {}), line_register({0, 1, 2})) == 1.0);
  CHECK_THROWS_AS(edge_recall(p, line_register({0, 1})), InputError);
}

TEST_CASE("blockade_margin") {
  CHECK(blockade_margin(line_register({0, 5, 10}), path(3)) == 10.0 / 8.0);
  CHECK(blockade_margin(line_register({0, 3, 6}), path(3)) < 1.0);
  CHECK(std::isinf(blockade_margin(line_register({0, 5}), path(2))));
}

TEST_CASE("hardware_validate") {
  auto kinds = [](const std::vector<Violation>& v) {
    std::vector<std::string> k;
    for (const auto& x : v) k.push_back(x.kind);
    return k;
  };
  CHECK(kinds(hardware_validate(line_register({0, 4}))) == std::vector<std::string>{"min_spacing"});
  CHECK(kinds(hardware_validate(line_register({0, 100}))) == std::vector<std::string>{"field_of_view"});
  Coords many(101, 2);
  for (int i = 0; i < 101; ++i) many.row(i) << 5.0 * (i % 11), 5.0 * (i / 11);
  many.rowwise() -= many.colwise().mean();
  CHECK(kinds(hardware_validate(register_from_coords(many, 8.0))) == std::vector<std::string>{"atom_count"});
  HardwareProfile loose;
  loose.min_spacing = 3.0;
  CHECK(hardware_validate(line_register({0, 4}), loose).empty());
  CHECK(hardware_profile_from_json(hardware_profile_to_json(loose)).min_spacing == 3.0);
}

TEST_CASE("embedding with the generator coordinates recovers the king graph") {
  const Graph k = generate(design::king(5, 5));
  EmbedConfig c = quick(LatticeMode::planar, 1);
  c.init = *k.coords();
  const EmbedResult r = sa_embed(k, c);
  CHECK(r.recall == 1.0);
  CHECK(r.margin == 1.25);
  CHECK(r.missing_edges.empty());
}

TEST_CASE("edgeless target") {
  const EmbedResult r = sa_embed(Graph(6, {}), quick(LatticeMode::planar, 2));
  CHECK(r.recall == 1.0);
}

TEST_CASE("stored scores recompute exactly") {
  const Graph g = generate(design::random_regular(20, 4, 3));
  for (auto mode : {LatticeMode::planar, LatticeMode::bilayer, LatticeMode::volume}) {
    const EmbedResult r = sa_embed(g, quick(mode, 5));
    CHECK(edge_recall(g, r.reg) == r.recall);
    CHECK(blockade_margin(r.reg, g) == r.margin);
    CHECK(r.recall == doctest::Approx(1.0 - static_cast<double>(r.missing_edges.size()) / g.num_edges()));
    const Register back = register_from_json(Json::parse(dump_canonical(register_to_json(r.reg))));
    CHECK(edge_recall(g, back) == r.recall);
    CHECK(back.coords == r.reg.coords);
  }
}

TEST_CASE("layer geometry") {
  const Graph g = generate(design::random_regular(16, 3, 1));
  const EmbedResult l = sa_embed(g, quick(LatticeMode::bilayer, 1));
  std::set<double> z;
  for (int i = 0; i < l.reg.n(); ++i) z.insert(l.reg.coords(i, 2));
  CHECK(z.size() <= 2);
  for (double v : z) CHECK((v == 0.0 || v == doctest::Approx(6.4)));
  CHECK(sa_embed(g, quick(LatticeMode::planar, 1)).reg.coords.cols() == 2);
}

TEST_CASE("ladder is monotone and deterministic") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const Graph g = generate(design::random_regular(24, 6, 40 + s));
    const auto ladder = embed_ladder(g, quick(LatticeMode::volume, s));
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].recall <= ladder[1].recall);
    CHECK(ladder[1].recall <= ladder[2].recall);
  }
  const Graph g = generate(design::random_regular(24, 6, 1));
  EmbedConfig a = quick(LatticeMode::bilayer, 8);
  EmbedConfig b = a;
  a.threads = 1;
  b.threads = 3;
  CHECK(dump_canonical(embed_result_to_json(sa_embed(g, a))) == dump_canonical(embed_result_to_json(sa_embed(g, b))));
}

TEST_CASE("margin targets") {
  const Graph k = generate(design::king(4, 4));
  EmbedConfig c = quick(LatticeMode::planar, 3);
  c.init = *k.coords();
  const auto rows = margin_sweep(k, {1.0}, c);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].ok);
  CHECK(rows[0].achieved_margin >= 1.0);
  CHECK(rows[0].recall == 1.0);
  CHECK_FALSE(rows[0].near_valid_proxy.has_value());
  CHECK_THROWS_AS(margin_sweep(k, {1.2, 1.0}, c), InputError);
}

TEST_CASE("config validation") {
  EmbedConfig c;
  c.iterations = 0;
  CHECK_THROWS_AS(c.validate(), InputError);
  c = EmbedConfig{};
  c.margin_target = 0.5;
  CHECK_THROWS_AS(c.validate(), InputError);
  CHECK(EmbedConfig{}.gap() == doctest::Approx(6.4));
  CHECK(ladder_preset(LatticeMode::planar, 1).iterations == 30000);
  CHECK(ladder_preset(LatticeMode::planar, 1).restarts == 15);
  CHECK(lattice_mode_from_name("2L") == LatticeMode::bilayer);
  CHECK_THROWS_AS(lattice_mode_from_name("4D"), InputError);
}
