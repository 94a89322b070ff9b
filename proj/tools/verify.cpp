#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

#include "backbone/graph_io.hpp"
#include "backbone/mis.hpp"
#include "backbone/register.hpp"
#include "cli.hpp"

namespace backbone::cli {

namespace {

namespace fs = std::filesystem;

class Checker {
 public:
  explicit Checker(const VerifyRequest& req) : req_(req) {
    if (!req.profile.empty()) profile_ = hardware_profile_from_json(load_json(req.profile));
  }

  VerifyOutcome run() {
    for (const auto& p : req_.graphs) guarded(p, [&] { check_graph(p); });
    for (const auto& p : req_.reports) guarded(p, [&] { check_report(p); });
    for (const auto& p : req_.registers) guarded(p, [&] { check_register(p); });
    for (const auto& p : req_.embeds) guarded(p, [&] { check_embed(p); });
    return out_;
  }

 private:
  template <class Fn>
  void guarded(const std::string& file, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      fail("unreadable", file, e.what());
    }
  }

  void fail(const std::string& kind, const std::string& file, const std::string& detail) {
    out_.violations.push_back({kind, file, detail});
  }
  void warn(const std::string& kind, const std::string& file, const std::string& detail) {
    out_.warnings.push_back({kind, file, detail});
  }
  // Records one check; false when it failed.
  bool expect(bool ok, const std::string& kind, const std::string& file, const std::string& detail) {
    ++out_.checks;
    if (!ok) fail(kind, file, detail);
    return ok;
  }

  void lint_json(const std::string& file, const std::string& text, const std::string& canonical) {
    if (req_.lint) expect(text == canonical, "not_canonical", file, "file differs from its canonical serialisation");
  }

  // Graph named inside an artifact; relative paths are tried from the working
  // directory, then from the artifact's own directory.
  std::optional<Graph> referenced_graph(const Json& j, const std::string& file) {
    if (!j.contains("input") || !j["input"].is_string()) {
      if (req_.graphs.size() == 1) return load_graph(req_.graphs.front());
      fail("graph_missing", file, "no input graph recorded and no single --graph given");
      return std::nullopt;
    }
    fs::path p = j["input"].get<std::string>();
    if (!fs::exists(p) && p.is_relative()) p = fs::path(file).parent_path() / p;
    if (!fs::exists(p)) {
      fail("graph_missing", file, "input graph not found: " + j["input"].get<std::string>());
      return std::nullopt;
    }
    return load_graph(p);
  }

  void check_graph(const std::string& file) {
    const std::string text = read_text_file(file);
    const Graph g = graph_from_json(Json::parse(text));
    ++out_.checks;  // structural invariants, enforced by the loader
    if (req_.lint) expect(text == serialize(g), "not_canonical", file, "file differs from its canonical serialisation");
    const Json& m = g.metadata();
    if (m.contains("density"))
      expect(m["density"].is_number() && m["density"].get<double>() == density(g), "density_mismatch", file,
             "metadata density differs from 2E/(N(N-1))");
    if (g.coords() && m.contains("radius") && m["radius"].is_number()) {
      const UdgCheck u = udg_check(g, *g.coords(), m["radius"].get<double>());
      expect(u.missing_edges.empty() && u.extra_edges.empty(), "udg_mismatch", file,
             std::to_string(u.missing_edges.size()) + " missing, " + std::to_string(u.extra_edges.size()) +
                 " extra edges at the recorded radius");
    }
  }

  bool check_set(const Graph& g, const Json& js, int alpha, const std::string& what, const std::string& file) {
    VertexList s;
    try {
      s = normalize_set(js.get<VertexList>(), g.n());
    } catch (const std::exception& e) {
      return expect(false, what + "_out_of_range", file, e.what());
    }
    if (!expect(s.size() == js.size(), what + "_duplicate_vertex", file, "repeated vertex")) return false;
    if (!expect(is_independent_set(g, s), what + "_not_independent", file,
                std::to_string(count_internal_edges(g, s)) + " internal edge(s)"))
      return false;
    return expect(static_cast<int>(s.size()) == alpha, what + "_size_mismatch", file,
                  "size " + std::to_string(s.size()) + " vs alpha " + std::to_string(alpha));
  }

  void check_report(const std::string& file) {
    const std::string text = read_text_file(file);
    const Json j = Json::parse(text);
    lint_json(file, text, dump_canonical(j));
    const std::string kind = j.value("kind", "");
    if (kind != "solve" && kind != "enumerate" && kind != "rigidity") {
      fail("unknown_report_kind", file, "kind '" + kind + "'");
      return;
    }
    const auto g = referenced_graph(j, file);
    if (!g) return;
    expect(j.at("n").get<int>() == g->n() && j.at("num_edges").get<int>() == g->num_edges(), "graph_mismatch", file,
           "recorded N / |E| differ from the graph");
    if (j.contains("density"))
      expect(j["density"].get<double>() == density(*g), "density_mismatch", file, "density differs from 2E/(N(N-1))");

    const int alpha = j.at("alpha").get<int>();
    const double limit = j.value("time_limit", 0.0);
    if (j.contains("witness")) check_set(*g, j["witness"], alpha, "witness", file);

    const MisResult fresh = solve_exact(*g, limit);
    if (fresh.exact())
      expect(fresh.alpha == alpha, "alpha_mismatch", file,
             "stored " + std::to_string(alpha) + ", fresh solve " + std::to_string(fresh.alpha));
    else
      warn("alpha_unconfirmed", file, "fresh solve did not finish within the stored time limit");
    if (kind == "solve" && !j.value("exact", true)) warn("inexact_alpha", file, "stored alpha is a lower bound");

    if (kind == "enumerate") {
      const auto& sols = j.at("solutions");
      std::set<VertexList> seen;
      for (const auto& s : sols) {
        check_set(*g, s, alpha, "solution", file);
        seen.insert(s.get<VertexList>());
      }
      expect(seen.size() == sols.size(), "duplicate_solution", file, "repeated optimum");
      expect(j.at("n_optima").get<std::size_t>() == sols.size(), "optima_count_mismatch", file,
             "n_optima differs from the stored list");
      const int cap = j.value("cap", 500);
      expect(static_cast<int>(sols.size()) <= cap, "cap_exceeded", file, "more solutions than the cap");
      if (fresh.exact() && j.value("complete", true)) {
        const OptimaEnumeration e = enumerate_optima(*g, fresh.alpha, cap, limit);
        if (!e.stats.timed_out)
          expect(e.solutions.size() == sols.size() && e.hit_cap == j.value("hit_cap", false), "optima_count_mismatch",
                 file, "fresh enumeration finds " + std::to_string(e.solutions.size()) + " optima");
      }
    }

    if (kind == "rigidity") {
      VertexList core = j.at("core").get<VertexList>();
      const double rho = j.at("rho").get<double>();
      expect(rho == rho_of(core.size(), alpha), "rho_mismatch", file, "rho differs from |core| / alpha");
      VertexList w = j.contains("witness") ? j["witness"].get<VertexList>() : VertexList{};
      std::sort(w.begin(), w.end());
      std::sort(core.begin(), core.end());
      expect(std::includes(w.begin(), w.end(), core.begin(), core.end()), "core_outside_witness", file,
             "core vertex missing from the witness");
      if (j.value("certified", false) && fresh.exact()) {
        const RigidityReport r = certify_core(*g, fresh, j.value("per_vertex_limit", 0.0));
        if (r.certified) expect(r.core == core, "core_mismatch", file, "fresh certification gives a different core");
      } else if (!j.value("certified", false)) {
        warn("uncertified_core", file, "core is a verified subset only");
      }
    }
  }

  void hardware(const Register& reg, const std::string& file) {
    for (const auto& v : hardware_validate(reg, profile_)) fail("hardware_" + v.kind, file, v.detail);
    ++out_.checks;
  }

  void check_register(const std::string& file) {
    const std::string text = read_text_file(file);
    const Json j = Json::parse(text);
    lint_json(file, text, dump_canonical(j));
    const Register reg = register_from_json(j);
    ++out_.checks;
    hardware(reg, file);
  }

  void check_embed(const std::string& file) {
    const std::string text = read_text_file(file);
    const Json j = Json::parse(text);
    lint_json(file, text, dump_canonical(j));
    const Register reg = register_from_json(j.at("register"));
    const auto g = referenced_graph(j, file);
    if (!g) return;
    if (!expect(reg.n() == g->n(), "graph_mismatch", file, "register size differs from the graph")) return;
    const double recall = edge_recall(*g, reg);
    expect(recall == j.at("recall").get<double>(), "recall_mismatch", file,
           "recomputed recall " + std::to_string(recall));
    const double margin = blockade_margin(reg, *g);
    const Json& sm = j.at("margin");
    expect(sm.is_null() ? std::isinf(margin) : sm.get<double>() == margin, "margin_mismatch", file,
           "recomputed margin " + std::to_string(margin));
    const UdgCheck u = udg_check(*g, reg.coords, reg.r_b);
    Json missing = Json::array();
    for (const auto& [a, b] : u.missing_edges) missing.push_back({a, b});
    expect(missing == j.value("missing_edges", Json::array()), "missing_edges_mismatch", file,
           "stored missing-edge list differs");
    if (j.contains("hardware_violations") && !j["hardware_violations"].empty())
      warn("hardware_violations_recorded", file, "embedding recorded hardware violations");
  }

  const VerifyRequest& req_;
  HardwareProfile profile_;
  VerifyOutcome out_;
};

Json violations_json(const std::vector<Violation>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back({{"kind", v.kind}, {"file", v.file}, {"detail", v.detail}});
  return a;
}

}  // namespace

VerifyOutcome verify(const VerifyRequest& req) { return Checker(req).run(); }

Json verify_outcome_to_json(const VerifyOutcome& v) {
  return {{"checks", v.checks}, {"violations", violations_json(v.violations)}, {"warnings", violations_json(v.warnings)}};
}

}  // namespace backbone::cli
