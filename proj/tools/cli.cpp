#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "backbone/forge.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/mis.hpp"
#include "backbone/pulse.hpp"
#include "backbone/register.hpp"
#include "backbone/shots.hpp"
#include "backbone/structure.hpp"
#include "backbone/textgraph.hpp"

namespace backbone::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Defaults from the file named by BACKBONE_CONFIG; explicit flags always win.
Json load_config() {
  const char* p = std::getenv("BACKBONE_CONFIG");
  if (!p || !*p) return Json::object();
  Json j = load_json(p);
  if (!j.is_object()) throw InputError("config file must hold a JSON object");
  return j;
}

template <class T>
void from_config(const CLI::Option* opt, T& var, const Json& cfg, const char* section, const char* key) {
  if (opt->count() > 0 || !cfg.contains(section)) return;
  const Json& s = cfg.at(section);
  if (s.contains(key)) var = s.at(key).get<T>();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

Json set_json(const VertexList& s) { return Json(s); }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" ", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not a number in list: '" + item + "'");
    }
  }
  if (v.empty()) throw InputError("empty list");
  return v;
}

Graph load_input_graph(const std::string& path) { return load_graph(path); }

// ---------------------------------------------------------------- commands

struct Common {
  std::string input;
  std::string output;
  double time_limit = 0.0;
  int threads = 0;
  bool timings = false;
};

int cmd_build_graph(const Common& c, const std::string& mode, int k, double t, bool raw, std::ostream& out) {
  const EmbeddingMatrix e = load_embeddings(c.input);
  KnnConfig cfg;
  cfg.k = k;
  cfg.t = t;
  cfg.mode = knn_mode_from_name(mode);
  cfg.normalize = !raw;
  Graph g = build_knn_graph(e, cfg);
  Json meta = g.metadata();
  meta["source"] = {{"vectors", c.input}, {"n_units", e.n_units()}, {"dim", e.dim()}};
  meta["density"] = density(g);
  emit(serialize(g.with_metadata(meta)), c.output, out);
  return kOk;
}

Json solve_json(const Graph& g, const MisResult& r, const Common& c) {
  Json j = {{"kind", "solve"},
            {"input", c.input},
            {"n", g.n()},
            {"num_edges", g.num_edges()},
            {"density", density(g)},
            {"alpha", r.alpha},
            {"witness", set_json(r.witness)},
            {"exact", r.exact()},
            {"time_limit", c.time_limit},
            {"nodes", r.stats.nodes}};
  if (c.timings) j["timings"] = {{"solve_s", r.stats.wall_seconds}};
  return j;
}

int cmd_solve(const Common& c, std::ostream& out) {
  const Graph g = load_input_graph(c.input);
  const MisResult r = solve_exact(g, c.time_limit);
  emit(dump_canonical(solve_json(g, r, c)), c.output, out);
  return kOk;
}

int cmd_enumerate(const Common& c, int cap, std::ostream& out) {
  if (cap < 1) throw InputError("--cap must be at least 1");
  const Graph g = load_input_graph(c.input);
  const OptimaEnumeration e = enumerate_optima(g, cap, c.time_limit);
  Json sols = Json::array();
  for (const auto& s : e.solutions) sols.push_back(s);
  Json j = {{"kind", "enumerate"},
            {"input", c.input},
            {"n", g.n()},
            {"num_edges", g.num_edges()},
            {"density", density(g)},
            {"alpha", e.alpha},
            {"solutions", sols},
            {"n_optima", e.solutions.size()},
            {"cap", e.cap},
            {"hit_cap", e.hit_cap},
            {"complete", !e.stats.timed_out},
            {"time_limit", c.time_limit}};
  if (c.timings) j["timings"] = {{"enumerate_s", e.stats.wall_seconds}};
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

Json rigidity_json(const Graph& g, const RigidityReport& r, const Common& c, int cap, double per_vertex) {
  return {{"kind", "rigidity"},
          {"input", c.input},
          {"n", g.n()},
          {"num_edges", g.num_edges()},
          {"density", density(g)},
          {"alpha", r.alpha},
          {"witness", set_json(r.witness)},
          {"core", set_json(r.core)},
          {"rho", r.rho},
          {"n_optima", r.n_optima},
          {"n_optima_exact", r.n_optima_exact},
          {"hit_cap", r.hit_cap},
          {"certified", r.certified},
          {"cap", cap},
          {"time_limit", c.time_limit},
          {"per_vertex_limit", per_vertex}};
}

int cmd_rigidity(const Common& c, int cap, double per_vertex, std::ostream& out) {
  if (cap < 1) throw InputError("--cap must be at least 1");
  const Graph g = load_input_graph(c.input);
  const auto t0 = Clock::now();
  RigidityOptions opt;
  opt.cap = cap;
  opt.time_limit_s = c.time_limit;
  opt.per_vertex_limit_s = per_vertex;
  opt.threads = c.threads;
  const RigidityReport r = analyze_rigidity(g, opt);
  Json j = rigidity_json(g, r, c, cap, per_vertex);
  if (c.timings) j["timings"] = {{"total_s", seconds_since(t0)}};
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

int cmd_nullmodel(const Common& c, const std::string& model, int trials, std::uint64_t seed, std::ostream& out) {
  if (trials < 1) throw InputError("--trials must be at least 1");
  const Graph g = load_input_graph(c.input);
  NullOptions opt;
  opt.time_limit_s = c.time_limit;
  opt.threads = c.threads;
  const auto t0 = Clock::now();
  NullEnsembleStats s;
  if (model == "er")
    s = er_null(g, trials, seed, opt);
  else if (model == "config")
    s = config_null(g, trials, seed, opt);
  else
    throw InputError("--model must be 'er' or 'config'");
  Json hist = Json::object();
  for (const auto& [a, n] : s.alpha_histogram()) hist[std::to_string(a)] = n;
  Json per = Json::array();
  for (const auto& t : s.per_trial) {
    Json row = {{"seed", t.seed}, {"alpha", t.alpha}, {"flagged", t.flagged}};
    if (s.model == NullModel::config) row["accepted_swaps"] = t.accepted_swaps;
    if (t.flagged) row["flag_reason"] = t.flag_reason;
    per.push_back(row);
  }
  Json j = {{"kind", "nullmodel"},
            {"input", c.input},
            {"model", null_model_name(s.model)},
            {"sampling", s.model == NullModel::er ? "G(n,m): exact N and E" : "double-edge swaps, >= 10 E accepted"},
            {"seed", seed},
            {"trials", s.trials},
            {"real_alpha", s.real_alpha},
            {"alpha_histogram", hist},
            {"greater_than_real", s.count_greater_than_real()},
            {"empirical_p", s.empirical_p},
            {"flagged", s.flagged},
            {"per_trial", per}};
  if (c.timings) j["timings"] = {{"total_s", seconds_since(t0)}};
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

int cmd_baselines(const Common& c, const std::string& vectors, int size, std::ostream& out) {
  const Graph g = load_input_graph(c.input);
  const MisResult mis = solve_exact(g, c.time_limit);
  const int k = size > 0 ? size : mis.alpha;
  if (k < 1 || k > g.n()) throw InputError("subset size out of range");

  Eigen::MatrixXd dist, sim;
  std::string source;
  if (!vectors.empty()) {
    const EmbeddingMatrix e = load_embeddings(vectors);
    if (e.n_units() != g.n()) throw InputError("vector count differs from graph size");
    sim = cosine_matrix(e, true);
    dist = (1.0 - sim.array()).matrix();
    dist.diagonal().setZero();
    source = "cosine";
  } else {
    dist = hop_distance(g);
    sim = -dist;
    source = "hops";
  }
  Json methods = Json::array();
  for (auto m : {BaselineMethod::k_center, BaselineMethod::facility_location}) {
    VertexList sel = m == BaselineMethod::k_center ? k_center_select(dist, k) : facility_location_select(sim, k);
    const BaselineComparison b = compare_baseline(m, sel, mis.witness, g);
    methods.push_back({{"method", baseline_name(b.method)},
                       {"selected", b.selected},
                       {"overlap_with_backbone", b.overlap_with_backbone},
                       {"adjacency_violations", b.adjacency_violations}});
  }
  Json j = {{"kind", "baselines"},
            {"input", c.input},
            {"distance", source},
            {"size", k},
            {"alpha", mis.alpha},
            {"exact", mis.exact()},
            {"backbone", mis.witness},
            {"backbone_violations", count_internal_edges(g, mis.witness)},
            {"methods", methods}};
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

std::string catalogue_text() {
  std::string s;
  for (const auto& f : catalogue()) {
    s += f.name + (f.geometric ? " (geometric " + std::to_string(f.dimension) + "D)" : "") +
         (f.randomized ? " (needs --seed)" : "") + ": " + f.description + "\n";
    for (const auto& p : f.params) {
      s += "    --" + p.name + " <" + p.type + ">";
      s += p.default_value.is_null() ? " required" : " default " + p.default_value.dump();
      s += "  " + p.description + "\n";
    }
  }
  return s;
}

// Family parameters arrive as leftover "--name value" pairs.
Json family_params(const FamilyInfo& info, const std::vector<std::string>& extras) {
  Json params = Json::object();
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    std::string value;
    if (key.rfind("--", 0) != 0) throw CLI::ExtrasError({key});
    key = key.substr(2);
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw CLI::ArgumentMismatch("--" + key + " needs a value");
      value = extras[++i];
    }
    for (auto& ch : key)
      if (ch == '-') ch = '_';
    const ParamInfo* p = nullptr;
    for (const auto& q : info.params)
      if (q.name == key) p = &q;
    if (!p) throw CLI::ExtrasError({"--" + key});
    try {
      if (p->type == "int") {
        std::size_t used = 0;
        const long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        params[key] = v;
      } else if (p->type == "float") {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        params[key] = v;
      } else {
        params[key] = Json::parse(value);
      }
    } catch (const std::exception&) {
      throw CLI::ConversionError("--" + key, value);
    }
  }
  return params;
}

int cmd_generate(const Common& c, const std::string& family, std::optional<double> spacing,
                 std::optional<std::uint64_t> seed, const std::vector<std::string>& extras, std::ostream& out) {
  const Family f = family_from_name(family);
  DesignSpec spec;
  spec.family = f;
  spec.params = family_params(family_info(f), extras);
  if (spacing) spec.spacing = *spacing;
  spec.seed = seed;
  Graph g = generate(spec);
  Json meta = g.metadata();
  meta["density"] = density(g);
  emit(serialize(g.with_metadata(meta)), c.output, out);
  return kOk;
}

struct EmbedFlags {
  std::string mode = "2D";
  std::string preset = "default";
  std::optional<int> iterations;
  std::optional<int> restarts;
  double r_b = 8.0;
  double site_spacing = 5.0;
  std::optional<double> layer_gap;
  std::optional<double> margin_target;
  double margin_penalty = 20.0;
  double extra_edge_weight = 0.0;
  double site_factor = 2.0;
  bool init_coords = false;
  std::string register_output;
  std::string profile;
};

EmbedConfig embed_config(const EmbedFlags& f, const Graph& g, std::uint64_t seed, int threads) {
  const LatticeMode mode = lattice_mode_from_name(f.mode);
  EmbedConfig cfg;
  if (f.preset == "ladder")
    cfg = ladder_preset(mode, seed);
  else if (f.preset != "default")
    throw InputError("--preset must be 'default' or 'ladder'");
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.threads = threads;
  if (f.iterations) cfg.iterations = *f.iterations;
  if (f.restarts) cfg.restarts = *f.restarts;
  cfg.r_b = f.r_b;
  cfg.site_spacing = f.site_spacing;
  cfg.layer_gap = f.layer_gap;
  cfg.margin_target = f.margin_target;
  cfg.margin_penalty = f.margin_penalty;
  cfg.extra_edge_weight = f.extra_edge_weight;
  cfg.site_factor = f.site_factor;
  if (f.init_coords) {
    if (!g.coords()) throw InputError("--init-coords needs a graph with coordinates");
    cfg.init = *g.coords();
  }
  cfg.validate();
  return cfg;
}

Json config_json(const EmbedConfig& cfg) {
  Json j = {{"mode", lattice_mode_name(cfg.mode)},
            {"r_b", cfg.r_b},
            {"site_spacing", cfg.site_spacing},
            {"layer_gap", cfg.gap()},
            {"iterations", cfg.iterations},
            {"restarts", cfg.restarts},
            {"seed", cfg.seed},
            {"margin_penalty", cfg.margin_penalty},
            {"extra_edge_weight", cfg.extra_edge_weight},
            {"site_factor", cfg.site_factor},
            {"init_given", cfg.init.has_value()}};
  j["margin_target"] = cfg.margin_target ? Json(*cfg.margin_target) : Json();
  return j;
}

int cmd_embed(const Common& c, const EmbedFlags& f, std::uint64_t seed, std::ostream& out) {
  const Graph g = load_input_graph(c.input);
  const EmbedConfig cfg = embed_config(f, g, seed, c.threads);
  const auto t0 = Clock::now();
  const std::vector<EmbedResult> stages = embed_ladder(g, cfg);
  const EmbedResult& r = stages.back();
  Json ladder = Json::array();
  for (const auto& s : stages)
    ladder.push_back({{"mode", lattice_mode_name(s.mode)}, {"recall", s.recall}, {"best_restart", s.best_restart}});
  Json j = embed_result_to_json(r);
  j["kind"] = "embed";
  j["input"] = c.input;
  j["config"] = config_json(cfg);
  j["ladder"] = ladder;
  HardwareProfile hw;
  if (!f.profile.empty()) hw = hardware_profile_from_json(load_json(f.profile));
  Json viol = Json::array();
  for (const auto& v : hardware_validate(r.reg, hw)) viol.push_back({{"kind", v.kind}, {"detail", v.detail}});
  j["hardware_violations"] = viol;
  if (c.timings) j["timings"] = {{"total_s", seconds_since(t0)}};
  if (!f.register_output.empty()) write_text_file(f.register_output, dump_canonical(register_to_json(r.reg)));
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

int cmd_margin_sweep(const Common& c, const EmbedFlags& f, const std::string& targets, std::uint64_t seed,
                     std::ostream& out) {
  const Graph g = load_input_graph(c.input);
  EmbedConfig cfg = embed_config(f, g, seed, c.threads);
  const auto rows = margin_sweep(g, parse_list(targets), cfg);
  std::string csv = "target_margin,achieved_margin,recall,near_valid_proxy,ok,error\n";
  for (const auto& r : rows) {
    csv += fmt(r.target_margin) + "," + (std::isfinite(r.achieved_margin) ? fmt(r.achieved_margin) : "inf") + "," +
           fmt(r.recall) + "," + (r.near_valid_proxy ? fmt(*r.near_valid_proxy) : "") + "," + (r.ok ? "1" : "0") + ",";
    std::string e = r.error;
    for (auto& ch : e)
      if (ch == ',' || ch == '\n') ch = ';';
    csv += e + "\n";
  }
  emit(csv, c.output, out);
  return kOk;
}

int cmd_pulse(const Common& c, std::optional<int> n_atoms, const std::string& reg_path, const std::string& variant,
              std::optional<double> omega, std::optional<double> duration, double r_b, std::ostream& out) {
  int n = 0;
  if (n_atoms && !reg_path.empty()) throw InputError("give --n-atoms or --register, not both");
  if (n_atoms)
    n = *n_atoms;
  else if (!reg_path.empty())
    n = register_from_json(load_json(reg_path)).n();
  else
    throw InputError("pulse-export needs --n-atoms or --register");
  PulseOptions opt;
  opt.omega = omega;
  opt.duration = duration;
  opt.r_b = r_b;
  emit(dump_canonical(pulse_to_json(pulse_spec(n, pulse_variant_from_name(variant), opt))), c.output, out);
  return kOk;
}

struct ShotFlags {
  std::string shots;
  std::optional<int> alpha;
  std::string regime;
  std::string text_graph;
  std::string map;
  std::string recovery_mode = "backbone_overlap";
  std::string reference;
};

int cmd_analyze(const Common& c, const ShotFlags& f, std::ostream& out) {
  const Graph g = load_input_graph(c.input);
  const ShotSet shots = load_shots(f.shots);
  int alpha = 0;
  bool alpha_solved = false;
  if (f.alpha) {
    alpha = *f.alpha;
  } else {
    const MisResult m = solve_exact(g, c.time_limit);
    if (!m.exact()) throw InputError("benchmark alpha not proven within the time limit; pass --alpha");
    alpha = m.alpha;
    alpha_solved = true;
  }
  ShotReport rep = analyze(shots, g, alpha, regime_from_name(f.regime));
  Json recovery;
  if (!f.text_graph.empty()) {
    const Graph text = load_graph(f.text_graph);
    std::vector<int> map;
    if (!f.map.empty()) {
      map = load_json(f.map).get<std::vector<int>>();
    } else {
      map.resize(shots.n_atoms);
      for (int i = 0; i < shots.n_atoms; ++i) map[i] = i;
    }
    const MisResult tm = solve_exact(text, c.time_limit);
    if (!tm.exact()) throw InputError("text-graph alpha not proven within the time limit");
    const RecoveryMode mode = recovery_mode_from_name(f.recovery_mode);
    std::optional<VertexList> ref;
    std::string ref_source = "none";
    if (!f.reference.empty()) {
      ref = load_json(f.reference).get<VertexList>();
      ref_source = f.reference;
    } else if (mode == RecoveryMode::backbone_overlap) {
      ref = tm.witness;  // core is inside every optimum, so core + this optimum = this optimum
      ref_source = "exact_witness";
    }
    const RecoveryResult rr = canonical_recovery(shots, map, g, text, tm.alpha, mode, ref);
    rep.canonical_recovery = rr.value;
    recovery = {{"mode", recovery_mode_name(rr.mode)},
                {"value", rr.value},
                {"recovered", rr.recovered},
                {"alpha_text", tm.alpha},
                {"best_shot_index", rr.best_shot_index},
                {"reference", ref ? Json(*ref) : Json()},
                {"reference_source", ref_source}};
  }
  Json j = shot_report_to_json(rep);
  j["kind"] = "analyze-shots";
  j["input"] = c.input;
  j["shots"] = f.shots;
  j["alpha_source"] = alpha_solved ? "solved" : "given";
  j["recovery"] = recovery;
  j["shot_metadata"] = shots.metadata;
  emit(dump_canonical(j), c.output, out);
  return kOk;
}

int cmd_report(const std::vector<std::string>& inputs, const Common& c, int cap, const std::string& json_path,
               std::ostream& out) {
  if (inputs.empty()) throw InputError("report needs at least one --input");
  std::string csv = "graph,n,edges,density,alpha,rho,n_optima,n_optima_exact,hit_cap,certified";
  if (c.timings) csv += ",seconds";
  csv += "\n";
  Json rows = Json::array();
  for (const auto& path : inputs) {
    const Graph g = load_graph(path);
    const auto t0 = Clock::now();
    RigidityOptions opt;
    opt.cap = cap;
    opt.time_limit_s = c.time_limit;
    opt.per_vertex_limit_s = c.time_limit;
    opt.threads = c.threads;
    const RigidityReport r = analyze_rigidity(g, opt);
    const double secs = seconds_since(t0);
    const std::string name = fs::path(path).stem().string();
    csv += name + "," + std::to_string(g.n()) + "," + std::to_string(g.num_edges()) + "," + fmt(density(g)) + "," +
           std::to_string(r.alpha) + "," + fmt(r.rho) + "," + std::to_string(r.n_optima) + "," +
           (r.n_optima_exact ? "1" : "0") + "," + (r.hit_cap ? "1" : "0") + "," + (r.certified ? "1" : "0");
    if (c.timings) csv += "," + fmt(secs);
    csv += "\n";
    Common one = c;
    one.input = path;
    Json row = rigidity_json(g, r, one, cap, c.time_limit);
    row["graph"] = name;
    if (g.metadata().contains("family")) row["family"] = g.metadata()["family"];
    if (c.timings) row["timings"] = {{"total_s", secs}};
    rows.push_back(row);
  }
  if (!json_path.empty()) write_text_file(json_path, dump_canonical({{"kind", "report"}, {"rows", rows}}));
  emit(csv, c.output, out);
  return kOk;
}

int cmd_verify(const VerifyRequest& req, const std::string& output, std::ostream& out, std::ostream& err) {
  if (req.graphs.empty() && req.reports.empty() && req.registers.empty() && req.embeds.empty())
    throw InputError("verify needs at least one of --graph, --report, --register, --embed");
  const VerifyOutcome v = verify(req);
  emit(dump_canonical(verify_outcome_to_json(v)), output, out);
  for (const auto& x : v.violations) err << "violation " << x.kind << " in " << x.file << ": " << x.detail << "\n";
  const bool fail = !v.violations.empty() || (req.strict && !v.warnings.empty());
  if (req.strict)
    for (const auto& x : v.warnings) err << "violation " << x.kind << " in " << x.file << ": " << x.detail << "\n";
  return fail ? kDomainError : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Backbone analysis toolkit: text graphs, exact MIS, rigidity, registers, shots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  Common c;
  auto add_io = [&](CLI::App* s, bool input_required = true) {
    auto* in = s->add_option("--input", c.input, "input file");
    if (input_required) in->required();
    s->add_option("--output", c.output, "output file (default stdout)");
  };
  auto add_solver = [&](CLI::App* s) {
    return s->add_option("--time-limit", c.time_limit, "solver time limit in seconds (0: none)")->check(CLI::NonNegativeNumber);
  };
  auto add_threads = [&](CLI::App* s) { s->add_option("--threads", c.threads, "worker threads (0: all cores)"); };
  auto add_timings = [&](CLI::App* s) { s->add_flag("--timings", c.timings, "include wall-clock timings"); };

  std::string knn_mode;
  int knn_k = 8;
  double knn_t = 0.78;
  bool raw = false;
  auto* build = app.add_subcommand("build-graph", "k-NN graph from a vector file (EMB1 or CSV)");
  add_io(build);
  build->add_option("--mode", knn_mode, "union or mutual")->required()->check(CLI::IsMember({"union", "mutual"}));
  auto* k_opt = build->add_option("--k", knn_k, "neighbours per unit");
  auto* t_opt = build->add_option("--threshold", knn_t, "cosine threshold applied to k-NN candidates");
  build->add_flag("--no-normalize", raw, "use raw dot products");

  auto* solve = app.add_subcommand("solve", "exact maximum independent set");
  add_io(solve);
  auto* solve_tl = add_solver(solve);
  add_timings(solve);

  int cap = 500;
  auto* enumerate = app.add_subcommand("enumerate", "all maximum independent sets up to a cap");
  add_io(enumerate);
  auto* enum_tl = add_solver(enumerate);
  auto* enum_cap = enumerate->add_option("--cap", cap, "solution cap");
  add_timings(enumerate);

  double per_vertex = 0.0;
  auto* rigidity = app.add_subcommand("rigidity", "persistent core, rho and certification");
  add_io(rigidity);
  auto* rig_tl = add_solver(rigidity);
  auto* rig_cap = rigidity->add_option("--cap", cap, "enumeration cap");
  auto* rig_pv = rigidity->add_option("--per-vertex-limit", per_vertex, "time limit per exclusion solve");
  add_threads(rigidity);
  add_timings(rigidity);

  std::string null_model;
  int trials = 100;
  std::uint64_t seed = 0;
  auto* nullmodel = app.add_subcommand("nullmodel", "ER or configuration-model null ensemble");
  add_io(nullmodel);
  auto* null_tl = add_solver(nullmodel);
  nullmodel->add_option("--model", null_model, "er or config")->required()->check(CLI::IsMember({"er", "config"}));
  auto* null_trials = nullmodel->add_option("--trials", trials, "number of null graphs");
  nullmodel->add_option("--seed", seed, "random seed")->required();
  add_threads(nullmodel);
  add_timings(nullmodel);

  std::string vectors;
  int size = 0;
  auto* baselines = app.add_subcommand("baselines", "k-center and facility-location subsets vs the backbone");
  add_io(baselines);
  add_solver(baselines);
  baselines->add_option("--vectors", vectors, "vector file for cosine distances (default: hop distances)");
  baselines->add_option("--size", size, "subset size (default alpha)");

  std::string family;
  bool list = false;
  std::optional<double> spacing;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("generate", "engineered graph family; family parameters as --name value");
  gen->add_option("--output", c.output, "output file (default stdout)");
  gen->add_option("--family", family, "family name");
  gen->add_flag("--list", list, "print the family catalogue");
  gen->add_option("--spacing", spacing, "nearest-neighbour spacing in um");
  gen->add_option("--seed", gen_seed, "seed (randomised families)");
  gen->allow_extras();

  EmbedFlags ef;
  auto add_embed = [&](CLI::App* s) {
    s->add_option("--mode", ef.mode, "2D, 2L or 3D")->check(CLI::IsMember({"2D", "2L", "3D"}));
    s->add_option("--preset", ef.preset, "default (20000 x 10) or ladder (30000 x 15)");
    s->add_option("--iterations", ef.iterations, "SA iterations per restart");
    s->add_option("--restarts", ef.restarts, "SA restarts");
    s->add_option("--r-b", ef.r_b, "blockade radius in um");
    s->add_option("--site-spacing", ef.site_spacing, "lattice spacing in um");
    s->add_option("--layer-gap", ef.layer_gap, "layer gap in um (default 0.8 r_b)");
    s->add_option("--margin-penalty", ef.margin_penalty, "hinge weight for margin targets");
    s->add_option("--extra-edge-weight", ef.extra_edge_weight, "cost per realised non-edge");
    s->add_option("--site-factor", ef.site_factor, "lattice sites per atom");
    s->add_flag("--init-coords", ef.init_coords, "seed one restart from the graph's own coordinates");
    s->add_option("--seed", seed, "random seed")->required();
    add_threads(s);
  };
  auto* embed = app.add_subcommand("embed-register", "SA placement on a triangular lattice");
  add_io(embed);
  add_embed(embed);
  embed->add_option("--margin-target", ef.margin_target, "minimum non-edge distance over r_b");
  embed->add_option("--register-output", ef.register_output, "also write the bare register file");
  embed->add_option("--profile", ef.profile, "hardware profile JSON");
  add_timings(embed);

  std::string targets;
  auto* sweep = app.add_subcommand("margin-sweep", "recall vs blockade-margin target (CSV)");
  add_io(sweep);
  add_embed(sweep);
  sweep->add_option("--targets", targets, "comma-separated ascending margin targets")->required();

  std::optional<int> n_atoms;
  std::string reg_path, variant = "baseline";
  std::optional<double> omega, duration;
  double pulse_rb = 8.0;
  auto* pulse = app.add_subcommand("pulse-export", "pulse specification as data");
  pulse->add_option("--output", c.output, "output file (default stdout)");
  pulse->add_option("--n-atoms", n_atoms, "register size");
  pulse->add_option("--register", reg_path, "take the size from a register file");
  pulse->add_option("--variant", variant, "baseline, trapezoid, four_knot, cubic_detuning, reduced_omega");
  pulse->add_option("--omega", omega, "override Rabi amplitude (rad/us)");
  pulse->add_option("--duration", duration, "override duration (us)");
  pulse->add_option("--r-b", pulse_rb, "blockade radius recorded with the spec (um)");

  ShotFlags sf;
  auto* shots = app.add_subcommand("analyze-shots", "score bitstrings against a benchmark graph");
  add_io(shots);
  add_solver(shots);
  shots->add_option("--shots", sf.shots, "shots file")->required();
  shots->add_option("--alpha", sf.alpha, "benchmark alpha (default: solve)");
  shots->add_option("--regime", sf.regime, "embedded or exact_udg")->required()->check(
      CLI::IsMember({"embedded", "exact_udg"}));
  shots->add_option("--text-graph", sf.text_graph, "text graph for canonical recovery");
  shots->add_option("--map", sf.map, "JSON array: text vertex of each register atom (default identity)");
  shots->add_option("--recovery-mode", sf.recovery_mode, "backbone_overlap or largest_sub_is");
  shots->add_option("--reference", sf.reference, "JSON array: reference backbone (default exact witness)");

  VerifyRequest vr;
  auto* ver = app.add_subcommand("verify", "re-check stored witnesses, alphas, recalls, margins, densities");
  ver->add_option("--graph", vr.graphs, "graph file(s)");
  ver->add_option("--report", vr.reports, "solve / enumerate / rigidity report(s)");
  ver->add_option("--register", vr.registers, "register file(s)");
  ver->add_option("--embed", vr.embeds, "embed-register output(s)");
  ver->add_option("--profile", vr.profile, "hardware profile JSON");
  ver->add_flag("--strict", vr.strict, "warnings are violations");
  ver->add_flag("--lint", vr.lint, "files must be in canonical form");
  ver->add_option("--output", c.output, "output file (default stdout)");

  std::vector<std::string> inputs;
  std::string json_path;
  auto* report = app.add_subcommand("report", "per-graph table: N, |E|, d, alpha, rho, #opt");
  report->add_option("--input", inputs, "graph files")->required();
  report->add_option("--output", c.output, "CSV output (default stdout)");
  report->add_option("--json", json_path, "per-graph JSON output");
  auto* rep_cap = report->add_option("--cap", cap, "enumeration cap");
  auto* rep_tl = add_solver(report);
  add_threads(report);
  add_timings(report);

  std::vector<const char*> argv{"backbone"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kOk;
  } catch (const CLI::Success&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const Json cfg = load_config();
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "build-graph") {
      from_config(k_opt, knn_k, cfg, "knn", "k");
      from_config(t_opt, knn_t, cfg, "knn", "threshold");
      return cmd_build_graph(c, knn_mode, knn_k, knn_t, raw, out);
    }
    if (name == "solve") {
      from_config(solve_tl, c.time_limit, cfg, "solver", "time_limit");
      return cmd_solve(c, out);
    }
    if (name == "enumerate") {
      from_config(enum_tl, c.time_limit, cfg, "solver", "time_limit");
      from_config(enum_cap, cap, cfg, "solver", "cap");
      return cmd_enumerate(c, cap, out);
    }
    if (name == "rigidity") {
      from_config(rig_tl, c.time_limit, cfg, "solver", "time_limit");
      from_config(rig_cap, cap, cfg, "solver", "cap");
      from_config(rig_pv, per_vertex, cfg, "solver", "per_vertex_limit");
      return cmd_rigidity(c, cap, per_vertex, out);
    }
    if (name == "nullmodel") {
      from_config(null_tl, c.time_limit, cfg, "solver", "time_limit");
      from_config(null_trials, trials, cfg, "nullmodel", "trials");
      return cmd_nullmodel(c, null_model, trials, seed, out);
    }
    if (name == "baselines") return cmd_baselines(c, vectors, size, out);
    if (name == "generate") {
      if (list) {
        emit(catalogue_text(), c.output, out);
        return kOk;
      }
      if (family.empty()) {
        err << "usage error: generate needs --family (or --list)\n";
        return kUsageError;
      }
      try {
        return cmd_generate(c, family, spacing, gen_seed, sub->remaining(), out);
      } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
      }
    }
    if (name == "embed-register" || name == "margin-sweep") {
      if (cfg.contains("embed")) {
        const Json& e = cfg["embed"];
        if (sub->get_option("--preset")->count() == 0) ef.preset = e.value("preset", ef.preset);
        if (sub->get_option("--r-b")->count() == 0) ef.r_b = e.value("r_b", ef.r_b);
        if (sub->get_option("--site-spacing")->count() == 0) ef.site_spacing = e.value("site_spacing", ef.site_spacing);
      }
      if (name == "embed-register") {
        if (ef.profile.empty() && cfg.contains("hardware_profile")) ef.profile = cfg["hardware_profile"];
        return cmd_embed(c, ef, seed, out);
      }
      return cmd_margin_sweep(c, ef, targets, seed, out);
    }
    if (name == "pulse-export") return cmd_pulse(c, n_atoms, reg_path, variant, omega, duration, pulse_rb, out);
    if (name == "analyze-shots") return cmd_analyze(c, sf, out);
    if (name == "verify") {
      if (vr.profile.empty() && cfg.contains("hardware_profile")) vr.profile = cfg["hardware_profile"];
      return cmd_verify(vr, c.output, out, err);
    }
    if (name == "report") {
      from_config(rep_tl, c.time_limit, cfg, "solver", "time_limit");
      from_config(rep_cap, cap, cfg, "solver", "cap");
      return cmd_report(inputs, c, cap, json_path, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ValidityError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace backbone::cli
