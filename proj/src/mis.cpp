#include "backbone/mis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "backbone/parallel.hpp"
#include "backbone/random.hpp"

namespace backbone {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : limited_(seconds > 0),
        end_(limited_ ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(seconds))
                      : Clock::time_point::max()) {}

  // Polls the clock every 256 calls.
  bool expired() {
    if (!limited_) return false;
    if (hit_) return true;
    if ((++ticks_ & 0xFF) == 0 && Clock::now() >= end_) hit_ = true;
    return hit_;
  }
  bool hit() const { return hit_; }

 private:
  bool limited_;
  Clock::time_point end_;
  std::uint32_t ticks_ = 0;
  bool hit_ = false;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Search state shared by the maximisation and enumeration kernels: one
// candidate-set buffer per recursion level plus scratch for clique covers.
class Kernel {
 public:
  explicit Kernel(const Graph& g, double time_limit_s)
      : g_(g),
        n_(g.n()),
        w_(g.words()),
        levels_(static_cast<std::size_t>(n_ + 2) * w_, 0),
        order_(static_cast<std::size_t>(n_ + 2) * std::max(n_, 1)),
        color_(static_cast<std::size_t>(n_ + 2) * std::max(n_, 1)),
        scratch_u_(w_),
        scratch_q_(w_),
        current_(std::max(n_, 1)),
        deadline_(time_limit_s) {}

  std::span<Word> level(int d) { return {levels_.data() + static_cast<std::size_t>(d) * w_, static_cast<std::size_t>(w_)}; }

  void load_root(std::span<const int> allowed) {
    auto p = level(0);
    std::fill(p.begin(), p.end(), 0);
    for (int v : allowed) bits::set(p, v);
  }

  // ---- maximisation (clique in the complement, MCQ style) ----

  // Finds an independent set larger than `lower_bound` inside level(0); stops
  // early once `stop_at` is reached.
  void maximise(int lower_bound, VertexList initial, int stop_at) {
    best_ = lower_bound;
    best_set_ = std::move(initial);
    stop_at_ = stop_at;
    done_ = false;
    expand(0, 0);
  }

  int best() const { return best_; }
  const VertexList& best_set() const { return best_set_; }

  // ---- enumeration ----

  void enumerate(int alpha, int cap, std::vector<VertexList>& out) {
    alpha_ = alpha;
    cap_ = cap;
    sink_ = &out;
    done_ = false;
    enum_rec(0, 0);
  }

  std::int64_t nodes() const { return nodes_; }
  bool timed_out() const { return deadline_.hit(); }

 private:
  // Greedy partition of P into cliques of g. Fills order/color for depth d and
  // returns the vertex count; colors are nondecreasing along the order.
  int cover(int d, std::span<const Word> p) {
    std::copy(p.begin(), p.end(), scratch_u_.begin());
    int* order = order_.data() + static_cast<std::size_t>(d) * n_;
    int* color = color_.data() + static_cast<std::size_t>(d) * n_;
    int m = 0;
    int k = 0;
    while (bits::any(scratch_u_)) {
      ++k;
      std::copy(scratch_u_.begin(), scratch_u_.end(), scratch_q_.begin());
      while (bits::any(scratch_q_)) {
        const int v = bits::first(scratch_q_);
        bits::reset(scratch_u_, v);
        auto row = g_.row(v);
        for (int i = 0; i < w_; ++i) scratch_q_[i] &= row[i];
        order[m] = v;
        color[m] = k;
        ++m;
      }
    }
    return m;
  }

  int cover_count(std::span<const Word> p) {
    std::copy(p.begin(), p.end(), scratch_u_.begin());
    int k = 0;
    while (bits::any(scratch_u_)) {
      ++k;
      std::copy(scratch_u_.begin(), scratch_u_.end(), scratch_q_.begin());
      while (bits::any(scratch_q_)) {
        const int v = bits::first(scratch_q_);
        bits::reset(scratch_u_, v);
        auto row = g_.row(v);
        for (int i = 0; i < w_; ++i) scratch_q_[i] &= row[i];
      }
    }
    return k;
  }

  void expand(int d, int size) {
    ++nodes_;
    auto p = level(d);
    const int m = cover(d, p);
    const int* order = order_.data() + static_cast<std::size_t>(d) * n_;
    const int* color = color_.data() + static_cast<std::size_t>(d) * n_;
    for (int i = m - 1; i >= 0; --i) {
      if (done_ || size + color[i] <= best_) return;
      if (deadline_.expired()) {
        done_ = true;
        return;
      }
      const int v = order[i];
      current_[size] = v;
      auto next = level(d + 1);
      auto row = g_.row(v);
      for (int k = 0; k < w_; ++k) next[k] = p[k] & ~row[k];
      bits::reset(next, v);
      if (!bits::any(next)) {
        if (size + 1 > best_) {
          best_ = size + 1;
          best_set_.assign(current_.begin(), current_.begin() + size + 1);
          std::sort(best_set_.begin(), best_set_.end());
          if (best_ >= stop_at_) done_ = true;
        }
      } else {
        expand(d + 1, size + 1);
      }
      bits::reset(p, v);
    }
  }

  void record(int size, std::span<const Word> rest) {
    VertexList s(current_.begin(), current_.begin() + size);
    bits::for_each(rest, [&](int v) { s.push_back(v); });
    std::sort(s.begin(), s.end());
    sink_->push_back(std::move(s));
    if (static_cast<int>(sink_->size()) >= cap_) done_ = true;
  }

  void enum_rec(int d, int size) {
    if (done_) return;
    ++nodes_;
    if (deadline_.expired()) {
      done_ = true;
      return;
    }
    auto p = level(d);
    if (!bits::any(p)) {
      if (size == alpha_) record(size, p);
      return;
    }
    if (size + cover_count(p) < alpha_) return;

    int pick = -1;
    int pick_deg = -1;
    bits::for_each(p, [&](int v) {
      const int deg = bits::count_and(g_.row(v), p);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    });
    if (pick_deg == 0) {
      if (size + bits::count(p) == alpha_) record(size, p);
      return;
    }

    auto next = level(d + 1);
    auto row = g_.row(pick);
    for (int k = 0; k < w_; ++k) next[k] = p[k] & ~row[k];
    bits::reset(next, pick);
    current_[size] = pick;
    enum_rec(d + 1, size + 1);
    if (done_) return;

    std::copy(p.begin(), p.end(), next.begin());
    bits::reset(next, pick);
    enum_rec(d + 1, size);
  }

  const Graph& g_;
  int n_;
  int w_;
  std::vector<Word> levels_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<Word> scratch_u_;
  std::vector<Word> scratch_q_;
  std::vector<int> current_;
  Deadline deadline_;
  std::int64_t nodes_ = 0;
  bool done_ = false;

  int best_ = 0;
  VertexList best_set_;
  int stop_at_ = 0;

  int alpha_ = 0;
  int cap_ = 0;
  std::vector<VertexList>* sink_ = nullptr;
};

VertexList all_vertices(int n) {
  VertexList v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Greedy deletion restricted to `allowed`, used as the search's starting bound.
VertexList greedy_within(const Graph& g, std::span<const int> allowed) {
  std::vector<Word> alive(g.words(), 0);
  for (int v : allowed) bits::set(alive, v);
  std::vector<int> deg(g.n(), 0);
  for (int v : allowed) deg[v] = bits::count_and(g.row(v), alive);
  while (true) {
    int pick = -1;
    int best = 0;
    bits::for_each(alive, [&](int v) {
      if (deg[v] > best) {
        best = deg[v];
        pick = v;
      }
    });
    if (pick < 0) break;
    bits::reset(alive, pick);
    for (int u : g.neighbors(pick))
      if (bits::test(alive, u)) --deg[u];
  }
  return bits::to_list(alive);
}

}  // namespace

MisResult solve_exact_within(const Graph& g, std::span<const int> allowed, double time_limit_s) {
  const auto t0 = Clock::now();
  const VertexList vs = normalize_set(allowed, g.n());
  MisResult r;
  if (vs.empty()) return r;
  VertexList start = greedy_within(g, vs);
  Kernel k(g, time_limit_s);
  k.load_root(vs);
  const int lb = static_cast<int>(start.size());
  k.maximise(lb, std::move(start), static_cast<int>(vs.size()) + 1);
  r.alpha = k.best();
  r.witness = k.best_set();
  r.stats.nodes = k.nodes();
  r.stats.timed_out = k.timed_out();
  r.stats.wall_seconds = seconds_since(t0);
  return r;
}

MisResult solve_exact(const Graph& g, double time_limit_s) {
  return solve_exact_within(g, all_vertices(g.n()), time_limit_s);
}

OptimaEnumeration enumerate_optima(const Graph& g, int alpha, int cap, double time_limit_s) {
  if (cap < 1) throw InputError("enumerate_optima: cap must be at least 1");
  const auto t0 = Clock::now();
  OptimaEnumeration e;
  e.alpha = alpha;
  e.cap = cap;
  if (g.n() == 0) {
    e.solutions.push_back({});
  } else {
    Kernel k(g, time_limit_s);
    k.load_root(all_vertices(g.n()));
    k.enumerate(alpha, cap, e.solutions);
    e.stats.nodes = k.nodes();
    e.stats.timed_out = k.timed_out();
  }
  e.hit_cap = static_cast<int>(e.solutions.size()) >= cap;
  e.stats.wall_seconds = seconds_since(t0);
  return e;
}

OptimaEnumeration enumerate_optima(const Graph& g, int cap, double time_limit_s) {
  const auto t0 = Clock::now();
  const MisResult r = solve_exact(g, time_limit_s);
  if (!r.exact()) {
    OptimaEnumeration e;
    e.alpha = r.alpha;
    e.cap = cap;
    e.stats = r.stats;
    return e;
  }
  double remaining = 0.0;
  if (time_limit_s > 0) remaining = std::max(1e-3, time_limit_s - seconds_since(t0));
  OptimaEnumeration e = enumerate_optima(g, r.alpha, cap, remaining);
  e.stats.nodes += r.stats.nodes;
  e.stats.wall_seconds = seconds_since(t0);
  return e;
}

VertexList intersect_optima(const OptimaEnumeration& e, int n) {
  if (e.solutions.empty()) return {};
  std::vector<int> hits(n, 0);
  for (const auto& s : e.solutions)
    for (int v : s) ++hits[v];
  VertexList core;
  for (int v = 0; v < n; ++v)
    if (hits[v] == static_cast<int>(e.solutions.size())) core.push_back(v);
  return core;
}

RigidityReport certify_core(const Graph& g, const MisResult& solved, double per_vertex_limit_s, int threads) {
  if (!solved.exact()) throw ValidityError("certify_core: the base solve did not complete");
  if (!is_independent_set(g, solved.witness) || static_cast<int>(solved.witness.size()) != solved.alpha)
    throw ValidityError("certify_core: witness is not an independent set of size alpha");

  RigidityReport rep;
  rep.alpha = solved.alpha;
  rep.witness = solved.witness;
  rep.n_optima = 1;  // the witness; enumeration refines this
  rep.n_optima_exact = false;

  const auto& w = solved.witness;
  const int m = static_cast<int>(w.size());
  // 0: excluded, 1: in core, 2: timed out
  std::vector<int> verdict(m, 0);
  std::vector<std::int64_t> nodes(m, 0);
  parallel_for(m, threads, [&](int i) {
    const int v = w[i];
    VertexList rest;
    rest.reserve(g.n() - 1);
    for (int u = 0; u < g.n(); ++u)
      if (u != v) rest.push_back(u);
    Kernel k(g, per_vertex_limit_s);
    k.load_root(rest);
    // Look for an independent set of size alpha avoiding v.
    k.maximise(solved.alpha - 1, {}, solved.alpha);
    nodes[i] = k.nodes();
    if (k.best() >= solved.alpha)
      verdict[i] = 0;
    else
      verdict[i] = k.timed_out() ? 2 : 1;
  });

  rep.certified = true;
  for (int i = 0; i < m; ++i) {
    if (verdict[i] == 1) rep.core.push_back(w[i]);
    if (verdict[i] == 2) rep.certified = false;
    rep.certify_nodes += nodes[i];
  }
  rep.rho = rho_of(rep.core.size(), rep.alpha);
  return rep;
}

RigidityReport analyze_rigidity(const Graph& g, const RigidityOptions& opt) {
  const MisResult r = solve_exact(g, opt.time_limit_s);
  if (!r.exact()) {
    RigidityReport rep;
    rep.alpha = r.alpha;
    rep.witness = r.witness;
    rep.rho = 0.0;
    rep.certified = false;
    return rep;
  }
  RigidityReport rep = certify_core(g, r, opt.per_vertex_limit_s, opt.threads);
  const OptimaEnumeration e = enumerate_optima(g, r.alpha, opt.cap, opt.time_limit_s);
  rep.n_optima = static_cast<std::int64_t>(e.solutions.size());
  rep.hit_cap = e.hit_cap;
  rep.n_optima_exact = !e.hit_cap && !e.stats.timed_out;
  return rep;
}

VertexList greedy_mis(const Graph& g, GreedyRule rule) {
  const int n = g.n();
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  auto pick_max = [&](int floor) {
    int pick = -1;
    int best = floor;
    for (int v = 0; v < n; ++v)
      if (alive[v] && deg[v] > best) {
        best = deg[v];
        pick = v;
      }
    return pick;
  };
  auto remove = [&](int v) {
    alive[v] = 0;
    for (int u : g.neighbors(v))
      if (alive[u]) --deg[u];
  };

  VertexList out;
  if (rule == GreedyRule::delete_max_degree) {
    for (int v = pick_max(0); v >= 0; v = pick_max(0)) remove(v);
    for (int v = 0; v < n; ++v)
      if (alive[v]) out.push_back(v);
  } else {
    for (int v = pick_max(-1); v >= 0; v = pick_max(-1)) {
      out.push_back(v);
      remove(v);
      for (int u : g.neighbors(v))
        if (alive[u]) remove(u);
    }
    std::sort(out.begin(), out.end());
  }

  // Deleted vertices whose whole neighbourhood was deleted later can still be
  // added; this keeps the result maximal.
  std::vector<char> in(n, 0);
  for (int v : out) in[v] = 1;
  for (int v = 0; v < n; ++v) {
    if (in[v]) continue;
    bool free = true;
    for (int u : g.neighbors(v))
      if (in[u]) {
        free = false;
        break;
      }
    if (free) in[v] = 1;
  }
  out.clear();
  for (int v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

VertexList sa_mis(const Graph& g, const SaMisSchedule& schedule, std::uint64_t seed) {
  const int n = g.n();
  if (n == 0) return {};
  Rng rng = stream_rng(seed, 0);
  const double lambda = schedule.violation_penalty;

  std::vector<char> in(n, 0);
  std::vector<int> nin(n, 0);  // neighbours currently in the set
  int size = 0;
  int conflicts = 0;

  auto add = [&](int v) {
    in[v] = 1;
    ++size;
    conflicts += nin[v];
    for (int u : g.neighbors(v)) ++nin[u];
  };
  auto drop = [&](int v) {
    in[v] = 0;
    --size;
    conflicts -= nin[v];
    for (int u : g.neighbors(v)) --nin[u];
  };
  auto energy = [&] { return -static_cast<double>(size) + lambda * conflicts; };

  struct Move {
    int add = -1;
    int drop = -1;
  };
  auto propose = [&]() -> Move {
    const int v = uniform_index(rng, n);
    if (in[v]) return {-1, v};
    if (nin[v] > 0 && (rng() & 1)) {
      int k = uniform_index(rng, nin[v]);
      for (int u : g.neighbors(v))
        if (in[u] && k-- == 0) return {v, u};
    }
    return {v, -1};
  };
  auto apply = [&](const Move& m) {
    if (m.drop >= 0) drop(m.drop);
    if (m.add >= 0) add(m.add);
  };
  auto undo = [&](const Move& m) {
    if (m.add >= 0) drop(m.add);
    if (m.drop >= 0) add(m.drop);
  };

  // Temperature from uphill deltas on a random half-filled state.
  for (int v = 0; v < n; ++v)
    if (rng() & 1) add(v);
  double uphill = 0.0;
  int n_uphill = 0;
  for (int i = 0; i < 100; ++i) {
    const Move m = propose();
    const double e0 = energy();
    apply(m);
    const double de = energy() - e0;
    undo(m);
    if (de > 0) {
      uphill += de;
      ++n_uphill;
    }
  }
  const double t0 = n_uphill > 0 ? -(uphill / n_uphill) / std::log(schedule.initial_acceptance) : 1.0;
  const int steps = std::max(1, schedule.steps);
  const double cool = std::pow(schedule.final_temperature_ratio, 1.0 / steps);

  std::fill(in.begin(), in.end(), 0);
  std::fill(nin.begin(), nin.end(), 0);
  size = 0;
  conflicts = 0;

  std::vector<char> best(n, 0);
  int best_size = 0;
  double temp = t0;
  for (int step = 0; step < steps; ++step, temp *= cool) {
    const Move m = propose();
    const double e0 = energy();
    apply(m);
    const double de = energy() - e0;
    if (de > 0 && uniform01(rng) >= std::exp(-de / temp)) {
      undo(m);
      continue;
    }
    if (conflicts == 0 && size > best_size) {
      best_size = size;
      best = in;
    }
  }

  // Complete the best feasible state to a maximal independent set.
  std::vector<int> blocked(n, 0);
  for (int v = 0; v < n; ++v)
    if (best[v])
      for (int u : g.neighbors(v)) ++blocked[u];
  VertexList out;
  for (int v = 0; v < n; ++v) {
    if (!best[v] && blocked[v] == 0) {
      best[v] = 1;
      for (int u : g.neighbors(v)) ++blocked[u];
    }
    if (best[v]) out.push_back(v);
  }
  return out;
}

double approximation_ratio(std::span<const int> s, const Graph& g, int alpha) {
  if (!is_independent_set(g, s)) throw ValidityError("approximation_ratio: set is not independent");
  if (alpha < 0) throw InputError("approximation_ratio: negative alpha");
  const VertexList vs = normalize_set(s, g.n());
  if (alpha == 0) return 1.0;
  return static_cast<double>(vs.size()) / alpha;
}

double approximation_ratio(std::span<const int> s, const Graph& g) {
  return approximation_ratio(s, g, solve_exact(g).alpha);
}

}  // namespace backbone
