// Gradient-descent engine: runs x_{i+1} = x_i - (h_i / L) * grad f(x_i) under
// arbitrary step plans on bundled convex objectives, records objective-gap
// traces, and checks the empirical consequences of the theory: per-application
// descent recurrences, fitted convergence-rate exponents, strongly-convex
// contraction factors, and the three one-dimensional non-descent instances
// behind the elementary feasibility bounds.
//
// Everything here runs in machine doubles: traces are empirical evidence, not
// certificates, and stage-0 repetition counts alone reach tens of millions of
// iterations under conservative thresholds.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "silverstep/sequence.hpp"
#include "silverstep/verify.hpp"

namespace silverstep {

using Vector = std::vector<double>;

// ---------------------------------------------------------------------------
// Objectives

class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual double value(const Vector& x) const = 0;
  virtual void gradient(const Vector& x, Vector& out) const = 0;
  // Smoothness constant L of the gradient.
  virtual double smoothness() const = 0;
  virtual double optimum_value() const = 0;
  // Analytic radius bound D of the sublevel set {x : f(x) <= f(x0)} around
  // the minimizer.
  virtual double sublevel_radius(const Vector& x0) const = 0;
  // Strong-convexity (or quadratic-growth) constant, when one exists.
  virtual std::optional<double> strong_convexity() const { return std::nullopt; }
};

namespace detail {
inline void require_dim(const Vector& x, std::size_t n, const char* who) {
  if (x.size() != n) throw std::invalid_argument(std::string(who) + ": wrong dimension");
}
}  // namespace detail

// f(x) = (L/2) x^2 in one dimension.
class Quad1D final : public Objective {
 public:
  explicit Quad1D(double L = 1.0) : L_(L) {
    if (!(L > 0)) throw std::invalid_argument("Quad1D: L must be positive");
  }
  std::string name() const override { return "quad1d"; }
  std::size_t dimension() const override { return 1; }
  double value(const Vector& x) const override {
    detail::require_dim(x, 1, "Quad1D");
    return L_ / 2 * x[0] * x[0];
  }
  void gradient(const Vector& x, Vector& out) const override {
    detail::require_dim(x, 1, "Quad1D");
    out.assign(1, L_ * x[0]);
  }
  double smoothness() const override { return L_; }
  double optimum_value() const override { return 0.0; }
  double sublevel_radius(const Vector& x0) const override {
    detail::require_dim(x0, 1, "Quad1D");
    return std::abs(x0[0]);
  }
  std::optional<double> strong_convexity() const override { return L_; }

 private:
  double L_;
};

// Huber function: x^2/2 inside [-1, 1], |x| - 1/2 outside. L = 1.
class Huber final : public Objective {
 public:
  std::string name() const override { return "huber"; }
  std::size_t dimension() const override { return 1; }
  double value(const Vector& x) const override {
    detail::require_dim(x, 1, "Huber");
    const double a = std::abs(x[0]);
    return a <= 1 ? a * a / 2 : a - 0.5;
  }
  void gradient(const Vector& x, Vector& out) const override {
    detail::require_dim(x, 1, "Huber");
    out.assign(1, std::clamp(x[0], -1.0, 1.0));
  }
  double smoothness() const override { return 1.0; }
  double optimum_value() const override { return 0.0; }
  double sublevel_radius(const Vector& x0) const override {
    const double f0 = value(x0);
    return f0 <= 0.5 ? std::sqrt(2 * f0) : f0 + 0.5;
  }
};

// Quadratic-then-linear splice: x^2/2 + 1/2 for x <= 1, x for x > 1.
// Minimum value 1/2 at the origin; C^1 with L = 1.
class Splice final : public Objective {
 public:
  std::string name() const override { return "splice"; }
  std::size_t dimension() const override { return 1; }
  double value(const Vector& x) const override {
    detail::require_dim(x, 1, "Splice");
    return x[0] <= 1 ? x[0] * x[0] / 2 + 0.5 : x[0];
  }
  void gradient(const Vector& x, Vector& out) const override {
    detail::require_dim(x, 1, "Splice");
    out.assign(1, x[0] <= 1 ? x[0] : 1.0);
  }
  double smoothness() const override { return 1.0; }
  double optimum_value() const override { return 0.5; }
  double sublevel_radius(const Vector& x0) const override {
    const double f0 = value(x0);
    // Left reach sqrt(2 f0 - 1) from the quadratic branch, right reach f0
    // from the linear branch; the latter dominates once f0 > 1.
    return f0 <= 1 ? std::sqrt(std::max(2 * f0 - 1, 0.0)) : f0;
  }
};

// f(x) = (1/2) sum_i d_i x_i^2 with a configurable positive spectrum.
class DiagQuadratic final : public Objective {
 public:
  explicit DiagQuadratic(std::vector<double> spectrum) : d_(std::move(spectrum)) {
    if (d_.empty()) throw std::invalid_argument("DiagQuadratic: empty spectrum");
    for (double v : d_)
      if (!(v > 0)) throw std::invalid_argument("DiagQuadratic: spectrum must be positive");
    L_ = *std::max_element(d_.begin(), d_.end());
    mu_ = *std::min_element(d_.begin(), d_.end());
  }
  std::string name() const override { return "diagquad"; }
  std::size_t dimension() const override { return d_.size(); }
  double value(const Vector& x) const override {
    detail::require_dim(x, d_.size(), "DiagQuadratic");
    double s = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) s += d_[i] * x[i] * x[i];
    return s / 2;
  }
  void gradient(const Vector& x, Vector& out) const override {
    detail::require_dim(x, d_.size(), "DiagQuadratic");
    out.resize(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) out[i] = d_[i] * x[i];
  }
  double smoothness() const override { return L_; }
  double optimum_value() const override { return 0.0; }
  double sublevel_radius(const Vector& x0) const override {
    detail::require_dim(x0, d_.size(), "DiagQuadratic");
    double s = 0;
    for (double v : x0) s += v * v;
    return std::sqrt(s);
  }
  std::optional<double> strong_convexity() const override { return mu_; }
  const std::vector<double>& spectrum() const { return d_; }

 private:
  std::vector<double> d_;
  double L_ = 0, mu_ = 0;
};

// Smooth non-quadratic test: f(x) = tau * log(cosh(x / tau)), the softened
// absolute value. L = 1/tau, minimum exactly 0 at the origin.
class LogCosh final : public Objective {
 public:
  explicit LogCosh(double tau = 1.0) : tau_(tau) {
    if (!(tau > 0)) throw std::invalid_argument("LogCosh: tau must be positive");
  }
  std::string name() const override { return "logcosh"; }
  std::size_t dimension() const override { return 1; }
  double value(const Vector& x) const override {
    detail::require_dim(x, 1, "LogCosh");
    const double u = std::abs(x[0]) / tau_;
    if (u > 20) return tau_ * (u - std::log(2.0) + std::log1p(std::exp(-2 * u)));
    return tau_ * std::log(std::cosh(u));
  }
  void gradient(const Vector& x, Vector& out) const override {
    detail::require_dim(x, 1, "LogCosh");
    out.assign(1, std::tanh(x[0] / tau_));
  }
  double smoothness() const override { return 1.0 / tau_; }
  double optimum_value() const override { return 0.0; }
  double sublevel_radius(const Vector& x0) const override {
    detail::require_dim(x0, 1, "LogCosh");
    return std::abs(x0[0]);
  }

 private:
  double tau_;
};

// Geometrically spaced spectrum in [lo, hi], used by the bundled quadratics.
inline std::vector<double> log_spaced_spectrum(std::size_t n, double lo, double hi) {
  if (n == 0 || !(lo > 0) || !(hi >= lo))
    throw std::invalid_argument("log_spaced_spectrum: need n >= 1 and 0 < lo <= hi");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = hi;
    return out;
  }
  const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
  out.back() = hi;
  return out;
}

inline std::unique_ptr<Objective> make_objective(const std::string& name, std::size_t dim) {
  if (name == "quad1d") return std::make_unique<Quad1D>();
  if (name == "huber") return std::make_unique<Huber>();
  if (name == "splice") return std::make_unique<Splice>();
  if (name == "logcosh") return std::make_unique<LogCosh>();
  if (name == "diagquad")
    return std::make_unique<DiagQuadratic>(
        log_spaced_spectrum(std::max<std::size_t>(dim, 1), 1e-3, 1.0));
  throw std::invalid_argument("unknown objective: " + name);
}

// Max relative gradient error over random probes, via central finite
// differences. Bundled objectives stay below 1e-6 at step 1e-5.
inline double gradient_check(const Objective& f, int probes = 16, std::uint64_t seed = 17) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  const double step = 1e-5;
  Vector x(f.dimension()), g;
  double worst = 0;
  for (int p = 0; p < probes; ++p) {
    for (double& xi : x) xi = box(rng);
    f.gradient(x, g);
    for (std::size_t i = 0; i < x.size(); ++i) {
      Vector xp = x, xm = x;
      xp[i] += step;
      xm[i] -= step;
      const double fd = (f.value(xp) - f.value(xm)) / (2 * step);
      worst = std::max(worst, std::abs(fd - g[i]) / (1 + std::abs(g[i])));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Step plans and traces

struct StepPlanItem {
  double value = 0;          // step h_i (already includes any averaging factor)
  int stage_k = 0;
  bool pattern_end = false;  // last step of a pattern application
  bool stage_end = false;    // last step of a schedule stage
};

using StepPlan = std::vector<StepPlanItem>;

// One pattern application of the given raw steps.
inline StepPlan single_pattern_plan(const std::vector<double>& steps) {
  if (steps.empty()) throw std::invalid_argument("single_pattern_plan: empty pattern");
  StepPlan plan(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) plan[i].value = steps[i];
  plan.back().pattern_end = true;
  plan.back().stage_end = true;
  return plan;
}

// Constant-step plan with caller-chosen checkpoint indices marked as stage
// ends (used for rate fits of unstructured schedules).
inline StepPlan uniform_plan(double h, std::size_t budget,
                             const std::vector<std::size_t>& checkpoints = {}) {
  if (budget == 0) throw std::invalid_argument("uniform_plan: empty budget");
  StepPlan plan(budget);
  for (auto& item : plan) item.value = h;
  for (std::size_t c : checkpoints) {
    if (c == 0 || c > budget) throw std::invalid_argument("uniform_plan: checkpoint out of range");
    plan[c - 1].pattern_end = true;
    plan[c - 1].stage_end = true;
  }
  plan.back().pattern_end = true;
  return plan;
}

// Materializes the first `budget` steps of a staged schedule into doubles.
template <class Real>
StepPlan make_plan(const Schedule<Real>& sched, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("make_plan: empty budget");
  StepPlan plan;
  plan.reserve(static_cast<std::size_t>(budget));
  auto stream = sched.stream();
  for (std::uint64_t i = 0; i < budget && !stream.done(); ++i) {
    const auto ref = stream.next();
    StepPlanItem item;
    item.value = static_cast<double>(ref.value);
    item.stage_k = ref.stage_k;
    item.pattern_end = ref.pattern_end;
    plan.push_back(item);
  }
  // Mark stage ends: a stage change between consecutive items, or a final
  // item that lands exactly on its stage's extent (a truncated final stage
  // is not a stage boundary).
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (!plan[i].pattern_end) continue;
    if (i + 1 < plan.size()) {
      plan[i].stage_end = plan[i + 1].stage_k != plan[i].stage_k;
    } else {
      const auto& st = sched.stages.at(static_cast<std::size_t>(plan[i].stage_k));
      const std::uint64_t extent =
          st.start + static_cast<std::uint64_t>(st.pattern.length()) * st.reps;
      plan[i].stage_end = plan.size() == extent;
    }
  }
  return plan;
}

struct DivergenceSignal : std::runtime_error {
  explicit DivergenceSignal(std::uint64_t at)
      : std::runtime_error("gradient descent diverged (non-finite value) at iteration " +
                           std::to_string(at)),
        index(at) {}
  std::uint64_t index = 0;
};

// Objective-gap trace. `gaps` holds the recorded points; `iters` gives each
// point's global iteration index (every iteration when record_all, otherwise
// iteration 0 and pattern boundaries only). Boundary vectors index into the
// recorded arrays.
struct GdTrace {
  std::vector<double> gaps;
  std::vector<std::uint64_t> iters;
  std::vector<double> min_gap_prefix;
  std::vector<std::size_t> pattern_boundaries;  // positions in gaps/iters
  std::vector<std::size_t> stage_boundaries;    // positions in gaps/iters
  std::vector<int> stage_of_boundary;           // stage k of each completed stage
  std::vector<double> steps_used;
  Vector last_iterate;
  double last_gap = 0;
  double best_gap = 0;
};

struct TraceRow {
  std::uint64_t iter = 0;
  double gap = 0;
  double min_gap = 0;
  int stage_k = 0;
  bool pattern_boundary = false;
};

using TraceSink = std::function<void(const TraceRow&)>;

struct RunOptions {
  bool record_all = true;   // keep every gap (and the step echo) in memory
  TraceSink sink = nullptr; // streamed per-iteration rows, if set
};

inline GdTrace run(const Objective& f, Vector x, const StepPlan& plan,
                   const RunOptions& opt = {}) {
  if (plan.empty()) throw std::invalid_argument("run: empty step plan");
  detail::require_dim(x, f.dimension(), "run");
  const double L = f.smoothness();
  const double fstar = f.optimum_value();

  GdTrace trace;
  double min_gap = std::numeric_limits<double>::infinity();
  const auto record = [&](std::uint64_t iter, double gap) {
    trace.gaps.push_back(gap);
    trace.iters.push_back(iter);
    trace.min_gap_prefix.push_back(min_gap);
  };

  Vector g;
  double gap = f.value(x) - fstar;
  if (!std::isfinite(gap)) throw DivergenceSignal(0);
  min_gap = gap;
  record(0, gap);
  if (opt.sink) opt.sink({0, gap, min_gap, plan.front().stage_k, false});

  for (std::size_t i = 0; i < plan.size(); ++i) {
    const StepPlanItem& item = plan[i];
    f.gradient(x, g);
    const double scale = item.value / L;
    for (std::size_t d = 0; d < x.size(); ++d) x[d] -= scale * g[d];
    gap = f.value(x) - fstar;
    const std::uint64_t iter = static_cast<std::uint64_t>(i) + 1;
    if (!std::isfinite(gap)) throw DivergenceSignal(iter);
    min_gap = std::min(min_gap, gap);
    if (opt.record_all) {
      record(iter, gap);
      trace.steps_used.push_back(item.value);
    } else if (item.pattern_end) {
      record(iter, gap);
    }
    if (item.pattern_end) {
      trace.pattern_boundaries.push_back(trace.gaps.size() - 1);
      if (item.stage_end) {
        trace.stage_boundaries.push_back(trace.gaps.size() - 1);
        trace.stage_of_boundary.push_back(item.stage_k);
      }
    }
    if (opt.sink) opt.sink({iter, gap, min_gap, item.stage_k, item.pattern_end});
  }
  trace.last_iterate = std::move(x);
  trace.last_gap = trace.gaps.back();
  trace.best_gap = min_gap;
  return trace;
}

// ---------------------------------------------------------------------------
// Descent recurrence

struct ApplicationSpec {
  double effective_sum = 0;  // sum of the steps actually taken in the application
  double delta = 0;          // gap threshold active during the application
};

// Per-application windows for the first `applications` completed pattern
// applications of a staged schedule.
template <class Real>
std::vector<ApplicationSpec> application_specs(const Schedule<Real>& sched,
                                               std::size_t applications) {
  std::vector<ApplicationSpec> specs;
  specs.reserve(applications);
  const Real scale = Real(1) - sched.eta;
  for (const auto& st : sched.stages) {
    const ApplicationSpec spec{static_cast<double>(scale * st.pattern.sum),
                               static_cast<double>(st.delta_entry)};
    for (std::uint64_t r = 0; r < st.reps && specs.size() < applications; ++r)
      specs.push_back(spec);
    if (specs.size() == applications) break;
  }
  if (specs.size() != applications)
    throw std::invalid_argument("application_specs: schedule has fewer applications");
  return specs;
}

struct DescentCheck {
  std::size_t application = 0;
  std::uint64_t iter_start = 0, iter_end = 0;
  double gap_start = 0, gap_end = 0;
  double required_bound = 0;   // gap_start - (sum / (L D^2)) * gap_start^2
  bool precondition = false;   // gap_start <= L D^2 delta
  bool holds = false;          // only meaningful when precondition is true
};

struct RecurrenceReport {
  std::vector<DescentCheck> applications;
  std::size_t checked = 0;     // applications with the precondition satisfied
  std::size_t violations = 0;
  bool ok() const { return violations == 0; }
};

// Checks gap' <= gap - (sum/(L D^2)) gap^2 across every completed pattern
// application whose entry gap is inside the certified region gap <= L D^2
// delta. Reports violations; never throws on them.
inline RecurrenceReport verify_descent_recurrence(const GdTrace& trace,
                                                  const std::vector<ApplicationSpec>& specs,
                                                  double L, double D) {
  if (specs.size() != trace.pattern_boundaries.size())
    throw std::invalid_argument("verify_descent_recurrence: one spec per completed application");
  if (!(L > 0) || !(D > 0))
    throw std::invalid_argument("verify_descent_recurrence: L and D must be positive");
  RecurrenceReport rep;
  const double LD2 = L * D * D;
  // Absolute slack for the comparison: the recorded gaps are doubles and an
  // application can legitimately land exactly on its bound.
  const double slack = 16 * std::numeric_limits<double>::epsilon();
  std::size_t start = 0;
  for (std::size_t a = 0; a < specs.size(); ++a) {
    const std::size_t end = trace.pattern_boundaries[a];
    DescentCheck chk;
    chk.application = a;
    chk.iter_start = trace.iters[start];
    chk.iter_end = trace.iters[end];
    chk.gap_start = trace.gaps[start];
    chk.gap_end = trace.gaps[end];
    chk.required_bound = chk.gap_start - specs[a].effective_sum / LD2 * chk.gap_start * chk.gap_start;
    chk.precondition = chk.gap_start <= LD2 * specs[a].delta * (1 + slack);
    if (chk.precondition) {
      ++rep.checked;
      chk.holds = chk.gap_end <= chk.required_bound + slack * (1 + chk.gap_start);
      if (!chk.holds) ++rep.violations;
    }
    rep.applications.push_back(chk);
    start = end;
  }
  return rep;
}

// Closed-form consequence of the recurrence: within a run of applications of
// constant effective sum, gap_s <= 1 / (C s + 1/gap_0) with C = sum/(L D^2).
inline bool recurrence_solution_ok(const std::vector<double>& app_gaps, double C,
                                   double rel_slack = 1e-9) {
  if (app_gaps.empty() || !(C > 0))
    throw std::invalid_argument("recurrence_solution_ok: need gaps and C > 0");
  const double g0 = app_gaps.front();
  if (!(g0 > 0)) return true;  // already converged
  for (std::size_t s = 0; s < app_gaps.size(); ++s) {
    const double bound = 1.0 / (C * static_cast<double>(s) + 1.0 / g0);
    if (app_gaps[s] > bound * (1 + rel_slack)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rate fit

struct RateFit {
  double slope = 0;
  double log_coefficient = 0;  // intercept of the log-log fit
  std::size_t points = 0;
};

// Least-squares fit of log(min gap) against log(iterations) at completed
// stage boundaries. Needs at least three usable boundary points.
inline RateFit rate_fit(const GdTrace& trace) {
  std::vector<double> xs, ys;
  for (std::size_t pos : trace.stage_boundaries) {
    const double T = static_cast<double>(trace.iters[pos]);
    const double g = trace.min_gap_prefix[pos];
    if (T <= 0 || g <= 0) continue;
    xs.push_back(std::log(T));
    ys.push_back(std::log(g));
  }
  if (xs.size() < 3)
    throw std::invalid_argument("rate_fit: need at least three completed stage boundaries");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("rate_fit: degenerate abscissae");
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.log_coefficient = (sy - fit.slope * sx) / n;
  fit.points = xs.size();
  return fit;
}

// ---------------------------------------------------------------------------
// Strongly convex regime

struct ContractionReport {
  double kappa = 0, mu = 0, L = 0;
  int k_selected = 0;
  double delta_k = 0;          // conservative threshold of the selected stage
  double per_app_bound = 0;    // 1 - min(delta_k, mu/(2L)) * effective sum
  double per_app_worst = 0;    // largest observed per-application gap ratio
  double amortized = 0;        // geometric mean per-iteration gap ratio
  double amortized_bound = 0;  // 1 - 0.204652 * kappa^{-0.94662}
  std::uint64_t applications = 0;
  std::uint64_t iterations = 0;
  bool per_app_ok = false;
  bool amortized_ok = false;
};

// Picks the deepest stage whose conservative threshold still dominates
// 1/(2 kappa), repeats its halved pattern, and checks both the
// per-application contraction factor and the amortized per-iteration rate.
inline ContractionReport strongly_convex_run(const Objective& f, const Vector& x0, double kappa,
                                             std::uint64_t budget) {
  const std::optional<double> mu = f.strong_convexity();
  if (!mu || !(*mu > 0))
    throw std::invalid_argument("strongly_convex_run: objective must be strongly convex");
  if (!(kappa >= 1)) throw std::invalid_argument("strongly_convex_run: kappa must be >= 1");
  if (budget == 0) throw std::invalid_argument("strongly_convex_run: empty budget");

  const Sequences<double> seq;
  const double threshold = 1.0 / (2 * kappa);
  int k = 0;
  while (seq.delta_conservative(k + 1) >= threshold) ++k;

  ContractionReport rep;
  rep.kappa = kappa;
  rep.mu = *mu;
  rep.L = f.smoothness();
  rep.k_selected = k;
  rep.delta_k = seq.delta_conservative(k);

  const StepPattern<double> pattern = seq.building_block(k);
  const double eff_sum = pattern.sum / 2;
  rep.per_app_bound = 1 - std::min(rep.delta_k, rep.mu / (2 * rep.L)) * eff_sum;

  const std::size_t t = static_cast<std::size_t>(pattern.length());
  const std::uint64_t apps = std::max<std::uint64_t>(budget / t, 1);
  StepPlan plan;
  plan.reserve(static_cast<std::size_t>(apps) * t);
  for (std::uint64_t a = 0; a < apps; ++a)
    for (std::size_t i = 0; i < t; ++i) {
      StepPlanItem item;
      item.value = pattern.steps[i] / 2;
      item.pattern_end = i + 1 == t;
      item.stage_end = item.pattern_end && a + 1 == apps;
      plan.push_back(item);
    }

  RunOptions opt;
  opt.record_all = false;
  const GdTrace trace = run(f, x0, plan, opt);

  double worst = 0;
  std::size_t start = 0;
  std::uint64_t completed = 0;
  for (std::size_t pos : trace.pattern_boundaries) {
    const double g0 = trace.gaps[start], g1 = trace.gaps[pos];
    if (g0 <= 1e-280) break;  // converged to the floor; ratios are noise
    worst = std::max(worst, g1 / g0);
    ++completed;
    start = pos;
  }
  rep.applications = completed;
  rep.iterations = completed * t;
  rep.per_app_worst = worst;
  rep.per_app_ok = completed > 0 && worst <= rep.per_app_bound + 1e-12;

  const double g_first = trace.gaps.front();
  const double g_last = trace.gaps[trace.pattern_boundaries.empty()
                                       ? trace.gaps.size() - 1
                                       : trace.pattern_boundaries[completed == 0 ? 0 : completed - 1]];
  rep.amortized = completed > 0 && g_first > 0 && g_last > 0
                      ? std::exp(std::log(g_last / g_first) / static_cast<double>(rep.iterations))
                      : 0;
  rep.amortized_bound = 1 - 0.204652 * std::pow(kappa, -0.94662);
  rep.amortized_ok = rep.amortized > 0 && rep.amortized <= rep.amortized_bound + 1e-12;
  return rep;
}

// ---------------------------------------------------------------------------
// Adversary suite

struct AdversaryInstance {
  std::string rule;          // "product", "sum", or "pair"
  std::int64_t index = 0;    // extremal index the instance targets
  double x0 = 0;
  double gap_start = 0;
  double gap_end = 0;
  bool descended = false;    // strict gap decrease by pattern end
  GdTrace trace;
};

struct AdversaryReport {
  FeasibilityBounds<double> bounds;
  AdversaryInstance product;
  AdversaryInstance sum;
  AdversaryInstance pair;

  bool all_descended() const {
    return product.descended && sum.descended && pair.descended;
  }
};

namespace detail {
inline AdversaryInstance run_adversary(const Objective& f, const char* rule, std::int64_t index,
                                       double x0, const std::vector<double>& steps) {
  AdversaryInstance inst;
  inst.rule = rule;
  inst.index = index;
  inst.x0 = x0;
  inst.trace = run(f, Vector{x0}, single_pattern_plan(steps));
  inst.gap_start = inst.trace.gaps.front();
  inst.gap_end = inst.trace.last_gap;
  inst.descended = inst.gap_end < inst.gap_start;
  return inst;
}
}  // namespace detail

// Runs the three one-dimensional instances that witness the elementary
// feasibility bounds: the pure quadratic from 1 (product of 1 - h_i), the
// Huber function entered from the far linear branch (sum rule), and the
// quadratic/linear splice around the cyclically adjacent pair with the worst
// margin (the pattern is rotated so that pair leads; the bound is cyclic).
inline AdversaryReport adversary_suite(const std::vector<double>& steps) {
  AdversaryReport rep;
  rep.bounds = pattern_feasibility_bounds<double>(steps);
  const std::size_t t = steps.size();

  rep.product = detail::run_adversary(Quad1D(), "product", 0, 1.0, steps);

  const std::int64_t si = rep.bounds.sum_argmin;
  double prefix = 0;
  for (std::int64_t j = 0; j < si; ++j) prefix += steps[static_cast<std::size_t>(j)];
  rep.sum = detail::run_adversary(Huber(), "sum", si, -prefix - 1.0, steps);

  const std::int64_t pi = rep.bounds.pair_argmin;
  std::vector<double> rotated(t);
  for (std::size_t j = 0; j < t; ++j)
    rotated[j] = steps[(static_cast<std::size_t>(pi) + j) % t];
  rep.pair = detail::run_adversary(Splice(), "pair", pi, 1.0, rotated);

  return rep;
}

}  // namespace silverstep
