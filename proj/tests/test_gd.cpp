// Gradient-descent engine: objectives and their gradients, step plans and
// traces, the per-application descent recurrence, rate fits, the strongly
// convex contraction harness, and the adversarial witnesses for the
// descent-feasibility bounds.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "silverstep/gd.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"

using silverstep::Vector;

namespace {

silverstep::Schedule<double> small_override_schedule() {
  silverstep::Sequences<double> seq;
  const std::vector<double> overrides = {0.5, 0.5, 0.25, 0.125};
  return silverstep::build_schedule(seq, 0.5, 2, std::optional{overrides});
}

}  // namespace

TEST_CASE("analytic gradients agree with central differences") {
  for (const char* name : {"quad1d", "huber", "splice", "logcosh", "diagquad"}) {
    CAPTURE(name);
    const auto f = silverstep::make_objective(name, 6);
    CHECK(silverstep::gradient_check(*f) <= 1e-6);
  }
}

TEST_CASE("objective metadata is consistent") {
  const auto spectrum = silverstep::log_spaced_spectrum(8, 1e-3, 1.0);
  REQUIRE(spectrum.size() == 8);
  CHECK(spectrum.front() == doctest::Approx(1e-3));
  CHECK(spectrum.back() == 1.0);
  for (std::size_t i = 0; i + 1 < spectrum.size(); ++i) CHECK(spectrum[i] < spectrum[i + 1]);

  const silverstep::DiagQuadratic dq(spectrum);
  CHECK(dq.smoothness() == 1.0);
  REQUIRE(dq.strong_convexity().has_value());
  CHECK(*dq.strong_convexity() == doctest::Approx(1e-3));

  CHECK(silverstep::Splice().optimum_value() == 0.5);
  CHECK(!silverstep::Huber().strong_convexity().has_value());
  CHECK_THROWS_AS(silverstep::make_objective("unknown", 1), std::invalid_argument);
  CHECK_THROWS_AS(silverstep::log_spaced_spectrum(0, 1e-3, 1.0), std::invalid_argument);
}

TEST_CASE("quadratic iterates telescope the product of shifted steps exactly") {
  const silverstep::Quad1D f;
  const std::vector<double> steps = {1.5, 5.0, 1.5};
  const auto trace = silverstep::run(f, Vector{1.0}, silverstep::single_pattern_plan(steps));
  REQUIRE(trace.gaps.size() == 4);
  CHECK(trace.last_iterate[0] == -1.0);  // (1 - 1.5)(1 - 5)(1 - 1.5) exactly
  CHECK(trace.gaps.front() == 0.5);
  CHECK(trace.last_gap == 0.5);
  CHECK(trace.best_gap == doctest::Approx(0.125));  // after the first step, x = -1/2

  // the identity holds for arbitrary positive step lists
  const std::vector<double> other = {0.3, 1.7, 2.2, 0.9};
  const auto tr2 = silverstep::run(f, Vector{1.0}, silverstep::single_pattern_plan(other));
  double prod = 1;
  for (double h : other) prod *= 1 - h;
  CHECK(tr2.last_iterate[0] == doctest::Approx(prod).epsilon(1e-12));
}

TEST_CASE("unit step on the unit quadratic converges in one iteration") {
  const silverstep::Quad1D f;
  const auto trace = silverstep::run(f, Vector{1.0}, silverstep::single_pattern_plan({1.0}));
  CHECK(trace.last_gap == 0.0);
  CHECK(trace.last_iterate[0] == 0.0);
}

TEST_CASE("divergent plans raise a signal with the failing iteration") {
  const silverstep::Quad1D f;
  const auto plan = silverstep::uniform_plan(3.0, 1200);
  CHECK_THROWS_AS(silverstep::run(f, Vector{1.0}, plan), silverstep::DivergenceSignal);
  try {
    silverstep::run(f, Vector{1.0}, plan);
  } catch (const silverstep::DivergenceSignal& sig) {
    // |x_n| = 2^n exactly, so the gap 4^n/2 first overflows to infinity at
    // n = 513 (4^513/2 = 2^1025 > DBL_MAX)
    CHECK(sig.index == 513);
  }
}

TEST_CASE("trace recording modes agree on boundaries and sink sees every iteration") {
  const silverstep::Quad1D f;
  auto plan = silverstep::uniform_plan(0.5, 10, {5, 10});

  std::size_t sink_rows = 0;
  silverstep::RunOptions opt;
  opt.record_all = false;
  opt.sink = [&sink_rows](const silverstep::TraceRow&) { ++sink_rows; };
  const auto sparse = silverstep::run(f, Vector{1.0}, plan, opt);
  CHECK(sink_rows == 11);  // iteration 0 plus ten steps
  REQUIRE(sparse.gaps.size() == 3);
  CHECK(sparse.iters == std::vector<std::uint64_t>{0, 5, 10});
  REQUIRE(sparse.pattern_boundaries.size() == 2);
  CHECK(sparse.stage_boundaries.size() == 2);

  const auto dense = silverstep::run(f, Vector{1.0}, plan);
  REQUIRE(dense.gaps.size() == 11);
  CHECK(dense.steps_used.size() == 10);
  REQUIRE(dense.pattern_boundaries.size() == 2);
  // both modes record the same gap at each boundary
  for (std::size_t b = 0; b < 2; ++b) {
    CHECK(dense.gaps[dense.pattern_boundaries[b]] ==
          doctest::Approx(sparse.gaps[sparse.pattern_boundaries[b]]));
    CHECK(dense.iters[dense.pattern_boundaries[b]] == sparse.iters[sparse.pattern_boundaries[b]]);
  }
  CHECK(dense.min_gap_prefix.back() == doctest::Approx(dense.best_gap));
}

TEST_CASE("materialized plans mark pattern and stage boundaries") {
  const auto sched = small_override_schedule();
  REQUIRE(sched.total_steps() == 12);
  const auto plan = silverstep::make_plan(sched, 12);
  REQUIRE(plan.size() == 12);
  std::size_t pattern_ends = 0, stage_ends = 0;
  for (const auto& item : plan) {
    pattern_ends += item.pattern_end ? 1 : 0;
    stage_ends += item.stage_end ? 1 : 0;
  }
  CHECK(pattern_ends == 4);  // two singleton applications, one level-1, one level-2
  CHECK(stage_ends == 3);
  CHECK(plan[0].value == 1.0);
  CHECK(plan[2].value == 0.75);
  CHECK(plan[3].value == 2.5);

  // truncating drops the final stage boundary but keeps completed ones
  const auto partial = silverstep::make_plan(sched, 10);
  REQUIRE(partial.size() == 10);
  std::size_t partial_stage_ends = 0;
  for (const auto& item : partial) partial_stage_ends += item.stage_end ? 1 : 0;
  CHECK(partial_stage_ends == 2);
  CHECK_THROWS_AS(silverstep::make_plan(sched, 0), std::invalid_argument);
}

TEST_CASE("application windows carry the scaled sums and entry thresholds") {
  const auto sched = small_override_schedule();
  const auto specs = silverstep::application_specs(sched, 4);
  REQUIRE(specs.size() == 4);
  CHECK(specs[0].effective_sum == doctest::Approx(1.0));
  CHECK(specs[0].delta == 0.5);
  CHECK(specs[1].effective_sum == doctest::Approx(1.0));
  CHECK(specs[2].effective_sum == doctest::Approx(4.0));
  CHECK(specs[2].delta == 0.5);
  CHECK(specs[3].effective_sum == doctest::Approx(0.5 * sched.stages[2].pattern.sum));
  CHECK(specs[3].delta == 0.25);
  CHECK_THROWS_AS(silverstep::application_specs(sched, 5), std::invalid_argument);
}

TEST_CASE("descent recurrence holds across stages within the certified region") {
  const auto sched = small_override_schedule();
  const auto plan = silverstep::make_plan(sched, sched.total_steps());
  const auto spectrum = silverstep::log_spaced_spectrum(8, 0.1, 1.0);
  const silverstep::DiagQuadratic f(spectrum);
  const Vector x0(8, 1.0);
  const double L = f.smoothness();
  const double D = f.sublevel_radius(x0);

  const auto trace = silverstep::run(f, x0, plan);
  const auto specs = silverstep::application_specs(sched, trace.pattern_boundaries.size());
  const auto rep = silverstep::verify_descent_recurrence(trace, specs, L, D);
  CHECK(rep.ok());
  CHECK(rep.checked == 4);
  CHECK(rep.violations == 0);

  CHECK_THROWS_AS(silverstep::verify_descent_recurrence(trace, {}, L, D), std::invalid_argument);
  CHECK_THROWS_AS(silverstep::verify_descent_recurrence(trace, specs, 0.0, D),
                  std::invalid_argument);
}

TEST_CASE("repeated unit applications obey the closed-form gap decay") {
  const auto spectrum = silverstep::log_spaced_spectrum(8, 0.1, 1.0);
  const silverstep::DiagQuadratic f(spectrum);
  const Vector x0(8, 1.0);
  const double LD2 = f.smoothness() * 8.0;  // |x0|^2 = 8

  silverstep::StepPlan plan(60);
  for (auto& item : plan) {
    item.value = 1.0;  // the halved singleton pattern
    item.pattern_end = true;
  }
  const auto trace = silverstep::run(f, x0, plan);
  std::vector<double> app_gaps = {trace.gaps.front()};
  for (std::size_t pos : trace.pattern_boundaries) app_gaps.push_back(trace.gaps[pos]);
  CHECK(silverstep::recurrence_solution_ok(app_gaps, 1.0 / LD2));
  CHECK_THROWS_AS(silverstep::recurrence_solution_ok({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(silverstep::recurrence_solution_ok(app_gaps, 0.0), std::invalid_argument);
}

TEST_CASE("rate fit recovers an exact power law from boundary samples") {
  silverstep::GdTrace tr;
  for (std::uint64_t T : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    tr.iters.push_back(T);
    const double g = 10.0 * std::pow(static_cast<double>(T), -1.5);
    tr.gaps.push_back(g);
    tr.min_gap_prefix.push_back(g);
    tr.stage_boundaries.push_back(tr.gaps.size() - 1);
  }
  const auto fit = silverstep::rate_fit(tr);
  CHECK(fit.points == 4);
  CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(fit.log_coefficient == doctest::Approx(std::log(10.0)).epsilon(1e-12));

  silverstep::GdTrace short_tr;
  short_tr.iters = {10, 100};
  short_tr.gaps = {1.0, 0.1};
  short_tr.min_gap_prefix = {1.0, 0.1};
  short_tr.stage_boundaries = {0, 1};
  CHECK_THROWS_AS(silverstep::rate_fit(short_tr), std::invalid_argument);
}

TEST_CASE("constant unit steps on a dense spectrum decay roughly like one over T") {
  // the spectrum floor sits far below 1/budget so every checkpoint lies on
  // the 1/T envelope rather than in the terminal exponential collapse
  const auto spectrum = silverstep::log_spaced_spectrum(64, 1e-6, 1.0);
  const silverstep::DiagQuadratic f(spectrum);
  const Vector x0(64, 1.0);
  const auto plan = silverstep::uniform_plan(1.0, 4096, {16, 64, 256, 1024, 4096});
  silverstep::RunOptions opt;
  opt.record_all = false;
  const auto trace = silverstep::run(f, x0, plan, opt);
  const auto fit = silverstep::rate_fit(trace);
  CHECK(fit.points == 5);
  CHECK(fit.slope < -0.7);
  CHECK(fit.slope > -1.4);
}

TEST_CASE("strongly convex harness selects the stage from the condition number") {
  const auto spectrum = silverstep::log_spaced_spectrum(16, 0.01, 1.0);
  const silverstep::DiagQuadratic f(spectrum);
  const Vector x0(16, 1.0);
  const auto rep = silverstep::strongly_convex_run(f, x0, 100.0, 400);
  CHECK(rep.k_selected == 0);
  CHECK(rep.applications == 400);
  CHECK(rep.per_app_ok);
  CHECK(rep.amortized_ok);
  CHECK(rep.per_app_worst <= rep.per_app_bound + 1e-12);
  CHECK(rep.amortized <= rep.amortized_bound + 1e-12);

  const auto tight = silverstep::log_spaced_spectrum(4, 1e-8, 1.0);
  const silverstep::DiagQuadratic g(tight);
  const auto rep8 = silverstep::strongly_convex_run(g, Vector(4, 1.0), 1e8, 300);
  CHECK(rep8.k_selected == 1);
  CHECK(rep8.per_app_ok);
  CHECK(rep8.amortized_ok);

  CHECK_THROWS_AS(silverstep::strongly_convex_run(silverstep::Huber(), Vector{1.0}, 10.0, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(silverstep::strongly_convex_run(f, x0, 0.5, 10), std::invalid_argument);
}

TEST_CASE("adversaries witness every violated feasibility bound") {
  // the unscaled level-1 pattern sits on the product and sum boundaries:
  // the quadratic and Huber witnesses fail to descend, the pair witness does
  const auto boundary = silverstep::adversary_suite({1.5, 5.0, 1.5});
  CHECK(boundary.bounds.product_boundary);
  CHECK(!boundary.bounds.sum_ok);
  CHECK(boundary.bounds.pair_ok);
  CHECK(!boundary.product.descended);
  CHECK(boundary.product.gap_end == boundary.product.gap_start);
  CHECK(boundary.product.trace.last_iterate[0] == -1.0);
  CHECK(!boundary.sum.descended);
  CHECK(boundary.sum.x0 == doctest::Approx(-2.5));
  CHECK(boundary.pair.descended);
  CHECK(!boundary.all_descended());

  // shrinking by 10% moves strictly inside every bound and all three descend
  const auto inside = silverstep::adversary_suite({1.35, 4.5, 1.35});
  CHECK(inside.bounds.all_strict());
  CHECK(inside.all_descended());

  // a single step of 3 violates all three families and no witness descends
  const auto single = silverstep::adversary_suite({3.0});
  CHECK(!single.bounds.product_ok);
  CHECK(!single.bounds.sum_ok);
  CHECK(!single.bounds.pair_ok);
  CHECK(!single.product.descended);
  CHECK(!single.sum.descended);
  CHECK(!single.pair.descended);
}
