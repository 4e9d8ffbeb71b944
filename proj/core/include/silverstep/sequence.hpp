// Scalar recursions (beta, alpha, mu), the fractal pi vectors, the palindromic
// building-block step patterns, the conservative straightforwardness
// parameters, and the staged nonperiodic schedule built from them.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "silverstep/index_meta.hpp"
#include "silverstep/real.hpp"

namespace silverstep {

template <class Real>
struct SequencesBoundsReport;

template <class Real>
struct StepPattern {
  int k = 0;
  std::vector<Real> steps;  // length 2^{k+1} - 1
  Real sum = 0;             // H_k

  std::int64_t length() const { return static_cast<std::int64_t>(steps.size()); }
  Real average() const { return sum / Real(steps.size()); }
};

// Uniformly rescaled copy of a pattern (e.g. the halved candidate used when
// certifying with averaging weight 1/2).
template <class Real>
StepPattern<Real> scale_pattern(const StepPattern<Real>& pattern, const Real& factor) {
  StepPattern<Real> out;
  out.k = pattern.k;
  out.steps.reserve(pattern.steps.size());
  for (const Real& h : pattern.steps) out.steps.push_back(h * factor);
  out.sum = pattern.sum * factor;
  return out;
}

// Memoized table of the three scalar sequences. Values are computed once, in
// order, and never recomputed, so results are bit-identical for a given
// mantissa width. Build single-threaded, then share read-only.
template <class Real>
class Sequences {
 public:
  // beta_i = 1 + silver^{i-1}
  const Real& beta(int i) const {
    ensure(i);
    return beta_[static_cast<std::size_t>(i)];
  }

  // Root larger than one of 2(x-1)^2 + (mu_i - 1)(x-1) - (beta_{i+1} - 1)(mu_i - 1),
  // taken on the positive branch of the quadratic formula in (x - 1).
  const Real& alpha(int i) const {
    ensure(i);
    return alpha_[static_cast<std::size_t>(i)];
  }

  // mu_i = 2 sum_{l<i} alpha_l + sum_{l<=i-2} 2(2^{i-l-1} - 1) beta_l + 2
  const Real& mu(int i) const {
    ensure(i);
    return mu_[static_cast<std::size_t>(i)];
  }

  // pi^{(l)} has length 2^l - 1 and entries beta_{nu(i)} for 1-based i.
  std::vector<Real> pi_vector(int ell) const {
    if (ell < 0) throw std::invalid_argument("pi_vector: negative level");
    const std::uint64_t len = (std::uint64_t{1} << ell) - 1;
    std::vector<Real> out;
    out.reserve(len);
    for (std::uint64_t i = 1; i <= len; ++i) {
      const Valuation v = nu_of(i);
      out.push_back(beta(v.value));
    }
    return out;
  }

  // [alpha_0, pi^{(0)}, ..., alpha_{k-1}, pi^{(k-1)}, mu_k, mirrored left half]
  StepPattern<Real> building_block(int k) const {
    if (k < 0) throw std::invalid_argument("building_block: negative stage");
    std::vector<Real> left;
    left.reserve((std::size_t{1} << k) - 1);
    for (int l = 0; l < k; ++l) {
      left.push_back(alpha(l));
      for (const Real& x : pi_vector(l)) left.push_back(x);
    }
    StepPattern<Real> p;
    p.k = k;
    p.steps = left;
    p.steps.push_back(mu(k));
    p.steps.insert(p.steps.end(), left.rbegin(), left.rend());
    p.sum = 0;
    for (const Real& x : p.steps) p.sum += x;
    return p;
  }

  // 1/2 at stage zero; 1/(768768 sqrt(2)) * silver^{-4k} beyond.
  Real delta_conservative(int k) const {
    if (k < 0) throw std::invalid_argument("delta_conservative: negative stage");
    if (k == 0) return Real(1) / 2;
    return Real(1) / (Real(768768) * sqrt2<Real>()) * silver_pow<Real>(-4 * k);
  }

  // Applications of the scaled stage-k pattern needed to push the gap below
  // the next stage's threshold: ceil(1 / ((1 - eta) H_k delta_next)).
  std::uint64_t repetitions(int k, const Real& eta, const Real& delta_next) const {
    if (delta_next <= 0) throw std::invalid_argument("repetitions: delta_next must be positive");
    if (!(eta > 0 && eta < 1)) throw std::invalid_argument("repetitions: eta must lie in (0,1)");
    const Real h = building_block(k).sum;
    const Real q = Real(1) / ((Real(1) - eta) * h * delta_next);
    const Real c = ceil(q);
    if (c >= Real(9.22e18)) throw std::overflow_error("repetitions: count exceeds 64-bit range");
    return static_cast<std::uint64_t>(c);
  }

  SequencesBoundsReport<Real> bounds_check(int k) const;

 private:
  void ensure(int i) const {
    if (i < 0) throw std::invalid_argument("sequence index must be nonnegative");
    const std::size_t need = static_cast<std::size_t>(i) + 1;
    while (beta_.size() < need + 1) {  // alpha_i consumes beta_{i+1}
      const long long idx = static_cast<long long>(beta_.size());
      beta_.push_back(Real(1) + silver_pow<Real>(idx - 1));
    }
    while (mu_.size() < need) {
      const int i_new = static_cast<int>(mu_.size());
      Real m = 2;
      for (int l = 0; l < i_new; ++l) m += 2 * alpha_[static_cast<std::size_t>(l)];
      for (int l = 0; l + 2 <= i_new; ++l) {
        const Real reps = pow_int(Real(2), i_new - l - 1) - 1;
        m += 2 * reps * beta_[static_cast<std::size_t>(l)];
      }
      mu_.push_back(m);
      // quadratic 2 y^2 + b y + c in y = x - 1
      const Real b = m - 1;
      const Real c = -(beta_[static_cast<std::size_t>(i_new) + 1] - 1) * (m - 1);
      alpha_.push_back(Real(1) + (-b + sqrt(b * b - 8 * c)) / 4);
    }
  }

  mutable std::vector<Real> beta_, alpha_, mu_;
};

template <class Real>
struct SequencesBoundsReport {
  bool alpha_bracketed = false;      // beta_k <= alpha_k <= beta_{k+1}
  bool sum_bracketed = false;        // 2 sqrt2 s^k <= H_k <= 4 sqrt2 s^k
  bool mu_bracketed = false;         // sqrt2 s^k <= mu_k - 1 <= 2 sqrt2 s^k
  bool mu_gap_lower_bound = false;   // mu_k - mu_{k-1} >= (2 - sqrt2) s^{k-1}
  bool all() const {
    return alpha_bracketed && sum_bracketed && mu_bracketed && mu_gap_lower_bound;
  }
};

template <class Real>
SequencesBoundsReport<Real> Sequences<Real>::bounds_check(int k) const {
  if (k < 1) throw std::invalid_argument("bounds_check: requires stage >= 1");
  SequencesBoundsReport<Real> r;
  const Real sk = silver_pow<Real>(k);
  const Real h = building_block(k).sum;
  r.alpha_bracketed = beta(k) <= alpha(k) && alpha(k) <= beta(k + 1);
  r.sum_bracketed = 2 * sqrt2<Real>() * sk <= h && h <= 4 * sqrt2<Real>() * sk;
  r.mu_bracketed = sqrt2<Real>() * sk <= mu(k) - 1 && mu(k) - 1 <= 2 * sqrt2<Real>() * sk;
  r.mu_gap_lower_bound = mu(k) - mu(k - 1) >= (2 - sqrt2<Real>()) * silver_pow<Real>(k - 1);
  return r;
}

enum class DeltaSource { kConservative, kOverride };

template <class Real>
struct ScheduleStage {
  int k = 0;
  StepPattern<Real> pattern;
  std::uint64_t reps = 0;
  std::uint64_t start = 0;  // first global iteration index of this stage
  Real delta_entry = 0;     // gap threshold on entering this stage
  Real delta_next = 0;      // threshold used to size reps (next stage's entry)
};

// The staged schedule: stage k emits (1 - eta) * pattern_k, repeated reps_k
// times. Stages are built eagerly (they are few); steps are emitted lazily
// (stage-0 repetition counts alone reach ~10^7 under conservative deltas).
template <class Real>
struct Schedule {
  Real eta = 0;
  DeltaSource delta_source = DeltaSource::kConservative;
  std::vector<ScheduleStage<Real>> stages;

  std::uint64_t stage_start(int k) const { return stages.at(static_cast<std::size_t>(k)).start; }

  // Total steps through the end of the last stage (start of stage max+1).
  std::uint64_t total_steps() const {
    if (stages.empty()) return 0;
    const auto& s = stages.back();
    return s.start + static_cast<std::uint64_t>(s.pattern.length()) * s.reps;
  }

  struct StepRef {
    Real value;          // the emitted (1 - eta)-scaled step
    int stage_k;         // active stage
    std::int64_t offset; // index within the pattern
    bool pattern_end;    // true on the last step of a pattern application
  };

  // Lazy stream over the schedule's steps.
  class Stream {
   public:
    explicit Stream(const Schedule& s) : sched_(&s) {}

    bool done() const { return stage_ >= sched_->stages.size(); }

    StepRef next() {
      const auto& st = sched_->stages[stage_];
      const Real scale = Real(1) - sched_->eta;
      StepRef out{scale * st.pattern.steps[static_cast<std::size_t>(offset_)],
                  st.k, offset_, offset_ + 1 == st.pattern.length()};
      if (++offset_ == st.pattern.length()) {
        offset_ = 0;
        if (++rep_ == st.reps) {
          rep_ = 0;
          ++stage_;
        }
      }
      return out;
    }

   private:
    const Schedule* sched_;
    std::size_t stage_ = 0;
    std::uint64_t rep_ = 0;
    std::int64_t offset_ = 0;
  };

  Stream stream() const { return Stream(*this); }

  // Bounded materialization of the first n steps.
  std::vector<Real> materialize(std::size_t n) const {
    std::vector<Real> out;
    out.reserve(n);
    Stream s = stream();
    while (out.size() < n && !s.done()) out.push_back(s.next().value);
    return out;
  }
};

// Builds stages 0..max_stage. Stage k's repetition count is sized against
// delta for stage k+1: conservative values by default, or caller-supplied
// overrides (index k+1 = threshold entering stage k+1; index 0 unused for
// sizing but kept so overrides[k] aligns with stage k's entry threshold).
template <class Real>
Schedule<Real> build_schedule(const Sequences<Real>& seq, const Real& eta, int max_stage,
                              const std::optional<std::vector<Real>>& delta_overrides = {}) {
  if (!(eta > 0 && eta < 1)) throw std::invalid_argument("build_schedule: eta must lie in (0,1)");
  if (max_stage < 0) throw std::invalid_argument("build_schedule: negative stage");
  if (delta_overrides) {
    if (delta_overrides->size() < static_cast<std::size_t>(max_stage) + 2)
      throw std::invalid_argument("build_schedule: need one delta per stage boundary 0..max_stage+1");
    for (const Real& d : *delta_overrides)
      if (!(d > 0)) throw std::invalid_argument("build_schedule: overrides must be positive");
  }
  Schedule<Real> sched;
  sched.eta = eta;
  sched.delta_source = delta_overrides ? DeltaSource::kOverride : DeltaSource::kConservative;
  std::uint64_t start = 0;
  for (int k = 0; k <= max_stage; ++k) {
    ScheduleStage<Real> st;
    st.k = k;
    st.pattern = seq.building_block(k);
    st.delta_entry = delta_overrides ? (*delta_overrides)[static_cast<std::size_t>(k)]
                                     : seq.delta_conservative(k);
    st.delta_next = delta_overrides ? (*delta_overrides)[static_cast<std::size_t>(k) + 1]
                                    : seq.delta_conservative(k + 1);
    st.reps = seq.repetitions(k, eta, st.delta_next);
    st.start = start;
    const std::uint64_t len = static_cast<std::uint64_t>(st.pattern.length());
    if (st.reps > (std::uint64_t{1} << 62) / len)
      throw std::overflow_error("build_schedule: stage length exceeds 64-bit range");
    start += len * st.reps;
    sched.stages.push_back(std::move(st));
  }
  return sched;
}

}  // namespace silverstep
