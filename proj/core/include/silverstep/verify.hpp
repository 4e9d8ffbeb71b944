// Numerical verification of the certificate package: row/column balance,
// the rank-one identity for the aggregated form, the Laplacian spectral-gap
// and superdiagonal lower bounds, the quantitative straightforwardness
// parameter, membership in the spectral feasibility set, bisection for the
// largest certified parameter, and the elementary feasibility bounds that
// every straightforward pattern must satisfy.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "silverstep/certificate.hpp"
#include "silverstep/dense.hpp"
#include "silverstep/pep.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"

namespace silverstep {

namespace detail {
template <class Real>
std::optional<Real>& verification_tolerance_slot() {
  static std::optional<Real> v;
  return v;
}
}  // namespace detail

// Spectral slack: certified matrices sit exactly on the boundary of the
// semidefinite cone (the aggregated form is rank-one), so a matrix passes
// when its minimum eigenvalue is >= -eps * (1 + |A|_inf) with eps at half
// the working mantissa. An explicit process-wide override (set once, before
// any parallel work) replaces the default.
template <class Real>
Real verification_epsilon() {
  const std::optional<Real>& o = detail::verification_tolerance_slot<Real>();
  if (o) return *o;
  static const Real v =
      pow_int(Real(2), -static_cast<long long>(std::numeric_limits<Real>::digits / 2));
  return v;
}

template <class Real>
void set_verification_tolerance(const std::optional<Real>& tol) {
  if (tol && *tol < 0)
    throw std::invalid_argument("set_verification_tolerance: tolerance must be >= 0");
  detail::verification_tolerance_slot<Real>() = tol;
}

template <class Real>
struct ResidualReport {
  Real max_residual = 0;  // relative to 1 + the natural magnitude of the data
  bool ok = false;
};

// Row/column balance of the certificate: summing over all labels including
// the star row, row 0 must exceed column 0 by one, interior rows must
// balance their columns, and row t must fall one short of column t.
template <class Real>
ResidualReport<Real> check_rowcol(const Certificate<Real>& cert) {
  using std::abs;
  std::vector<Real> rowsum(static_cast<std::size_t>(cert.t) + 2, Real(0));
  std::vector<Real> colsum(static_cast<std::size_t>(cert.t) + 2, Real(0));
  Real scale(1);
  for (const auto& [key, value] : cert.entries) {
    rowsum[Certificate<Real>::slot(key.first)] += value;
    colsum[Certificate<Real>::slot(key.second)] += value;
  }
  for (const Real& s : rowsum) if (s > scale - 1) scale = 1 + s;
  ResidualReport<Real> rep;
  for (std::int64_t r = 0; r <= cert.t; ++r) {
    const Real target = r == 0 ? Real(1) : (r == cert.t ? Real(-1) : Real(0));
    const Real resid =
        abs(rowsum[Certificate<Real>::slot(r)] - colsum[Certificate<Real>::slot(r)] - target) /
        scale;
    if (resid > rep.max_residual) rep.max_residual = resid;
  }
  rep.ok = rep.max_residual <= verification_epsilon<Real>();
  return rep;
}

// The three-line linear system tying gamma to the pattern sum H: the star
// row telescopes through the superdiagonal, entering at 2H and leaving at
// -gamma_{star,t}.
template <class Real>
ResidualReport<Real> check_gamma_lin(const GammaMultiplier<Real>& gamma,
                                     const StepPattern<Real>& pattern) {
  using std::abs;
  const std::int64_t t = gamma.t();
  if (pattern.length() != t)
    throw std::invalid_argument("check_gamma_lin: pattern length does not match gamma");
  const Real twoH = 2 * pattern.sum;
  const Real scale = 1 + abs(twoH);
  ResidualReport<Real> rep;
  const auto consider = [&rep, &scale](const Real& resid) {
    using std::abs;
    const Real r = abs(resid) / scale;
    if (r > rep.max_residual) rep.max_residual = r;
  };
  consider(gamma.star_row[0] - gamma.superdiag[0] - twoH);
  for (std::int64_t i = 1; i < t; ++i)
    consider(gamma.star_row[static_cast<std::size_t>(i)] -
             gamma.superdiag[static_cast<std::size_t>(i)] +
             gamma.superdiag[static_cast<std::size_t>(i) - 1]);
  consider(gamma.star_row[static_cast<std::size_t>(t)] +
           gamma.superdiag[static_cast<std::size_t>(t) - 1]);
  rep.ok = rep.max_residual <= verification_epsilon<Real>();
  return rep;
}

template <class Real>
struct RankOneReport {
  Real max_deviation = 0;         // max |M - phi phi'/2| relative to 1 + |M|_max
  Real second_singular_ratio = 0; // second-largest |eigenvalue| over largest
  bool ok = false;
};

// The aggregated form of the certificate at its own unscaled pattern must be
// exactly half the outer square of phi.
template <class Real>
RankOneReport<Real> check_rank_one(const Matrix<Real>& M, const PhiVector<Real>& ph) {
  using std::abs;
  if (M.rows() != ph.values.size() || M.cols() != ph.values.size())
    throw std::invalid_argument("check_rank_one: dimension mismatch");
  RankOneReport<Real> rep;
  const Real scale = 1 + M.max_abs();
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      const Real d = abs(M(r, c) - ph.values[r] * ph.values[c] / 2) / scale;
      if (d > rep.max_deviation) rep.max_deviation = d;
    }
  const SymmetricEigenResult<Real> eig = symmetric_eigen(M);
  Real largest(0), second(0);
  for (const Real& ev : eig.eigenvalues) {
    const Real a = abs(ev);
    if (a > largest) {
      second = largest;
      largest = a;
    } else if (a > second) {
      second = a;
    }
  }
  rep.second_singular_ratio = largest > 0 ? second / largest : Real(0);
  rep.ok = rep.max_deviation <= verification_epsilon<Real>() &&
           rep.second_singular_ratio <= verification_epsilon<Real>();
  return rep;
}

// Second-smallest eigenvalue of the certificate's Laplacian part. The
// smallest eigenvalue is the all-ones kernel direction (checked by tests);
// the second one carries the connectivity strength of the support graph.
template <class Real>
Real w2_second_eigenvalue(const Certificate<Real>& cert) {
  const Matrix<Real> w2 = assemble_W2(cert);
  const SymmetricEigenResult<Real> eig = symmetric_eigen(w2);
  return eig.eigenvalues.at(1);
}

// Quantitative straightforwardness parameter: the smaller of the normalized
// minimum superdiagonal weight and the spectral-gap term L / (21 H^3).
// The hypotheses (pattern length at least 3, sum at least 8, gap bound in
// (0, 1]) are enforced strictly.
template <class Real>
Real delta_quantitative(const Certificate<Real>& cert, const StepPattern<Real>& pattern,
                        const Real& Lfrak) {
  if (pattern.length() != cert.t)
    throw std::invalid_argument("delta_quantitative: pattern length does not match certificate");
  if (cert.t < 3) throw std::invalid_argument("delta_quantitative: requires pattern length >= 3");
  const Real H = pattern.sum;
  if (!(H >= 8)) throw std::invalid_argument("delta_quantitative: requires pattern sum >= 8");
  if (!(Lfrak > 0 && Lfrak <= 1))
    throw std::invalid_argument("delta_quantitative: spectral gap bound must lie in (0, 1]");
  const Real branch1 = cert.min_superdiagonal() / H;
  const Real branch2 = Lfrak / (21 * H * H * H);
  return branch1 < branch2 ? branch1 : branch2;
}

// Bordered spectral matrix [[corner, border'], [border, M]].
template <class Real>
Matrix<Real> bordered_matrix(const Real& corner, const std::vector<Real>& border,
                             const Matrix<Real>& M) {
  if (M.rows() != border.size() || M.cols() != border.size())
    throw std::invalid_argument("bordered_matrix: dimension mismatch");
  Matrix<Real> B(border.size() + 1, border.size() + 1);
  B(0, 0) = corner;
  for (std::size_t i = 0; i < border.size(); ++i) {
    B(0, i + 1) = border[i];
    B(i + 1, 0) = border[i];
  }
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) B(r + 1, c + 1) = M(r, c);
  return B;
}

// Constraint-by-constraint evaluation of candidate membership in the
// spectral feasibility set at a given parameter. Reports violations, never
// throws on them.
template <class Real>
struct MembershipReport {
  Real delta = 0;
  Real tolerance = 0;             // epsilon used for all verdicts below
  Real lambda_linear_residual = 0;
  Real gamma_linear_residual = 0;
  Real m_lambda_max = 0;
  Real lambda_min_entry = 0;      // most negative stored multiplier entry
  Real shifted_min_entry = 0;     // most negative entry of lambda + delta*gamma
  Real base_min_eig = 0;
  Real base_scale = 0;            // 1 + inf-norm of the base bordered matrix
  Real shifted_min_eig = 0;
  Real shifted_scale = 0;
  bool lambda_linear_ok = false;
  bool gamma_linear_ok = false;
  bool m_lambda_ok = false;
  bool lambda_nonneg_ok = false;
  bool shifted_nonneg_ok = false;
  bool base_psd_ok = false;
  bool shifted_psd_ok = false;

  bool pass() const {
    return lambda_linear_ok && gamma_linear_ok && m_lambda_ok && lambda_nonneg_ok &&
           shifted_nonneg_ok && base_psd_ok && shifted_psd_ok;
  }
};

template <class Real>
MembershipReport<Real> membership_S(const StepPattern<Real>& pattern_scaled, const Real& delta,
                                    const Certificate<Real>& cert,
                                    const GammaMultiplier<Real>& gamma_scaled) {
  using std::abs;
  MembershipReport<Real> rep;
  rep.delta = delta;
  rep.tolerance = verification_epsilon<Real>();

  rep.lambda_linear_residual = check_rowcol(cert).max_residual;
  rep.lambda_linear_ok = rep.lambda_linear_residual <= rep.tolerance;

  rep.gamma_linear_residual = check_gamma_lin(gamma_scaled, pattern_scaled).max_residual;
  rep.gamma_linear_ok = rep.gamma_linear_residual <= rep.tolerance;

  const AssembledForm<Real> base = assemble_M(cert, pattern_scaled);
  const AssembledForm<Real> gm = assemble_M(gamma_scaled, pattern_scaled);

  for (const Real& m : base.m_vec)
    if (abs(m) > rep.m_lambda_max) rep.m_lambda_max = abs(m);
  rep.m_lambda_ok = rep.m_lambda_max <= rep.tolerance;

  rep.lambda_min_entry = 0;
  for (const auto& [key, value] : cert.entries)
    if (value < rep.lambda_min_entry) rep.lambda_min_entry = value;
  rep.lambda_nonneg_ok = rep.lambda_min_entry >= -rep.tolerance;

  // The shifted sign constraint needs the union of both supports: gamma's
  // negative superdiagonal is where the parameter bites.
  rep.shifted_min_entry = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, Real> shifted;
  for (const auto& [key, value] : cert.entries) shifted[key] = value;
  for (const auto& [i, j, value] : gamma_scaled.triplets())
    shifted[std::pair{i, j}] += delta * value;
  for (const auto& [key, value] : shifted)
    if (value < rep.shifted_min_entry) rep.shifted_min_entry = value;
  rep.shifted_nonneg_ok = rep.shifted_min_entry >= -rep.tolerance;

  const Matrix<Real> base_bordered = bordered_matrix(pattern_scaled.sum, gm.m_vec, base.M);
  rep.base_scale = 1 + base_bordered.inf_norm();
  rep.base_min_eig = min_eigenvalue(base_bordered);
  rep.base_psd_ok = rep.base_min_eig >= -rep.tolerance * rep.base_scale;

  Matrix<Real> shifted_M = base.M;
  for (std::size_t r = 0; r < shifted_M.rows(); ++r)
    for (std::size_t c = 0; c < shifted_M.cols(); ++c) shifted_M(r, c) += delta * gm.M(r, c);
  const Matrix<Real> shifted_bordered = bordered_matrix(pattern_scaled.sum, gm.m_vec, shifted_M);
  rep.shifted_scale = 1 + shifted_bordered.inf_norm();
  rep.shifted_min_eig = min_eigenvalue(shifted_bordered);
  rep.shifted_psd_ok = rep.shifted_min_eig >= -rep.tolerance * rep.shifted_scale;

  return rep;
}

// Largest parameter in [conservative, 1] at which the fixed candidate stays
// feasible, located by bisection. Only the sign and the shifted spectral
// constraints depend on the parameter, and both carve out an interval
// containing zero, so bisection against them is sound. Signals if even the
// conservative parameter fails: that means the certificate itself is broken.
template <class Real>
Real bisect_delta(const StepPattern<Real>& pattern_scaled, const Certificate<Real>& cert,
                  const GammaMultiplier<Real>& gamma_scaled, int iterations) {
  if (iterations < 0) throw std::invalid_argument("bisect_delta: negative iteration count");
  const Sequences<Real> seq;
  const Real delta0 = seq.delta_conservative(cert.k);
  if (!membership_S(pattern_scaled, delta0, cert, gamma_scaled).pass())
    throw std::runtime_error("bisect_delta: candidate infeasible at the conservative parameter");
  if (iterations == 0) return delta0;

  const Real tol = verification_epsilon<Real>();
  const AssembledForm<Real> base = assemble_M(cert, pattern_scaled);
  const AssembledForm<Real> gm = assemble_M(gamma_scaled, pattern_scaled);

  // Sign cap: each negative gamma entry bounds delta by lambda / (-gamma).
  Real sign_cap(2);
  for (const auto& [i, j, value] : gamma_scaled.triplets()) {
    if (value >= 0) continue;
    const Real cap = (cert.at(i, j) + tol) / -value;
    if (cap < sign_cap) sign_cap = cap;
  }

  const auto feasible = [&](const Real& delta) {
    if (delta > sign_cap) return false;
    Matrix<Real> shifted = base.M;
    for (std::size_t r = 0; r < shifted.rows(); ++r)
      for (std::size_t c = 0; c < shifted.cols(); ++c) shifted(r, c) += delta * gm.M(r, c);
    const Matrix<Real> b = bordered_matrix(pattern_scaled.sum, gm.m_vec, shifted);
    return min_eigenvalue(b) >= -tol * (1 + b.inf_norm());
  };

  Real lo = delta0, hi(1);
  if (feasible(hi)) return hi;
  for (int it = 0; it < iterations; ++it) {
    const Real mid = (lo + hi) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

// The three elementary bounds every straightforward pattern satisfies; a
// violated bound certifies non-straightforwardness via an explicit
// one-dimensional problem instance (exercised by the adversary suite).
template <class Real>
struct FeasibilityBounds {
  Real product = 0;          // prod_i (h_i - 1)
  Real product_margin = 0;   // 1 - |product|
  bool product_ok = false;   // strictly inside (-1, 1)
  bool product_boundary = false;

  Real sum_min_margin = 0;   // min_i of sum_{j != i} h_j + 2 - h_i
  std::int64_t sum_argmin = 0;
  std::vector<std::int64_t> sum_violations;  // i with margin <= 0 (to tolerance)
  bool sum_ok = false;
  bool sum_boundary = false;

  Real pair_min_margin = 0;  // min_i of sum_rest + 1 - (1 - h_i)(1 - h_{i+})
  std::int64_t pair_argmin = 0;
  std::vector<std::int64_t> pair_violations;  // i, pairing (i, (i+1) mod t)
  bool pair_ok = false;
  bool pair_boundary = false;

  bool all_strict() const { return product_ok && sum_ok && pair_ok; }
};

template <class Real>
FeasibilityBounds<Real> pattern_feasibility_bounds(const std::vector<Real>& steps) {
  using std::abs;
  if (steps.empty()) throw std::invalid_argument("pattern_feasibility_bounds: empty pattern");
  for (const Real& h : steps)
    if (!(h > 0)) throw std::invalid_argument("pattern_feasibility_bounds: steps must be positive");
  const Real tol = verification_epsilon<Real>();
  const std::int64_t t = static_cast<std::int64_t>(steps.size());
  FeasibilityBounds<Real> rep;

  rep.product = 1;
  for (const Real& h : steps) rep.product *= h - 1;
  rep.product_margin = 1 - abs(rep.product);
  rep.product_boundary = abs(rep.product_margin) <= tol;
  rep.product_ok = rep.product_margin > tol;

  Real total(0);
  for (const Real& h : steps) total += h;
  const Real sum_scale = 1 + total;
  bool first = true;
  for (std::int64_t i = 0; i < t; ++i) {
    const Real margin = total - steps[static_cast<std::size_t>(i)] + 2 -
                        steps[static_cast<std::size_t>(i)];
    if (first || margin < rep.sum_min_margin) {
      rep.sum_min_margin = margin;
      rep.sum_argmin = i;
    }
    first = false;
    if (margin <= tol * sum_scale) rep.sum_violations.push_back(i);
    if (abs(margin) <= tol * sum_scale) rep.sum_boundary = true;
  }
  rep.sum_ok = rep.sum_violations.empty();

  first = true;
  for (std::int64_t i = 0; i < t; ++i) {
    const std::int64_t ip = (i + 1) % t;
    const Real hi = steps[static_cast<std::size_t>(i)];
    const Real hp = steps[static_cast<std::size_t>(ip)];
    const Real rest = total - hi - (ip == i ? Real(0) : hp);
    const Real margin = rest + 1 - (1 - hi) * (1 - hp);
    if (first || margin < rep.pair_min_margin) {
      rep.pair_min_margin = margin;
      rep.pair_argmin = i;
    }
    first = false;
    if (margin <= tol * sum_scale) rep.pair_violations.push_back(i);
    if (abs(margin) <= tol * sum_scale) rep.pair_boundary = true;
  }
  rep.pair_ok = rep.pair_violations.empty();

  return rep;
}

// Aggregated verification of one stage: builds the certificate twice (both
// construction paths must agree), checks every condition the rank-one
// decomposition needs, evaluates the spectral bounds, and optionally bisects
// for the largest certified parameter of the halved candidate.
template <class Real>
struct VerificationReport {
  int k = 0;
  bool rowcol_ok = false;
  Real rowcol_max_residual = 0;
  bool rank_one_ok = false;
  Real rank_one_max_dev = 0;
  bool m_lambda_zero_ok = false;
  bool nonneg_ok = false;
  Real second_eig = 0;
  Real second_eig_bound = 0;
  Real superdiag_min = 0;
  Real superdiag_bound = 0;
  Real delta_quant = 0;
  std::optional<Real> delta_bisected;

  bool pass() const {
    return rowcol_ok && rank_one_ok && m_lambda_zero_ok && nonneg_ok &&
           second_eig >= second_eig_bound && superdiag_min >= superdiag_bound &&
           delta_quant > 0;
  }
};

template <class Real>
VerificationReport<Real> verify_certificate(const Sequences<Real>& seq, int k,
                                            int bisect_iterations = 0) {
  using std::abs;
  const StepPattern<Real> pattern = seq.building_block(k);
  const Certificate<Real> cert = lambda_cert(seq, k);
  const Real mismatch = certificate_max_mismatch(cert, lambda_cert_entrywise(seq, k));
  if (mismatch > verification_epsilon<Real>())
    throw std::logic_error("verify_certificate: the two construction paths disagree");

  VerificationReport<Real> rep;
  rep.k = k;

  const ResidualReport<Real> rowcol = check_rowcol(cert);
  rep.rowcol_ok = rowcol.ok;
  rep.rowcol_max_residual = rowcol.max_residual;

  const PhiVector<Real> ph = phi(seq, k);
  const AssembledForm<Real> asmM = assemble_M(cert, pattern);
  const RankOneReport<Real> rank1 = check_rank_one(asmM.M, ph);
  rep.rank_one_ok = rank1.ok;
  rep.rank_one_max_dev = rank1.max_deviation;

  Real m_max(0);
  for (const Real& m : asmM.m_vec)
    if (abs(m) > m_max) m_max = abs(m);
  rep.m_lambda_zero_ok = m_max <= verification_epsilon<Real>();

  rep.superdiag_min = cert.min_superdiagonal();
  rep.superdiag_bound = (2 - sqrt2<Real>()) / (8 * sqrt2<Real>()) * silver_pow<Real>(-2 * k + 1);
  bool entries_nonneg = true;
  for (const auto& [key, value] : cert.entries)
    if (value < 0) entries_nonneg = false;
  rep.nonneg_ok = entries_nonneg && rep.superdiag_min > 0;

  const SymmetricEigenResult<Real> w2eig = symmetric_eigen(asmM.W2);
  rep.second_eig = w2eig.eigenvalues.at(1);
  rep.second_eig_bound = silver_pow<Real>(-k) / 286;

  // Stage zero sits below the quantitative bound's hypotheses (t >= 3,
  // H >= 8); its parameter is pinned at 1/2 directly.
  rep.delta_quant = k == 0 ? Real(1) / 2 : delta_quantitative(cert, pattern, rep.second_eig_bound);

  if (bisect_iterations > 0) {
    const StepPattern<Real> half = scale_pattern(pattern, Real(1) / 2);
    const GammaMultiplier<Real> gamma =
        gamma_from_phi(pattern.sum, ph).scaled(Real(1) / 2);
    rep.delta_bisected = bisect_delta(half, cert, gamma, bisect_iterations);
  }
  return rep;
}

}  // namespace silverstep
