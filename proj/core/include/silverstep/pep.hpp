// Performance-estimation scaffolding for a fixed step pattern: coordinate
// selectors for the initial point, gradients, and objective values; the
// symmetric generator matrices whose traces encode the inner products of
// interest; and streamed assembly of the aggregated quadratic form and its
// split into step-weighted and Laplacian parts.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "silverstep/certificate.hpp"
#include "silverstep/dense.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"

namespace silverstep {

// Coordinate model, dimension t+2: slot 0 carries the initial point, slot
// r+1 carries gradient r. The optimum sits at the origin with zero gradient,
// and objective values use a separate (t+1)-dimensional coordinate system
// with the optimal value pinned at zero. Generators are produced on demand;
// nothing quadratic in t is stored per (i, j) pair.
template <class Real>
class PepWorkspace {
 public:
  explicit PepWorkspace(StepPattern<Real> pattern)
      : pattern_(std::move(pattern)), t_(pattern_.length()) {}

  std::int64_t t() const { return t_; }
  const StepPattern<Real>& pattern() const { return pattern_; }

  // Iterate selector: x_star = 0, x_0 = e_0, and each step subtracts
  // h_l times gradient l (unit smoothness convention).
  std::vector<Real> x(std::int64_t label) const {
    check_point_label(label);
    std::vector<Real> v(static_cast<std::size_t>(t_) + 2, Real(0));
    if (label == kStarIndex) return v;
    v[0] = 1;
    for (std::int64_t l = 0; l < label; ++l)
      v[static_cast<std::size_t>(l) + 1] -= pattern_.steps[static_cast<std::size_t>(l)];
    return v;
  }

  // Gradient selector: zero at the optimum, otherwise a unit coordinate.
  std::vector<Real> g(std::int64_t label) const {
    check_point_label(label);
    std::vector<Real> v(static_cast<std::size_t>(t_) + 2, Real(0));
    if (label != kStarIndex) v[static_cast<std::size_t>(label) + 1] = 1;
    return v;
  }

  // Objective-value selector: zero at the optimum, otherwise a unit
  // coordinate in the (t+1)-dimensional value space.
  std::vector<Real> f(std::int64_t label) const {
    check_point_label(label);
    std::vector<Real> v(static_cast<std::size_t>(t_) + 1, Real(0));
    if (label != kStarIndex) v[static_cast<std::size_t>(label)] = 1;
    return v;
  }

  // Tr(G A_{i,j}) = <g_j, x_i - x_j>.
  Matrix<Real> A(std::int64_t i, std::int64_t j) const {
    return sym_outer(g(j), diff(x(i), x(j)));
  }

  // Tr(G B_{i,j}) = |x_i - x_j|^2.
  Matrix<Real> B(std::int64_t i, std::int64_t j) const {
    const std::vector<Real> d = diff(x(i), x(j));
    return sym_outer(d, d);
  }

  // Tr(G C_{i,j}) = |g_i - g_j|^2.
  Matrix<Real> C(std::int64_t i, std::int64_t j) const {
    const std::vector<Real> d = diff(g(i), g(j));
    return sym_outer(d, d);
  }

  // Value-space coefficient of the (i, j) interpolation inequality: f_j - f_i.
  std::vector<Real> a(std::int64_t i, std::int64_t j) const { return diff(f(j), f(i)); }

 private:
  void check_point_label(std::int64_t label) const {
    if (label < kStarIndex || label > t_)
      throw std::out_of_range("pep: label outside {star, 0..t}");
  }

  static std::vector<Real> diff(const std::vector<Real>& u, const std::vector<Real>& v) {
    std::vector<Real> out(u.size());
    for (std::size_t m = 0; m < u.size(); ++m) out[m] = u[m] - v[m];
    return out;
  }

  // Symmetric outer product u (.) v = (u v' + v u') / 2.
  static Matrix<Real> sym_outer(const std::vector<Real>& u, const std::vector<Real>& v) {
    Matrix<Real> m(u.size(), u.size());
    for (std::size_t r = 0; r < u.size(); ++r)
      for (std::size_t c = 0; c < u.size(); ++c)
        m(r, c) = (u[r] * v[c] + v[r] * u[c]) / 2;
    return m;
  }

  StepPattern<Real> pattern_;
  std::int64_t t_;
};

template <class Real>
PepWorkspace<Real> assemble_pep(StepPattern<Real> pattern) {
  return PepWorkspace<Real>(std::move(pattern));
}

// Streamed aggregation of a sparse multiplier against a step pattern,
// restricted to the gradient block (t+1)x(t+1):
//   W1 accumulates the step-weighted terms sum lambda_{i,j} A_{i,j},
//   W2 accumulates the Laplacian terms sum (lambda_{i,j}/2) C_{i,j},
//   m collects the initial-point border column (only star-row entries of the
//   multiplier reach it), and M = W1 + W2.
template <class Real>
struct AssembledForm {
  Matrix<Real> M;
  Matrix<Real> W1;
  Matrix<Real> W2;
  std::vector<Real> m_vec;
};

namespace detail {

// Shared accumulation core over (row, col, value) multiplier triplets.
template <class Real>
class FormAccumulator {
 public:
  FormAccumulator(const StepPattern<Real>& pattern, std::int64_t t)
      : h_(&pattern.steps), t_(t), w1_(static_cast<std::size_t>(t + 1),
                                       static_cast<std::size_t>(t + 1)),
        w2_(static_cast<std::size_t>(t + 1), static_cast<std::size_t>(t + 1)),
        m_(static_cast<std::size_t>(t + 1), Real(0)) {
    if (pattern.length() != t)
      throw std::invalid_argument("assemble: pattern length does not match multiplier");
  }

  void add(std::int64_t i, std::int64_t j, const Real& v) {
    if (i == j || v == 0) return;
    if (i > t_ || j > t_ || i < kStarIndex || j < kStarIndex)
      throw std::out_of_range("assemble: multiplier index outside {star, 0..t}");
    if (j == kStarIndex) {
      // The gradient at the optimum vanishes, so only the Laplacian diagonal
      // survives from this pair.
      w2_(ui(i), ui(i)) += v / 2;
      return;
    }
    if (i == kStarIndex) {
      // The optimum behaves like index 0 in the step-weighted part (the two
      // points differ only along the initial-point coordinate, which lands
      // in the border column instead).
      for (std::int64_t l = 0; l < j; ++l) {
        const Real inc = v * (*h_)[static_cast<std::size_t>(l)] / 2;
        w1_(ui(j), ui(l)) += inc;
        w1_(ui(l), ui(j)) += inc;
      }
      w2_(ui(j), ui(j)) += v / 2;
      m_[ui(j)] -= v / 2;
      return;
    }
    const std::int64_t lo = i < j ? i : j;
    const std::int64_t hi = i < j ? j : i;
    const int sgn = i < j ? 1 : -1;
    for (std::int64_t l = lo; l < hi; ++l) {
      const Real inc = sgn * v * (*h_)[static_cast<std::size_t>(l)] / 2;
      w1_(ui(j), ui(l)) += inc;
      w1_(ui(l), ui(j)) += inc;
    }
    w2_(ui(i), ui(i)) += v / 2;
    w2_(ui(j), ui(j)) += v / 2;
    w2_(ui(i), ui(j)) -= v / 2;
    w2_(ui(j), ui(i)) -= v / 2;
  }

  AssembledForm<Real> finish() && {
    AssembledForm<Real> out{Matrix<Real>(static_cast<std::size_t>(t_ + 1),
                                         static_cast<std::size_t>(t_ + 1)),
                            std::move(w1_), std::move(w2_), std::move(m_)};
    for (std::size_t r = 0; r < out.W1.rows(); ++r)
      for (std::size_t c = 0; c < out.W1.cols(); ++c)
        out.M(r, c) = out.W1(r, c) + out.W2(r, c);
    return out;
  }

 private:
  static std::size_t ui(std::int64_t label) { return static_cast<std::size_t>(label); }

  const std::vector<Real>* h_;
  std::int64_t t_;
  Matrix<Real> w1_;
  Matrix<Real> w2_;
  std::vector<Real> m_;
};

}  // namespace detail

template <class Real>
AssembledForm<Real> assemble_M(const Certificate<Real>& cert, const StepPattern<Real>& pattern) {
  detail::FormAccumulator<Real> acc(pattern, cert.t);
  for (const auto& [key, value] : cert.entries) acc.add(key.first, key.second, value);
  return std::move(acc).finish();
}

// Aggregation of the rank-one multiplier through the same streaming core.
template <class Real>
AssembledForm<Real> assemble_M(const GammaMultiplier<Real>& gamma,
                               const StepPattern<Real>& pattern) {
  detail::FormAccumulator<Real> acc(pattern, gamma.t());
  for (const auto& [i, j, value] : gamma.triplets()) acc.add(i, j, value);
  return std::move(acc).finish();
}

// The Laplacian part alone, pattern-free (its terms carry no step weights).
template <class Real>
Matrix<Real> assemble_W2(const Certificate<Real>& cert) {
  StepPattern<Real> unit;
  unit.k = cert.k;
  unit.steps.assign(static_cast<std::size_t>(cert.t), Real(1));
  unit.sum = Real(cert.t);
  detail::FormAccumulator<Real> acc(unit, cert.t);
  for (const auto& [key, value] : cert.entries) acc.add(key.first, key.second, value);
  return std::move(acc).finish().W2;
}

}  // namespace silverstep
