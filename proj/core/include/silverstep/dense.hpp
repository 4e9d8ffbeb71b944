// Minimal dense symmetric linear algebra at extended precision: row-major
// matrices, Householder tridiagonalization, and an implicit-shift QL
// eigensolver (optionally accumulating eigenvectors). Everything is templated
// on the software floating-point type so certificate verification never
// rounds through machine doubles.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "silverstep/real.hpp"

namespace silverstep {

template <class Real>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Real(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Real& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Real& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Real max_abs() const {
    using std::abs;
    Real m = 0;
    for (const Real& x : data_) m = std::max(m, Real(abs(x)));
    return m;
  }

  Real inf_norm() const {
    using std::abs;
    Real best = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      Real s = 0;
      for (std::size_t c = 0; c < cols_; ++c) s += abs((*this)(r, c));
      best = std::max(best, s);
    }
    return best;
  }

  Real symmetry_defect() const {
    using std::abs;
    Real m = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        m = std::max(m, Real(abs((*this)(r, c) - (*this)(c, r))));
    return m;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Real> data_;
};

template <class Real>
struct SymmetricEigenResult {
  std::vector<Real> eigenvalues;  // ascending
  Matrix<Real> eigenvectors;      // column j pairs with eigenvalues[j]; empty unless requested
};

namespace detail {

template <class Real>
Real pythag(const Real& a, const Real& b) {
  using std::abs;
  const Real aa = abs(a), ab = abs(b);
  if (aa > ab) {
    const Real r = ab / aa;
    return aa * sqrt(1 + r * r);
  }
  if (ab == 0) return 0;
  const Real r = aa / ab;
  return ab * sqrt(1 + r * r);
}

// Householder reduction of a symmetric matrix to tridiagonal form
// (diagonal d, subdiagonal e); optionally accumulates the orthogonal
// transform into a for later eigenvector recovery.
template <class Real>
void tridiagonalize(Matrix<Real>& a, std::vector<Real>& d, std::vector<Real>& e,
                    bool want_vectors) {
  using std::abs;
  const std::size_t n = a.rows();
  d.assign(n, Real(0));
  e.assign(n, Real(0));
  if (n == 0) return;

  for (std::size_t i = n - 1; i >= 1; --i) {
    const std::size_t l = i - 1;
    Real h = 0;
    if (l > 0) {
      Real scale = 0;
      for (std::size_t k = 0; k <= l; ++k) scale += abs(a(i, k));
      if (scale == 0) {
        e[i] = a(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        Real f = a(i, l);
        Real g = f >= 0 ? -sqrt(h) : sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0;
        for (std::size_t j = 0; j <= l; ++j) {
          if (want_vectors) a(j, i) = a(i, j) / h;
          g = 0;
          for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const Real hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::size_t k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }

  if (want_vectors) {
    d[0] = 0;
    e[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] != 0) {
        for (std::size_t j = 0; j < i; ++j) {
          Real g = 0;
          for (std::size_t k = 0; k < i; ++k) g += a(i, k) * a(k, j);
          for (std::size_t k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
        }
      }
      d[i] = a(i, i);
      a(i, i) = 1;
      for (std::size_t j = 0; j < i; ++j) a(j, i) = a(i, j) = 0;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    e[0] = 0;
  }
}

// Implicit-shift QL sweeps on the tridiagonal (d, e); z accumulates rotations
// when eigenvectors are wanted (pass the matrix from tridiagonalize) and is
// ignored otherwise.
template <class Real>
void ql_implicit(std::vector<Real>& d, std::vector<Real>& e, Matrix<Real>* z) {
  using std::abs;
  const std::size_t n = d.size();
  if (n == 0) return;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const Real dd = abs(d[m]) + abs(d[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 64) throw std::runtime_error("eigensolver failed to converge");
        Real g = (d[l + 1] - d[l]) / (2 * e[l]);
        Real r = pythag(g, Real(1));
        g = d[m] - d[l] + e[l] / (g + (g >= 0 ? abs(r) : -abs(r)));
        Real s = 1, c = 1, p = 0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          Real f = s * e[i];
          const Real b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == 0) {
            d[i + 1] -= p;
            e[m] = 0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z != nullptr) {
            for (std::size_t row = 0; row < n; ++row) {
              f = (*z)(row, i + 1);
              (*z)(row, i + 1) = s * (*z)(row, i) + c * f;
              (*z)(row, i) = c * (*z)(row, i) - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0;
      }
    } while (m != l);
  }
}

}  // namespace detail

template <class Real>
SymmetricEigenResult<Real> symmetric_eigen(Matrix<Real> a, bool want_vectors = false) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigen: square input required");
  const std::size_t n = a.rows();
  std::vector<Real> d, e;
  detail::tridiagonalize(a, d, e, want_vectors);
  detail::ql_implicit(d, e, want_vectors ? &a : nullptr);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return d[x] < d[y]; });

  SymmetricEigenResult<Real> out;
  out.eigenvalues.reserve(n);
  for (std::size_t j : order) out.eigenvalues.push_back(d[j]);
  if (want_vectors) {
    out.eigenvectors = Matrix<Real>(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = a(r, order[c]);
  }
  return out;
}

template <class Real>
Real min_eigenvalue(const Matrix<Real>& a) {
  return symmetric_eigen(a, false).eigenvalues.front();
}

}  // namespace silverstep
