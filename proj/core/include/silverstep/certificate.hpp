// Construction of the sparse nonnegativity certificates attached to each
// step pattern: the auxiliary vectors (sigma, rho, w, phi), the certificate
// matrix built row by row from five structural cases, the rank-one
// multiplier gamma, and the combinatorial column-support sets.
#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "silverstep/index_meta.hpp"
#include "silverstep/real.hpp"
#include "silverstep/sequence.hpp"

namespace silverstep {

// Label of the optimum row/column; iterate rows use their indices 0..t.
inline constexpr std::int64_t kStarIndex = -1;

// Structural shape of a certificate row. The pattern midpoint, the rows at
// power-of-two offsets from either end, and the remaining interior rows of
// each half all follow different closed forms.
enum class RowCase {
  kZeroRow,        // the optimum row and the final row are identically zero
  kLeftInterior,   // left half, i+1 not a power of two
  kRightInterior,  // right half, distance to the end not a power of two
  kLeftAnchor,     // i = 2^l - 1 with l < k
  kCenter,         // i = 2^k - 1, the pattern midpoint
  kRightAnchor,    // i = 2^{k+1} - 2^l - 1 with l < k
};

inline constexpr std::string_view row_case_name(RowCase c) {
  switch (c) {
    case RowCase::kZeroRow: return "zero";
    case RowCase::kLeftInterior: return "left_interior";
    case RowCase::kRightInterior: return "right_interior";
    case RowCase::kLeftAnchor: return "left_anchor";
    case RowCase::kCenter: return "center";
    case RowCase::kRightAnchor: return "right_anchor";
  }
  return "unknown";
}

inline RowCase row_case_from_name(std::string_view name) {
  for (RowCase c : {RowCase::kZeroRow, RowCase::kLeftInterior, RowCase::kRightInterior,
                    RowCase::kLeftAnchor, RowCase::kCenter, RowCase::kRightAnchor}) {
    if (row_case_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown row case name: " + std::string(name));
}

// Sparse nonnegative multiplier matrix over index set {star, 0, ..., t},
// keyed (row, col) in those labels. Immutable once built; the ordered map
// gives deterministic iteration for serialization and assembly.
template <class Real>
struct Certificate {
  int k = 0;
  std::int64_t t = 0;  // pattern length 2^{k+1} - 1
  std::map<std::pair<std::int64_t, std::int64_t>, Real> entries;
  std::vector<RowCase> row_case;  // slot 0 = star row, slot i+1 = row i

  // Matrix dimension including the star row/column.
  std::int64_t dim() const { return t + 2; }

  // Dense slot of a label: star maps to 0, iterate i to i + 1.
  static std::size_t slot(std::int64_t label) { return static_cast<std::size_t>(label + 1); }

  Real at(std::int64_t row, std::int64_t col) const {
    const auto it = entries.find({row, col});
    return it == entries.end() ? Real(0) : it->second;
  }

  RowCase row_case_of(std::int64_t row) const { return row_case.at(slot(row)); }

  Real row_sum(std::int64_t row) const {
    Real s(0);
    const auto lo = entries.lower_bound({row, std::numeric_limits<std::int64_t>::min()});
    for (auto it = lo; it != entries.end() && it->first.first == row; ++it) s += it->second;
    return s;
  }

  Real min_superdiagonal() const {
    Real m = at(0, 1);
    for (std::int64_t i = 1; i + 1 <= t; ++i) {
      const Real v = at(i, i + 1);
      if (v < m) m = v;
    }
    return m;
  }
};

// sigma vectors: sigma(1) is empty; deeper levels prepend a geometrically
// damped copy of the next pattern slice. Length 2^{k-1} - 1.
template <class Real>
std::vector<Real> sigma(const Sequences<Real>& seq, int k) {
  if (k < 1) throw std::invalid_argument("sigma: level must be >= 1");
  std::vector<Real> out;
  out.reserve((std::size_t{1} << (k - 1)) - 1);
  for (int m = k; m >= 2; --m) {
    const Real c = silver_pow<Real>(-2 * (m - 1)) / 2;
    for (const Real& x : seq.pi_vector(m - 2)) out.push_back(c * x);
    out.push_back(c * seq.beta(m));
  }
  return out;
}

// rho vectors: the windowed profile of an interior certificate row before
// its case-specific scaling. rho(0) = [0, 1]; level l has length
// 2^{l-1} + 2^l + 1 with a structural zero in the diagonal slot.
template <class Real>
std::vector<Real> rho(const Sequences<Real>& seq, int k) {
  if (k < 0) throw std::invalid_argument("rho: negative level");
  std::vector<Real> out;
  if (k == 0) {
    out = {Real(0), Real(1)};
    return out;
  }
  out.reserve((std::size_t{1} << (k - 1)) + (std::size_t{1} << k) + 1);
  out.push_back(silver_pow<Real>(k - 2));
  const std::vector<Real> sg = sigma(seq, k);
  const std::vector<Real> pv = seq.pi_vector(k - 1);
  for (std::size_t m = 0; m < sg.size(); ++m)
    out.push_back(silver_pow<Real>(2 * k - 1) * sg[m] - pv[m] / (2 * silver<Real>()));
  out.push_back(Real(0));
  for (const Real& x : seq.pi_vector(k)) out.push_back(x);
  out.push_back(Real(1));
  return out;
}

// w vectors: the right-tail profile of the midpoint row. w(0) = [1]; level
// k prepends the level-(k-1) pattern slice normalized by sqrt(mu_k - 1).
// Length 2^k; entries sum to sqrt(mu_k - 1).
template <class Real>
std::vector<Real> w_vec(const Sequences<Real>& seq, int k) {
  if (k < 0) throw std::invalid_argument("w_vec: negative level");
  using std::sqrt;
  std::vector<Real> out;
  out.reserve(std::size_t{1} << k);
  for (int m = k; m >= 1; --m) {
    const Real r = sqrt(seq.mu(m) - 1);
    for (const Real& x : seq.pi_vector(m - 1)) out.push_back(x / r);
    out.push_back(seq.beta(m) / r);
  }
  out.push_back(Real(1));
  return out;
}

// The nonnegative vector whose outer square reproduces the aggregated
// certificate quadratic form. Indexed by iterate 0..t; its entries sum to
// sqrt(2 H_k).
template <class Real>
struct PhiVector {
  int k = 0;
  std::vector<Real> values;  // length 2^{k+1}

  Real sum() const {
    Real s(0);
    for (const Real& x : values) s += x;
    return s;
  }
};

template <class Real>
PhiVector<Real> phi(const Sequences<Real>& seq, int k) {
  if (k < 0) throw std::invalid_argument("phi: negative stage");
  using std::sqrt;
  PhiVector<Real> out;
  out.k = k;
  out.values.reserve(std::size_t{1} << (k + 1));
  for (std::int64_t m = 0; m + 1 < (std::int64_t{1} << k); ++m) out.values.push_back(Real(0));
  out.values.push_back(sqrt(seq.mu(k) - 1));
  for (Real& x : w_vec(seq, k)) out.values.push_back(std::move(x));
  return out;
}

// Rank-one multiplier tying the objective-gap row to the iterate chain:
// a star row proportional to phi plus a telescoping superdiagonal. All
// other entries are implicitly zero.
template <class Real>
struct GammaMultiplier {
  Real H = 0;                   // step-pattern sum the multiplier was built for
  std::vector<Real> star_row;   // entries (star, i), i in [0, t]
  std::vector<Real> superdiag;  // entries (i, i+1), i in [0, t-1]

  std::int64_t t() const { return static_cast<std::int64_t>(star_row.size()) - 1; }

  // Sparse triplet view in certificate labels, star first then superdiagonal.
  std::vector<std::tuple<std::int64_t, std::int64_t, Real>> triplets() const {
    std::vector<std::tuple<std::int64_t, std::int64_t, Real>> out;
    out.reserve(star_row.size() + superdiag.size());
    for (std::size_t i = 0; i < star_row.size(); ++i)
      out.emplace_back(kStarIndex, static_cast<std::int64_t>(i), star_row[i]);
    for (std::size_t i = 0; i < superdiag.size(); ++i)
      out.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i) + 1,
                       superdiag[i]);
    return out;
  }

  // Entrywise rescaled copy; H scales along so the linear checks against the
  // correspondingly rescaled pattern keep holding.
  GammaMultiplier scaled(const Real& factor) const {
    GammaMultiplier out;
    out.H = H * factor;
    out.star_row.reserve(star_row.size());
    for (const Real& v : star_row) out.star_row.push_back(v * factor);
    out.superdiag.reserve(superdiag.size());
    for (const Real& v : superdiag) out.superdiag.push_back(v * factor);
    return out;
  }
};

// Builds gamma from phi: star entries are sqrt(2H) * phi_i, the
// superdiagonal telescopes their prefix sums down from -2H to -gamma_{star,t}.
// Rejects a phi whose entries do not sum to sqrt(2H); that indicates a bug in
// the upstream vector construction, not a tolerance issue.
template <class Real>
GammaMultiplier<Real> gamma_from_phi(const Real& H, const PhiVector<Real>& ph) {
  using std::sqrt;
  const Real target = sqrt(2 * H);
  const Real tol = sqrt(std::numeric_limits<Real>::epsilon());
  if (rel_diff(ph.sum(), target) > tol)
    throw std::invalid_argument("gamma_from_phi: phi entries must sum to sqrt(2H)");
  GammaMultiplier<Real> g;
  g.H = H;
  g.star_row.reserve(ph.values.size());
  for (const Real& x : ph.values) g.star_row.push_back(target * x);
  g.superdiag.reserve(ph.values.size() - 1);
  Real prefix(0);
  for (std::size_t i = 0; i + 1 < ph.values.size(); ++i) {
    prefix += g.star_row[i];
    g.superdiag.push_back(prefix - 2 * H);
  }
  return g;
}

namespace detail {

// Scatters a windowed row profile into the sparse map, skipping the
// structural zero in the diagonal slot and any exact zeros.
template <class Real>
void scatter_row(Certificate<Real>& cert, std::int64_t i, std::int64_t lo,
                 const std::vector<Real>& vec) {
  for (std::size_t off = 0; off < vec.size(); ++off) {
    const std::int64_t j = lo + static_cast<std::int64_t>(off);
    if (j == i || vec[off] == 0) continue;
    cert.entries.insert_or_assign(std::pair{i, j}, vec[off]);
  }
}

template <class Real>
Certificate<Real> certificate_stage_zero() {
  Certificate<Real> cert;
  cert.k = 0;
  cert.t = 1;
  cert.row_case = {RowCase::kZeroRow, RowCase::kCenter, RowCase::kZeroRow};
  cert.entries.insert_or_assign(std::pair<std::int64_t, std::int64_t>{0, 1}, Real(1));
  return cert;
}

}  // namespace detail

// Certificate built from the windowed row profiles (the concatenated-vector
// description of each case). Preferred construction path.
template <class Real>
Certificate<Real> lambda_cert(const Sequences<Real>& seq, int k) {
  if (k < 0) throw std::invalid_argument("lambda_cert: negative stage");
  if (k == 0) return detail::certificate_stage_zero<Real>();
  using std::sqrt;
  Certificate<Real> cert;
  cert.k = k;
  cert.t = (std::int64_t{1} << (k + 1)) - 1;
  cert.row_case.assign(static_cast<std::size_t>(cert.t) + 2, RowCase::kZeroRow);

  for (std::int64_t i = 0; i < cert.t; ++i) {
    const IndexMeta meta = index_meta(static_cast<std::uint64_t>(i));
    const int ell = meta.nu.value;
    const std::int64_t lo = support_window(static_cast<std::uint64_t>(i)).lo;
    const std::int64_t half = std::int64_t{1} << k;
    const std::int64_t gap = cert.t - i;
    std::vector<Real> vec;

    if (i == half - 1) {
      // Midpoint row: damped left tail, then the normalized w profile.
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kCenter;
      vec.push_back((seq.mu(k) - 1) * silver_pow<Real>(-(k - 1)) / 2 - 1);
      for (const Real& s : sigma(seq, k)) vec.push_back((seq.mu(k) - 1) * s);
      vec.push_back(Real(0));
      const Real r = sqrt(seq.mu(k) - 1);
      for (const Real& x : w_vec(seq, k)) vec.push_back(x / r);
    } else if (i + 1 < half && ((i + 1) & i) == 0) {
      // Left anchor: i + 1 = 2^ell with ell < k.
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kLeftAnchor;
      if (ell >= 1) {
        vec.push_back((seq.mu(ell) - 1) * silver_pow<Real>(-(ell - 1)) / 2 - 1);
        for (const Real& s : sigma(seq, ell)) vec.push_back((seq.mu(ell) - 1) * s);
      }
      vec.push_back(Real(0));
      const Real c = (seq.mu(ell + 1) - 1) / (2 * silver_pow<Real>(2 * ell));
      for (const Real& x : seq.pi_vector(ell)) vec.push_back(c * x);
      vec.push_back(c);
    } else if (i > half - 1 && (gap & (gap - 1)) == 0) {
      // Right anchor: distance to the final row is 2^ell with ell < k.
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kRightAnchor;
      const Real cw = 1 / sqrt(seq.mu(ell) - 1) - 1 / sqrt(seq.mu(ell + 1) - 1);
      if (ell >= 1) {
        vec.push_back(silver_pow<Real>(ell - 1) / (seq.mu(ell + 1) - 1));
        const std::vector<Real> sg = sigma(seq, ell);
        const std::vector<Real> pv = seq.pi_vector(ell - 1);
        for (std::size_t m = 0; m < sg.size(); ++m)
          vec.push_back((silver_pow<Real>(2 * ell) * sg[m] - pv[m] / 2) / (seq.mu(ell + 1) - 1));
      }
      vec.push_back(Real(0));
      for (const Real& x : w_vec(seq, ell)) vec.push_back(cw * x);
    } else if (i + 1 < half) {
      // Left interior: the level-ell profile, scaled up the left cascade.
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kLeftInterior;
      const Real c = (seq.mu(meta.z + 1) - 1) / silver_pow<Real>(2 * (meta.z - meta.p) + 3);
      for (const Real& x : rho(seq, ell)) vec.push_back(c * x);
    } else {
      // Right interior: the mirrored profile, scaled down the right cascade.
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kRightInterior;
      const std::int64_t r = rev_index(k, i);
      const int zr = index_meta(static_cast<std::uint64_t>(r)).z;
      const Real c =
          silver_pow<Real>(2 * (meta.p + zr - k) - 1) / (seq.mu(zr + 1) - 1);
      for (const Real& x : rho(seq, ell)) vec.push_back(c * x);
    }
    detail::scatter_row(cert, i, lo, vec);
  }
  return cert;
}

// The same certificate assembled from the per-entry closed forms instead of
// the windowed profiles. The two constructions are redundant on purpose:
// agreement between them is a transcription self-test, exercised in the
// verification suite via certificate_max_mismatch.
template <class Real>
Certificate<Real> lambda_cert_entrywise(const Sequences<Real>& seq, int k) {
  if (k < 0) throw std::invalid_argument("lambda_cert_entrywise: negative stage");
  if (k == 0) return detail::certificate_stage_zero<Real>();
  using std::sqrt;
  Certificate<Real> cert;
  cert.k = k;
  cert.t = (std::int64_t{1} << (k + 1)) - 1;
  cert.row_case.assign(static_cast<std::size_t>(cert.t) + 2, RowCase::kZeroRow);

  const auto put = [&cert](std::int64_t i, std::int64_t j, const Real& v) {
    if (v != 0) cert.entries.insert_or_assign(std::pair{i, j}, v);
  };
  const auto beta_at = [&seq](std::int64_t j) -> const Real& {
    return seq.beta(index_meta(static_cast<std::uint64_t>(j)).nu.value);
  };

  for (std::int64_t i = 0; i < cert.t; ++i) {
    const IndexMeta meta = index_meta(static_cast<std::uint64_t>(i));
    const int ell = meta.nu.value;
    const std::int64_t half = std::int64_t{1} << k;
    const std::int64_t gap = cert.t - i;

    if (i == half - 1) {
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kCenter;
      const Real mk = seq.mu(k) - 1;
      put(i, (half >> 1) - 1, mk * silver_pow<Real>(-(k - 1)) / 2 - 1);
      for (int a = 0; a + 1 < k; ++a) {
        const Real c = mk * silver_pow<Real>(-2 * (a + 1)) / 2;
        put(i, i - (std::int64_t{1} << a), c * seq.beta(a + 2));
        for (std::int64_t j = i - (std::int64_t{1} << (a + 1)) + 1;
             j < i - (std::int64_t{1} << a); ++j)
          put(i, j, c * beta_at(j));
      }
      const Real rk = sqrt(mk);
      for (int a = 0; a < k; ++a) {
        const Real c = 1 / (rk * sqrt(seq.mu(a + 1) - 1));
        put(i, rev_index(k, (std::int64_t{1} << a) - 1), c * seq.beta(a + 1));
        for (std::int64_t j = rev_index(k, (std::int64_t{1} << (a + 1)) - 1) + 1;
             j < rev_index(k, (std::int64_t{1} << a) - 1); ++j)
          put(i, j, c * beta_at(j));
      }
      // Final column entry: the innermost block of the tail profile.
      put(i, cert.t, 1 / rk);
    } else if (i + 1 < half && ((i + 1) & i) == 0) {
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kLeftAnchor;
      const Real ml = seq.mu(ell) - 1;
      if (ell >= 1) put(i, (std::int64_t{1} << (ell - 1)) - 1,
                        ml * silver_pow<Real>(-(ell - 1)) / 2 - 1);
      for (int a = 0; a + 1 < ell; ++a) {
        const Real c = ml * silver_pow<Real>(-2 * (a + 1)) / 2;
        put(i, i - (std::int64_t{1} << a), c * seq.beta(a + 2));
        for (std::int64_t j = i - (std::int64_t{1} << (a + 1)) + 1;
             j < i - (std::int64_t{1} << a); ++j)
          put(i, j, c * beta_at(j));
      }
      const Real c = (seq.mu(ell + 1) - 1) / (2 * silver_pow<Real>(2 * ell));
      for (std::int64_t j = i + 1; j < i + (std::int64_t{1} << ell); ++j)
        put(i, j, c * beta_at(j));
      put(i, i + (std::int64_t{1} << ell), c);
    } else if (i > half - 1 && (gap & (gap - 1)) == 0) {
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kRightAnchor;
      const Real ml1 = seq.mu(ell + 1) - 1;
      const Real cw = 1 / sqrt(seq.mu(ell) - 1) - 1 / sqrt(ml1);
      if (ell >= 1) put(i, i - (std::int64_t{1} << (ell - 1)), silver_pow<Real>(ell - 1) / ml1);
      for (int a = 0; a + 1 < ell; ++a) {
        put(i, i - (std::int64_t{1} << a),
            (silver_pow<Real>(2 * (ell - a - 1)) * seq.beta(a + 2) - seq.beta(a)) / (2 * ml1));
        for (std::int64_t j = i - (std::int64_t{1} << (a + 1)) + 1;
             j < i - (std::int64_t{1} << a); ++j)
          put(i, j, (silver_pow<Real>(2 * (ell - a - 1)) - 1) * beta_at(j) / (2 * ml1));
      }
      for (int a = 0; a < ell; ++a) {
        const Real c = cw / sqrt(seq.mu(a + 1) - 1);
        put(i, rev_index(k, (std::int64_t{1} << a) - 1), c * seq.beta(a + 1));
        for (std::int64_t j = rev_index(k, (std::int64_t{1} << (a + 1)) - 1) + 1;
             j < rev_index(k, (std::int64_t{1} << a) - 1); ++j)
          put(i, j, c * beta_at(j));
      }
      // Final column entry: the innermost block of the tail profile.
      put(i, cert.t, cw);
    } else if (i + 1 < half) {
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kLeftInterior;
      const Real mz = seq.mu(meta.z + 1) - 1;
      const int zp = meta.z - meta.p;
      if (ell >= 1)
        put(i, i - (std::int64_t{1} << (ell - 1)), mz / silver_pow<Real>(2 * zp - ell + 5));
      for (int a = 0; a + 1 < ell; ++a) {
        put(i, i - (std::int64_t{1} << a),
            mz / silver_pow<Real>(2 * zp + 3) *
                (silver_pow<Real>(2 * (ell - a) - 3) * seq.beta(a + 2) / 2 -
                 seq.beta(a) / (2 * silver<Real>())));
        for (std::int64_t j = i - (std::int64_t{1} << (a + 1)) + 1;
             j < i - (std::int64_t{1} << a); ++j)
          put(i, j, mz / (2 * silver_pow<Real>(2 * zp + 4)) *
                        (silver_pow<Real>(2 * (ell - a) - 2) - 1) * beta_at(j));
      }
      for (std::int64_t j = i + 1; j < i + (std::int64_t{1} << ell); ++j)
        put(i, j, mz / silver_pow<Real>(2 * zp + 3) * beta_at(j));
      put(i, i + (std::int64_t{1} << ell), mz / silver_pow<Real>(2 * zp + 3));
    } else {
      cert.row_case[Certificate<Real>::slot(i)] = RowCase::kRightInterior;
      const std::int64_t r = rev_index(k, i);
      const int zr = index_meta(static_cast<std::uint64_t>(r)).z;
      const Real mz = seq.mu(zr + 1) - 1;
      const int e = meta.p + zr - k;
      if (ell >= 1)
        put(i, i - (std::int64_t{1} << (ell - 1)), silver_pow<Real>(2 * e - 3 + ell) / mz);
      for (int a = 0; a + 1 < ell; ++a) {
        put(i, i - (std::int64_t{1} << a),
            silver_pow<Real>(2 * e - 1) / (2 * mz) *
                (silver_pow<Real>(2 * (ell - a) - 3) * seq.beta(a + 2) -
                 seq.beta(a) / silver<Real>()));
        for (std::int64_t j = i - (std::int64_t{1} << (a + 1)) + 1;
             j < i - (std::int64_t{1} << a); ++j)
          put(i, j, silver_pow<Real>(2 * (e - 1)) / (2 * mz) *
                        (silver_pow<Real>(2 * (ell - a) - 2) - 1) * beta_at(j));
      }
      for (std::int64_t j = i + 1; j < i + (std::int64_t{1} << ell); ++j)
        put(i, j, silver_pow<Real>(2 * e - 1) / mz * beta_at(j));
      put(i, i + (std::int64_t{1} << ell), silver_pow<Real>(2 * e - 1) / mz);
    }
  }
  return cert;
}

// Largest entrywise deviation between two certificates, measured against
// 1 + |reference|. Entries present in only one of the two count as a
// deviation from zero, so sparsity mismatches are caught as well.
template <class Real>
Real certificate_max_mismatch(const Certificate<Real>& a, const Certificate<Real>& b) {
  using std::abs;
  std::set<std::pair<std::int64_t, std::int64_t>> keys;
  for (const auto& kv : a.entries) keys.insert(kv.first);
  for (const auto& kv : b.entries) keys.insert(kv.first);
  Real worst(0);
  for (const auto& [row, col] : keys) {
    const Real va = a.at(row, col);
    const Real vb = b.at(row, col);
    const Real d = abs(va - vb) / (1 + abs(vb));
    if (d > worst) worst = d;
  }
  return worst;
}

// Column support of the certificate, computed combinatorially (independent
// of any constructed matrix).
struct SupportSets {
  std::set<std::int64_t> below;  // rows i < j holding a nonzero in column j
  std::set<std::int64_t> above;  // rows i > j holding a nonzero in column j
};

inline SupportSets support_sets(int k, std::int64_t j) {
  if (k < 0) throw std::invalid_argument("support_sets: negative stage");
  const std::int64_t t = (std::int64_t{1} << (k + 1)) - 1;
  if (j < 0 || j > t) throw std::out_of_range("support_sets: column outside [0, t]");
  SupportSets s;
  // Rows below: a row i < j reaches column j exactly when i + 1 is a
  // suffix-truncation of j's binary expansion; equivalently i = (j with its
  // low r bits cleared) - 1 for some r.
  if (j >= 1) {
    const int zj = std::bit_width(static_cast<std::uint64_t>(j)) - 1;
    for (int r = 0; r <= zj; ++r) {
      const std::int64_t suffix = j & ~((std::int64_t{1} << r) - 1);
      s.below.insert(suffix - 1);
    }
  }
  // Rows above: row i reaches back to column j exactly when the gap i - j
  // fits inside half the row's window, i - j <= 2^{nu(i+1) - 1}. The final
  // row t is identically zero and never qualifies.
  for (std::int64_t i = j + 1; i <= t - 1; ++i) {
    if (i - j > (std::int64_t{1} << k)) break;
    const Valuation nu = nu_of(static_cast<std::uint64_t>(i) + 1);
    if (nu.value >= 1 && i - j <= (std::int64_t{1} << (nu.value - 1))) s.above.insert(i);
  }
  return s;
}

}  // namespace silverstep
