// Combinatorial index statistics driving the fractal pattern and certificate
// structure: 2-adic valuation, binary popcount/log, and the index reflection
// that maps a pattern's left half onto its right half.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace silverstep {

// 2-adic valuation with an explicit infinite sentinel for input 0 (the
// convention used by the pattern vectors; an infinite valuation never
// indexes anything).
struct Valuation {
  bool infinite = false;
  int value = 0;  // meaningful only when !infinite

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline Valuation nu_of(std::uint64_t n) {
  if (n == 0) return {.infinite = true, .value = 0};
  return {.infinite = false, .value = std::countr_zero(n)};
}

struct IndexMeta {
  Valuation nu;  // nu(i + 1)
  int p = 0;     // number of ones in the binary expansion of i + 1
  int z = 0;     // floor(log2(i + 1))
};

inline IndexMeta index_meta(std::uint64_t i) {
  const std::uint64_t n = i + 1;
  return {.nu = nu_of(n),
          .p = std::popcount(n),
          .z = static_cast<int>(std::bit_width(n)) - 1};
}

// Reflection rev(t) = 2^{k+1} - 2 - t for stage k.
inline std::int64_t rev_index(int k, std::int64_t t) {
  return (std::int64_t{1} << (k + 1)) - 2 - t;
}

// Support window of certificate row i: [i - floor(2^{l-1}), i + 2^l] minus
// the diagonal, where l = nu(i+1). Row index must not be the final row.
struct SupportWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

inline SupportWindow support_window(std::uint64_t i) {
  const Valuation l = nu_of(i + 1);
  if (l.infinite) throw std::logic_error("support window of an impossible row");
  const std::int64_t left = l.value >= 1 ? (std::int64_t{1} << (l.value - 1)) : 0;
  return {.lo = static_cast<std::int64_t>(i) - left,
          .hi = static_cast<std::int64_t>(i) + (std::int64_t{1} << l.value)};
}

}  // namespace silverstep
