// Extended-precision arithmetic layer: software binary floating point with a
// compile-time menu of mantissa widths, runtime-dispatchable, plus the shared
// numeric helpers (silver-ratio constants, integer powers, decimal I/O).
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace silverstep {

template <unsigned Bits>
using BigFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using Real64 = BigFloat<64>;
using Real128 = BigFloat<128>;
using Real192 = BigFloat<192>;
using Real256 = BigFloat<256>;
using Real384 = BigFloat<384>;
using Real512 = BigFloat<512>;

inline constexpr unsigned kPrecisionMenu[] = {64, 128, 192, 256, 384, 512};

// Default mantissa width: 128 bits suffices through stage k = 8; deeper
// stages span wider dynamic ranges and get 256 bits.
inline unsigned default_precision_bits(int k) { return k <= 8 ? 128u : 256u; }

// Invokes fn with a value of the menu type whose width is >= requested bits.
template <class Fn>
decltype(auto) with_precision(unsigned bits, Fn&& fn) {
  if (bits <= 64) return fn(Real64{});
  if (bits <= 128) return fn(Real128{});
  if (bits <= 192) return fn(Real192{});
  if (bits <= 256) return fn(Real256{});
  if (bits <= 384) return fn(Real384{});
  if (bits <= 512) return fn(Real512{});
  throw std::invalid_argument("precision above 512 bits is not in the menu");
}

template <class Real>
inline const Real& sqrt2() {
  static const Real v = sqrt(Real(2));
  return v;
}

// The silver ratio 1 + sqrt(2): base of every growth rate in the schedule.
template <class Real>
inline const Real& silver() {
  static const Real v = 1 + sqrt2<Real>();
  return v;
}

template <class Real>
Real pow_int(const Real& base, long long e) {
  if (e < 0) return Real(1) / pow_int(base, -e);
  Real acc(1), b = base;
  for (unsigned long long n = static_cast<unsigned long long>(e); n != 0; n >>= 1) {
    if (n & 1) acc *= b;
    b *= b;
  }
  return acc;
}

template <class Real>
Real silver_pow(long long e) {
  return pow_int(silver<Real>(), e);
}

// Full-precision decimal serialization; parse(format(x)) == x bit-exactly.
template <class Real>
std::string format_decimal(const Real& x) {
  std::ostringstream os;
  os.precision(std::numeric_limits<Real>::max_digits10);
  os << x;
  return os.str();
}

template <class Real>
Real parse_decimal(const std::string& s) {
  return Real(s);
}

template <class Real>
Real rel_diff(const Real& got, const Real& want) {
  using std::abs;
  Real denom = abs(want);
  if (denom == 0) return abs(got);
  return abs(got - want) / denom;
}

}  // namespace silverstep
