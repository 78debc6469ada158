#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <utility>

#include "dpe6/errors.hpp"

namespace dpe6 {

/// Arbitrary-size integer (GMP).
using Int = boost::multiprecision::mpz_int;

/// Exact rational, always in lowest terms with positive denominator (GMP).
using Rational = boost::multiprecision::mpq_rational;

/// Binary floating-point number with explicit precision (MPFR). Fresh values
/// pick up the precision installed by the innermost precision_guard.
using Real = boost::multiprecision::mpfr_float;

/// Smallest digits10 count whose mpfr translation is at least `bits` bits.
inline unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>((static_cast<unsigned long>(bits) * 30103UL) / 100000UL) + 3U;
}

/// Scoped default precision for Real. Every Real created inside the scope
/// carries at least `bits` bits; results of arithmetic inherit operand
/// precision, so a guard at the top of a computation pins the whole context.
class precision_guard {
 public:
  explicit precision_guard(unsigned bits)
      : saved_digits10_(Real::default_precision()) {
    Real::default_precision(digits10_for_bits(bits));
  }
  precision_guard(const precision_guard&) = delete;
  precision_guard& operator=(const precision_guard&) = delete;
  ~precision_guard() { Real::default_precision(saved_digits10_); }

 private:
  unsigned saved_digits10_;
};

/// 2^e as a Real at the current precision.
inline Real pow2(long e) { return ldexp(Real(1), e); }

/// Parses "p/q" or an integer string. Decimal or exponent forms are rejected
/// so exactness survives the CLI boundary.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw usage_error("empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw usage_error("bad rational literal: " + text);
  if (num_end == text.size()) return Rational(text);
  if (text[num_end] != '/') throw usage_error("bad rational literal (use p/q): " + text);
  std::size_t den_end = digits(num_end + 1);
  if (den_end != text.size() || den_end == num_end + 1)
    throw usage_error("bad rational literal (use p/q): " + text);
  Rational den(text.substr(num_end + 1));
  if (den == 0) throw usage_error("zero denominator: " + text);
  return Rational(text.substr(0, num_end)) / den;
}

inline std::string rational_str(const Rational& q) { return q.str(); }

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Real& x) { return x == 0; }

}  // namespace dpe6
