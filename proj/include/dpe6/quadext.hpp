#pragma once

#include <string>
#include <utility>

#include "dpe6/errors.hpp"
#include "dpe6/numbers.hpp"

namespace dpe6 {

/// Element u + v*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// The representation is unique because sqrt(2) is irrational, so equality,
/// zero tests and inversion are exact. Arithmetic is closed; inversion uses
/// the conjugate, 1/(u + v*sqrt2) = (u - v*sqrt2)/(u^2 - 2 v^2).
class QuadExt {
 public:
  QuadExt() : u_(0), v_(0) {}
  QuadExt(int n) : u_(n), v_(0) {}             // NOLINT: implicit by design
  QuadExt(long n) : u_(n), v_(0) {}            // NOLINT
  QuadExt(Rational u) : u_(std::move(u)), v_(0) {}  // NOLINT
  QuadExt(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return u_; }
  const Rational& radical_part() const { return v_; }

  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_rational() const { return v_ == 0; }

  QuadExt operator-() const { return QuadExt(-u_, -v_); }

  QuadExt& operator+=(const QuadExt& o) {
    u_ += o.u_;
    v_ += o.v_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& o) {
    u_ -= o.u_;
    v_ -= o.v_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& o) {
    Rational u = u_ * o.u_ + 2 * v_ * o.v_;
    Rational v = u_ * o.v_ + v_ * o.u_;
    u_ = std::move(u);
    v_ = std::move(v);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  QuadExt inverse() const {
    if (is_zero()) throw division_by_zero("QuadExt: inverse of zero");
    Rational norm = u_ * u_ - 2 * v_ * v_;  // nonzero: sqrt2 is irrational
    return QuadExt(u_ / norm, -v_ / norm);
  }

  /// Rounds to a Real carrying at least `bits` bits; relative error is at
  /// most 2^(1-bits).
  Real to_real(unsigned bits) const {
    precision_guard guard(bits + 8);
    Real r = Real(u_) + Real(v_) * sqrt(Real(2));
    return r;
  }

  /// Value at the current ambient precision.
  Real to_real() const { return Real(u_) + Real(v_) * sqrt(Real(2)); }

  std::string str() const {
    if (v_ == 0) return u_.str();
    std::string radical = (v_ == 1)    ? "sqrt2"
                          : (v_ == -1) ? "-sqrt2"
                                       : "(" + v_.str() + ")*sqrt2";
    if (u_ == 0) return radical;
    return u_.str() + (radical[0] == '-' ? radical : "+" + radical);
  }

 private:
  Rational u_, v_;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

}  // namespace dpe6
