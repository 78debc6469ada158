#pragma once

#include <utility>

#include "dpe6/polynomial.hpp"

namespace dpe6 {

/// Ratio of polynomials in a probe variable, used to take exact limits of
/// chart expressions as the probe goes to 0. Stored with common polynomial
/// factors removed and a monic denominator; the orders of vanishing of the
/// numerator and denominator as originally written are kept for diagnostics.
class ProbeFraction {
 public:
  ProbeFraction() : num_(QuadExt(0)), den_(QuadExt(1)), raw_num_order_(-1), raw_den_order_(0) {}
  ProbeFraction(QuadExt c) : ProbeFraction(Poly(std::move(c)), Poly(QuadExt(1))) {}  // NOLINT
  ProbeFraction(int n) : ProbeFraction(QuadExt(n)) {}                                // NOLINT

  ProbeFraction(Poly num, Poly den) {
    if (den.is_zero())
      throw division_by_zero("ProbeFraction: denominator identically zero");
    raw_num_order_ = num.order();
    raw_den_order_ = den.order();
    if (num.is_zero()) {
      num_ = num;
      den_ = Poly(QuadExt(1));
      return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
    QuadExt lead_inv = den.leading().inverse();
    num_ = lead_inv * num;
    den_ = lead_inv * den;
  }

  static ProbeFraction variable() { return ProbeFraction(Poly::variable(), Poly(QuadExt(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int raw_num_order() const { return raw_num_order_; }
  int raw_den_order() const { return raw_den_order_; }
  bool is_zero() const { return num_.is_zero(); }

  ProbeFraction operator-() const {
    ProbeFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ProbeFraction operator+(const ProbeFraction& a, const ProbeFraction& b) {
    return ProbeFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ProbeFraction operator-(const ProbeFraction& a, const ProbeFraction& b) {
    return a + (-b);
  }
  friend ProbeFraction operator*(const ProbeFraction& a, const ProbeFraction& b) {
    return ProbeFraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ProbeFraction operator/(const ProbeFraction& a, const ProbeFraction& b) {
    if (b.is_zero()) throw division_by_zero("ProbeFraction: division by zero");
    return ProbeFraction(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const ProbeFraction& a, const ProbeFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  struct Limit {
    bool finite = false;
    QuadExt value;      // meaningful when finite
    int num_order = 0;  // orders of vanishing before cancellation
    int den_order = 0;
  };

  /// Exact limit as the probe variable goes to 0. The limit exists iff the
  /// numerator vanishes to at least the order of the denominator; otherwise
  /// the fraction has a pole and `finite` is false.
  Limit limit_at_zero() const {
    Limit lim;
    lim.num_order = raw_num_order_;
    lim.den_order = raw_den_order_;
    int dord = den_.order();  // 0 unless num == 0 cleared the gcd step
    if (num_.is_zero()) {
      lim.finite = true;
      lim.value = QuadExt(0);
      return lim;
    }
    int nord = num_.order();
    if (nord < dord) return lim;  // pole
    Poly n = num_.shifted_down(dord);
    Poly d = den_.shifted_down(dord);
    lim.finite = true;
    lim.value = n.coeff(0) / d.coeff(0);
    return lim;
  }

  /// Exact evaluation at a nonzero probe value.
  QuadExt eval(const QuadExt& eps) const {
    QuadExt d = den_.eval(eps);
    if (d.is_zero()) throw division_by_zero("ProbeFraction: evaluation at a zero of the denominator");
    return num_.eval(eps) / d;
  }

 private:
  Poly num_, den_;
  int raw_num_order_, raw_den_order_;
};

}  // namespace dpe6
