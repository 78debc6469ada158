#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dpe6/quadext.hpp"

namespace dpe6 {

/// Dense univariate polynomial in a probe variable, with QuadExt
/// coefficients. Trailing zero coefficients are always trimmed, so
/// degree() and order() are well defined.
class Poly {
 public:
  Poly() = default;
  Poly(QuadExt c) : c_{std::move(c)} { trim(); }  // NOLINT: implicit by design
  Poly(int n) : Poly(QuadExt(n)) {}               // NOLINT
  explicit Poly(std::vector<QuadExt> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<QuadExt> coeffs) : c_(coeffs) { trim(); }

  /// The probe variable itself.
  static Poly variable() { return Poly({QuadExt(0), QuadExt(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  /// Order of vanishing at 0: the lowest index with a nonzero coefficient.
  /// Returns -1 for the zero polynomial.
  int order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return static_cast<int>(k);
    return -1;
  }

  const QuadExt& coeff(std::size_t k) const {
    static const QuadExt zero;
    return k < c_.size() ? c_[k] : zero;
  }
  const QuadExt& leading() const { return c_.back(); }

  QuadExt eval(const QuadExt& x) const {
    QuadExt acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<QuadExt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<QuadExt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const QuadExt& s, const Poly& p) { return Poly(s) * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division over the field Q(sqrt2); b must be nonzero.
  static std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw division_by_zero("Poly: division by zero polynomial");
    std::vector<QuadExt> q;
    if (a.degree() >= b.degree()) q.resize(a.c_.size() - b.c_.size() + 1);
    QuadExt lead_inv = b.leading().inverse();
    while (!a.is_zero() && a.degree() >= b.degree()) {
      int shift = a.degree() - b.degree();
      QuadExt factor = a.leading() * lead_inv;
      q[shift] = factor;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        a.c_[j + shift] -= factor * b.c_[j];
      a.trim();
    }
    return {Poly(std::move(q)), std::move(a)};
  }

  /// Monic gcd via the Euclidean algorithm.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inverse() * a;
  }

  /// Quotient by the probe variable to the k-th power; requires order() >= k.
  Poly shifted_down(int k) const {
    std::vector<QuadExt> c(c_.begin() + k, c_.end());
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<QuadExt> c_;
};

}  // namespace dpe6
