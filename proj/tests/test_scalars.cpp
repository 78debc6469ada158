#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpe6/numbers.hpp"
#include "dpe6/probe_fraction.hpp"
#include "dpe6/quadext.hpp"
#include "dpe6/rng.hpp"

using namespace dpe6;

namespace {

QuadExt qe(long un, long ud, long vn, long vd) {
  return QuadExt(Rational(un) / ud, Rational(vn) / vd);
}

Real abs_diff(const Real& a, const Real& b) { return abs(a - b); }

}  // namespace

TEST_CASE("rational backend keeps lowest terms and positive denominators") {
  // Note the two-argument constructor does not accept negative denominators;
  // all construction paths in this project go through division or parsing.
  Rational r = Rational(6) / -4;
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 2);
  CHECK(Rational(9) / 6 == Rational(3) / 2);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7/4") == Rational(-7, 4));
  CHECK(parse_rational("12") == 12);
  CHECK_THROWS_AS(parse_rational("0.5"), usage_error);
  CHECK_THROWS_AS(parse_rational("1e-3"), usage_error);
  CHECK_THROWS_AS(parse_rational("1/0"), usage_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), usage_error);
  CHECK_THROWS_AS(parse_rational(""), usage_error);
}

TEST_CASE("quadext arithmetic on the worked examples") {
  QuadExt s2 = QuadExt::sqrt2();

  // (1 + sqrt2)(1 - sqrt2) = -1
  CHECK((QuadExt(1) + s2) * (QuadExt(1) - s2) == QuadExt(-1));

  // 1/sqrt2 = (1/2) sqrt2
  CHECK(s2.inverse() == QuadExt(Rational(0), Rational(1, 2)));

  // (3 + 2 sqrt2) + (-3 + sqrt2) = 3 sqrt2
  CHECK(qe(3, 1, 2, 1) + qe(-3, 1, 1, 1) == QuadExt(Rational(0), Rational(3)));

  CHECK_THROWS_AS(QuadExt().inverse(), division_by_zero);
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), division_by_zero);
}

TEST_CASE("quadext field axioms on randomized triples") {
  Rng rng(20240915);
  for (int trial = 0; trial < 200; ++trial) {
    QuadExt a = rng.quadext(), b = rng.quadext(), c = rng.quadext();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == QuadExt(1));
      CHECK((b / a) * a == b);
    }
  }
}

TEST_CASE("to_real rounds correctly at the requested precision") {
  // Reference sqrt2 at well above the probed precisions.
  precision_guard guard(384);
  Real s2_ref = sqrt(Real(2));

  Real x = QuadExt::sqrt2().to_real(128);
  CHECK(abs_diff(x, s2_ref) <= pow2(1 - 128) * abs(x));
  CHECK(x > Real("1.41421356"));
  CHECK(x < Real("1.41421357"));

  CHECK(QuadExt(0).to_real(64) == 0);

  // 1 - sqrt2 against the high-precision oracle
  Real y = (QuadExt(1) - QuadExt::sqrt2()).to_real(256);
  CHECK(abs_diff(y, 1 - s2_ref) <= pow2(1 - 256) * abs(y));
  CHECK(y < Real("-0.41421356"));
  CHECK(y > Real("-0.41421357"));
}

TEST_CASE("to_real is a homomorphism up to 2^(4-P) relative error") {
  Rng rng(77);
  for (unsigned bits : {64U, 128U, 256U}) {
    precision_guard guard(bits + 16);
    for (int trial = 0; trial < 50; ++trial) {
      QuadExt a = rng.quadext(), b = rng.quadext();
      Real sum = (a + b).to_real(bits);
      Real sum2 = a.to_real(bits) + b.to_real(bits);
      if (sum != 0) CHECK(abs_diff(sum, sum2) <= pow2(4 - static_cast<long>(bits)) * abs(sum));
      Real prod = (a * b).to_real(bits);
      Real prod2 = a.to_real(bits) * b.to_real(bits);
      if (prod != 0) CHECK(abs_diff(prod, prod2) <= pow2(4 - static_cast<long>(bits)) * abs(prod));
    }
  }
}

TEST_CASE("polynomial division and gcd over Q(sqrt2)") {
  Poly x = Poly::variable();
  Poly a = (x - Poly(QuadExt(1))) * (x - Poly(QuadExt(2))) * (x - Poly(QuadExt(2)));
  Poly b = (x - Poly(QuadExt(2))) * (x - Poly(QuadExt(3)));
  Poly g = Poly::gcd(a, b);
  CHECK(g == x - Poly(QuadExt(2)));

  auto [q, r] = Poly::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
}

TEST_CASE("probe limits on the worked examples") {
  ProbeFraction eps = ProbeFraction::variable();

  // (eps^2 + eps)/eps -> 1
  auto lim = ((eps * eps + eps) / eps).limit_at_zero();
  CHECK(lim.finite);
  CHECK(lim.value == QuadExt(1));

  // 1/eps -> pole
  auto pole = (ProbeFraction(1) / eps).limit_at_zero();
  CHECK_FALSE(pole.finite);

  // (eps (2 + sqrt2)) / (2 eps) -> 1 + (1/2) sqrt2
  QuadExt c(Rational(2), Rational(1));
  auto lim2 = ((eps * ProbeFraction(c)) / (eps * ProbeFraction(2))).limit_at_zero();
  CHECK(lim2.finite);
  CHECK(lim2.value == QuadExt(Rational(1), Rational(1, 2)));
}

TEST_CASE("probe limit diagnostics report orders of vanishing") {
  Poly x = Poly::variable();
  // eps^3 / eps^2: both vanish, orders (3, 2); limit 0.
  ProbeFraction f(x * x * x, x * x);
  auto lim = f.limit_at_zero();
  CHECK(lim.finite);
  CHECK(lim.value == QuadExt(0));
  CHECK(lim.num_order == 3);
  CHECK(lim.den_order == 2);

  ProbeFraction g(x * x, x * x * x);
  auto pole = g.limit_at_zero();
  CHECK_FALSE(pole.finite);
  CHECK(pole.num_order == 2);
  CHECK(pole.den_order == 3);

  CHECK_THROWS_AS(ProbeFraction(Poly(QuadExt(1)), Poly()), division_by_zero);
}

TEST_CASE("probe fraction arithmetic matches pointwise evaluation") {
  Rng rng(5);
  ProbeFraction eps = ProbeFraction::variable();
  ProbeFraction f = (eps * eps + ProbeFraction(3)) / (eps + ProbeFraction(1));
  ProbeFraction g = (eps - ProbeFraction(2)) / (eps * eps + ProbeFraction(7));
  ProbeFraction sum = f + g, prod = f * g, quot = f / g;
  for (int trial = 0; trial < 25; ++trial) {
    QuadExt t = rng.quadext(20, 20);
    if (t.is_zero()) continue;
    CHECK(sum.eval(t) == f.eval(t) + g.eval(t));
    CHECK(prod.eval(t) == f.eval(t) * g.eval(t));
    CHECK(quot.eval(t) == f.eval(t) / g.eval(t));
  }
}
