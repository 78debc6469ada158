#pragma once

#include <array>
#include <string>

#include "dpe6/numbers.hpp"
#include "dpe6/quadext.hpp"
#include "dpe6/words.hpp"

namespace dpe6 {

/// sqrt(2) in the scalar field of the computation.
template <class S>
S sqrt2();
template <>
inline QuadExt sqrt2<QuadExt>() { return QuadExt::sqrt2(); }
template <>
inline Real sqrt2<Real>() { return sqrt(Real(2)); }

/// Scalars for which equality is exact (relations are asserted pointwise).
template <class S>
inline constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<QuadExt> = true;
template <>
inline constexpr bool is_exact_scalar<Rational> = true;

/// Point configuration (a_0, a_1, a_2; t; q, p) acted on by the extended
/// affine Weyl group. Exact mode uses QuadExt scalars, numeric mode Real.
template <class S>
struct PointConfig {
  S a0, a1, a2, t, q, p;

  std::array<S, 3> roots() const { return {a0, a1, a2}; }
  S root_sum() const { return a0 + a1 + a2; }
};

template <class S>
bool operator==(const PointConfig<S>& x, const PointConfig<S>& y) {
  return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2 && x.t == y.t && x.q == y.q && x.p == y.p;
}

/// The birational action of a single generator. Denominators that vanish on
/// the exceptional locus raise singular_point, except that a zero root
/// variable makes the corresponding shift vanish identically.
template <class S>
PointConfig<S> apply_generator(WeylGen g, const PointConfig<S>& c) {
  switch (g) {
    case WeylGen::w0: {
      if (is_zero(c.a0)) return {-c.a0, c.a1 + c.a0, c.a2 + c.a0, c.t, c.q, c.p};
      S den = c.q - c.p + c.t;
      if (is_zero(den)) throw singular_point("w0", "q - p + t = 0");
      S shift = c.a0 / den;
      return {-c.a0, c.a1 + c.a0, c.a2 + c.a0, c.t, c.q - shift, c.p - shift};
    }
    case WeylGen::w1: {
      if (is_zero(c.a1)) return {c.a0 + c.a1, -c.a1, c.a2 + c.a1, c.t, c.q, c.p};
      if (is_zero(c.q)) throw singular_point("w1", "q = 0");
      return {c.a0 + c.a1, -c.a1, c.a2 + c.a1, c.t, c.q, c.p - c.a1 / c.q};
    }
    case WeylGen::w2: {
      if (is_zero(c.a2)) return {c.a0 + c.a2, c.a1 + c.a2, -c.a2, c.t, c.q, c.p};
      if (is_zero(c.p)) throw singular_point("w2", "p = 0");
      return {c.a0 + c.a2, c.a1 + c.a2, -c.a2, c.t, c.q + c.a2 / c.p, c.p};
    }
    case WeylGen::sigma1:
      return {-c.a0, -c.a2, -c.a1, c.t, -c.p, -c.q};
    case WeylGen::sigma2:
      return {-c.a2, -c.a1, -c.a0, c.t, c.q, c.q - c.p + c.t};
  }
  throw std::logic_error("unreachable");
}

/// Sequential application in the kWordOrder convention; an exceptional-locus
/// hit reports the failing generator's position in the word.
template <class S>
PointConfig<S> apply_word(const Word& word, PointConfig<S> c) {
  auto step = [&](std::size_t idx) {
    try {
      c = apply_generator(word[idx], c);
    } catch (const singular_point& e) {
      throw singular_point("word position " + std::to_string(idx) + " (" +
                               gen_name(word[idx]) + ")",
                           e.detail());
    }
  };
  if (kWordOrder == WordOrder::right_to_left) {
    for (std::size_t i = word.size(); i-- > 0;) step(i);
  } else {
    for (std::size_t i = 0; i < word.size(); ++i) step(i);
  }
  return c;
}

/// One step of the reference discrete dynamics:
///   qbar + q = p - t - a2/p,   pbar + p = qbar + t + (a1 - 1)/qbar,
/// with root update (a0, a1 - 1, a2 + 1). Requires the entry normalization
/// a0 + a1 + a2 = 1 (checked exactly in exact mode only).
template <class S>
PointConfig<S> phi_step(const PointConfig<S>& c) {
  if constexpr (is_exact_scalar<S>) {
    if (!is_zero(c.root_sum() - S(1)))
      throw usage_error("phi_step: root variables must be normalized to sum 1");
  }
  if (is_zero(c.p)) throw singular_point("phi_step", "p = 0");
  S qbar = c.p - c.t - c.a2 / c.p - c.q;
  if (is_zero(qbar)) throw singular_point("phi_step", "qbar = 0");
  S pbar = qbar + c.t + (c.a1 - S(1)) / qbar - c.p;
  return {c.a0, c.a1 - S(1), c.a2 + S(1), c.t, qbar, pbar};
}

/// Residuals of the relabeled system across one step of phi:
/// with f = -q, g = p, b0 = a2, b2 = a1,
///   f + fbar - (t - g + b0/g)  and  g + gbar - (t - fbar - (b2 - 1)/fbar).
template <class S>
std::array<S, 2> sk7_residuals(const PointConfig<S>& c) {
  PointConfig<S> next = phi_step(c);
  S f = -c.q, g = c.p, b0 = c.a2, b2 = c.a1;
  S fbar = -next.q, gbar = next.p;
  if (is_zero(g)) throw singular_point("sk7", "g = 0");
  if (is_zero(fbar)) throw singular_point("sk7", "fbar = 0");
  S r1 = f + fbar - (c.t - g + b0 / g);
  S r2 = g + gbar - (c.t - fbar - (b2 - S(1)) / fbar);
  return {r1, r2};
}

}  // namespace dpe6
