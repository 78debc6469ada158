#pragma once

#include "dpe6/point_config.hpp"

namespace dpe6 {

/// Applied-side state (lambda, s, n; x, y) for the composed recurrence
/// mapping. n is an integer step count in applications but may be any
/// scalar in exact identity tests, where the identities are rational in n.
template <class S>
struct XYState {
  S lambda, s, n, x, y;
};

template <class S>
bool operator==(const XYState<S>& a, const XYState<S>& b) {
  return a.lambda == b.lambda && a.s == b.s && a.n == b.n && a.x == b.x && a.y == b.y;
}

/// The composed forward mapping
///   xbar = (n - y) / (2 x y (y + lambda)),
///   ybar = -(y + lambda)(n^2 - n(2 + s x) y + (1 + s x - 2 lambda x^2) y^2
///          - 2 x^2 y^3) / (y - n)^2,
/// with parameter step n -> n + 1.
template <class S>
XYState<S> psi_forward(const XYState<S>& st) {
  if (is_zero(st.x)) throw singular_point("psi_forward", "x = 0");
  if (is_zero(st.y)) throw singular_point("psi_forward", "y = 0");
  if (is_zero(st.y + st.lambda)) throw singular_point("psi_forward", "y = -lambda");
  if (is_zero(st.y - st.n)) throw singular_point("psi_forward", "y = n");
  const S &x = st.x, &y = st.y, &n = st.n, &s = st.s, &lam = st.lambda;
  S xbar = (n - y) / (S(2) * x * y * (y + lam));
  S big = n * n - n * (S(2) + s * x) * y + (S(1) + s * x - S(2) * lam * x * x) * y * y -
          S(2) * x * x * y * y * y;
  S ybar = -(y + lam) * big / ((y - n) * (y - n));
  return {st.lambda, st.s, st.n + S(1), xbar, ybar};
}

/// Change of variables onto the reference coordinates:
///   q = -sqrt2 x y,  p = (n - y)/(sqrt2 x y),  t = s/sqrt2,
/// with root variables (a0, a1, a2) = (1 - lambda, -n, n + lambda); these sum
/// to 1 by construction.
template <class S>
PointConfig<S> xy_to_qp(const XYState<S>& st) {
  if (is_zero(st.x) || is_zero(st.y)) throw singular_point("xy_to_qp", "x y = 0");
  S r2 = sqrt2<S>();
  S q = -r2 * st.x * st.y;
  S p = (st.n - st.y) / (r2 * st.x * st.y);
  return {S(1) - st.lambda, -st.n, st.n + st.lambda, st.s / r2, q, p};
}

/// Inverse change of variables:
///   x = q/(sqrt2 (a1 - q p)),  y = q p - a1,  s = sqrt2 t,  n = -a1.
template <class S>
XYState<S> qp_to_xy(const PointConfig<S>& c, const S& lambda) {
  S r2 = sqrt2<S>();
  S y = c.q * c.p - c.a1;
  if (is_zero(y)) throw singular_point("qp_to_xy", "a1 = q p");
  S x = c.q / (r2 * (c.a1 - c.q * c.p));
  return {lambda, r2 * c.t, -c.a1, x, y};
}

/// Outcome of the coordinate-change equivalence check at one state: the
/// direct step and the conjugated reference step, which must agree exactly.
template <class S>
struct Theorem1Outcome {
  XYState<S> direct;
  XYState<S> conjugated;
  bool equal;
};

/// Verifies psi_forward(st) = qp_to_xy(phi_step(xy_to_qp(st)), lambda),
/// including the n-increment matching a1 -> a1 - 1. Singular loci propagate
/// as singular_point.
template <class S>
Theorem1Outcome<S> theorem1_check(const XYState<S>& st) {
  Theorem1Outcome<S> out{psi_forward(st), qp_to_xy(phi_step(xy_to_qp(st)), st.lambda), false};
  out.equal = out.direct == out.conjugated;
  return out;
}

}  // namespace dpe6
