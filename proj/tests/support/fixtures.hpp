#pragma once

#include <vector>

#include "ifc/cnd.hpp"
#include "ifc/piecewise.hpp"

namespace ifc::fixtures {

inline PieceExpr c(ExtReal v) { return PieceExpr::constant(v); }
inline Piece point(const PieceExpr& e) { return {e, e}; }
inline Piece band(ExtReal lo, ExtReal hi) { return {c(lo), c(hi)}; }

inline const Domain kWindow{-2.5, 2.5};

// Zero on the negative axis, [0, 1] on the positive axis, [-1, 1] at the integers.
inline PiecewiseIntervalFn extfsi() {
  const ExtInterval m(-1.0, 1.0);
  return PiecewiseIntervalFn(kWindow, {-2, -1, 0, 1, 2},
                             {band(0, 0), band(0, 0), band(0, 0), band(0, 1), band(0, 1), band(0, 1)},
                             {m, m, m, m, m});
}

inline PiecewiseIntervalFn extfsi_G() {
  return PiecewiseIntervalFn(kWindow, {0}, {band(0, 0), band(0, 1)}, {ExtInterval(0.0, 1.0)});
}

inline PiecewiseIntervalFn extfsi_FSI() { return PiecewiseIntervalFn::constant(kWindow, ExtReal(0.0)); }

inline PiecewiseIntervalFn extfsi_FIS() {
  return PiecewiseIntervalFn(kWindow, {0}, {band(0, 0), band(1, 1)}, {ExtInterval(0.0, 1.0)});
}

// lo for x < a, [lo, hi] at a, hi for x > a.
inline PiecewiseIntervalFn step(const Domain& d, double a, double lo, double hi) {
  return PiecewiseIntervalFn(d, {a}, {band(lo, lo), band(hi, hi)}, {ExtInterval(std::min(lo, hi), std::max(lo, hi))});
}

// 1 - |x| / delta inside (-delta, delta), 0 elsewhere.
inline PiecewiseIntervalFn hat(const Domain& d, double delta) {
  const auto up = PieceExpr::affine(1.0 / delta, 1.0);
  const auto down = PieceExpr::affine(-1.0 / delta, 1.0);
  return PiecewiseIntervalFn(d, {-delta, 0.0, delta}, {band(0, 0), point(up), point(down), band(0, 0)},
                             {ExtInterval(0.0), ExtInterval(1.0), ExtInterval(0.0)});
}

// Pointwise infimum of the hats: 1 at 0, 0 elsewhere.
inline PiecewiseIntervalFn hat_infimum(const Domain& d) {
  return PiecewiseIntervalFn(d, {0.0}, {band(0, 0), band(0, 0)}, {ExtInterval(1.0)});
}

inline const Domain kFnWindow{-2.0, 2.0};

// Pointwise supremum of x^(-2n-1), n >= 0, on (-2, 2).
inline PiecewiseIntervalFn fn_family_supremum() {
  const auto inv = PieceExpr::power(-1);
  const ExtReal inf = ExtReal::pos_inf();
  return PiecewiseIntervalFn(kFnWindow, {-1.0, 0.0, 1.0}, {band(0, 0), point(inv), band(inf, inf), point(inv)},
                             {ExtInterval(-1.0), ExtInterval(inf), ExtInterval(1.0)});
}

// The member x^(-2n-1) completed at 0 by [-inf, inf].
inline PiecewiseIntervalFn fn_family_member(int n, const Domain& d = kFnWindow) {
  const auto e = PieceExpr::power(-2 * n - 1);
  return PiecewiseIntervalFn(d, {0.0}, {point(e), point(e)}, {ExtInterval(ExtReal::neg_inf(), ExtReal::pos_inf())});
}

// The sup expected from the displayed table.
inline PiecewiseIntervalFn fn_family_sup_expected() {
  const auto inv = PieceExpr::power(-1);
  const ExtReal inf = ExtReal::pos_inf();
  return PiecewiseIntervalFn(kFnWindow, {-1.0, 0.0, 1.0}, {band(0, 0), point(inv), band(inf, inf), point(inv)},
                             {ExtInterval(-1.0, 0.0), ExtInterval(ExtReal::neg_inf(), inf), ExtInterval(1.0, inf)});
}

// Envelopes of the family that is 0 for x < 0 and (1 - e^{-lx}) / (1 + e^{-lx}) for x >= 0, l > 0:
// the pointwise inf is 0, the pointwise sup is 0 for x <= 0 and 1 for x > 0.
inline PiecewiseIntervalFn hull_phi() { return PiecewiseIntervalFn::constant(Domain::real_line(), ExtReal(0.0)); }
inline PiecewiseIntervalFn hull_psi() {
  return PiecewiseIntervalFn(Domain::real_line(), {0.0}, {band(0, 0), band(1, 1)}, {ExtInterval(0.0)});
}
inline PiecewiseIntervalFn hull_expected() {
  return PiecewiseIntervalFn(Domain::real_line(), {0.0}, {band(0, 0), band(0, 1)}, {ExtInterval(0.0, 1.0)});
}

inline CndFunction cnd_step(const Domain& d = {-2.0, 2.0}) { return CndFunction(d, {0.0}, {c(-1.0), c(1.0)}); }
inline CndFunction cnd_reciprocal() {
  return CndFunction({-1.0, 1.0}, {0.0}, {PieceExpr::power(-1), PieceExpr::power(-1)});
}

}  // namespace ifc::fixtures
