#pragma once

#include "ifc/dense.hpp"
#include "ifc/piecewise.hpp"

namespace ifc {

/// Lower Baire operator I(D, Omega, f): at x, the smaller of the two one-sided
/// limits of the lower component and, when x lies in D, its value. The result
/// is point valued, lower semicontinuous and normalized; its breakpoints are
/// among those of f and the excluded points of D.
PiecewiseIntervalFn lower_baire(const PiecewiseIntervalFn& f, const CofiniteDense& d);
PiecewiseIntervalFn lower_baire(const PiecewiseIntervalFn& f);

// Upper Baire operator S(D, Omega, f): the mirror image with max and the upper component.
PiecewiseIntervalFn upper_baire(const PiecewiseIntervalFn& f, const CofiniteDense& d);
PiecewiseIntervalFn upper_baire(const PiecewiseIntervalFn& f);

// F(D, Omega, f) = [I(D, Omega, f), S(D, Omega, f)].
PiecewiseIntervalFn graph_completion(const PiecewiseIntervalFn& f, const CofiniteDense& d);
PiecewiseIntervalFn graph_completion(const PiecewiseIntervalFn& f);

// G(f) = [I(S(I(f))), S(I(S(f)))].
PiecewiseIntervalFn normalize_G(const PiecewiseIntervalFn& f);

// F(S(I(f))) and F(I(S(f))).
PiecewiseIntervalFn hcont_lower_completion(const PiecewiseIntervalFn& f);
PiecewiseIntervalFn hcont_upper_completion(const PiecewiseIntervalFn& f);

// Largest lsc minorant / smallest usc majorant of the lower / upper component.
PiecewiseIntervalFn lsc_envelope(const PiecewiseIntervalFn& f);
PiecewiseIntervalFn usc_envelope(const PiecewiseIntervalFn& f);

// I(phi) = phi and I(S(phi)) = phi (resp. S(phi) = phi and S(I(phi)) = phi).
// Throw PreconditionError unless phi is point valued.
bool is_normal_lsc(const PiecewiseIntervalFn& phi);
bool is_normal_usc(const PiecewiseIntervalFn& phi);

}  // namespace ifc
