#pragma once

#include <span>

#include "ifc/piecewise.hpp"

namespace ifc {

// Least upper / greatest lower bound of a finite family of H-continuous
// functions: F(S(psi)) with psi the pointwise max of the upper components,
// F(I(phi)) with phi the pointwise min of the lower components.
PiecewiseIntervalFn sup_H(std::span<const PiecewiseIntervalFn> fs);
PiecewiseIntervalFn inf_H(std::span<const PiecewiseIntervalFn> fs);

// F(S(psi)) and F(I(phi)) for a caller-supplied point-valued envelope.
PiecewiseIntervalFn sup_from_pointwise(const PiecewiseIntervalFn& psi);
PiecewiseIntervalFn inf_from_pointwise(const PiecewiseIntervalFn& phi);

// [I(phi), S(psi)]. Throws PreconditionError unless both are point valued and phi <= psi.
PiecewiseIntervalFn interval_hull(const PiecewiseIntervalFn& phi, const PiecewiseIntervalFn& psi);

// G([min lowers, max uppers]) and G([max lowers, min uppers]) of D-continuous
// members. The meet throws PreconditionError when the members share no value
// at some point.
PiecewiseIntervalFn inclusion_join(std::span<const PiecewiseIntervalFn> fs);
PiecewiseIntervalFn inclusion_meet(std::span<const PiecewiseIntervalFn> fs);

struct MinorantOptions {
  // Stand-in for the target value when the lower component is +inf at x.
  double cap = 1e3;
};

/// A continuous point function g <= f with g(x) >= lower(f)(x) - eps:
/// min(target, lower(f), ramps lower(f)(b) + K|y - b| at every breakpoint b),
/// with K steep enough that the ramps stay above the target at x.
/// Throws PreconditionError if f is not H-continuous, its lower component
/// reaches -inf, x is outside the domain or eps <= 0.
PiecewiseIntervalFn continuous_minorant(const PiecewiseIntervalFn& f, double x, double eps,
                                        const MinorantOptions& options = {});

struct MinimalCompletionOptions {
  double eps = 1e-6;
  int samples = 64;
};

// For each floor m: sup_H{f, m} dominates f and is recovered from below by
// continuous minorants at the samples; the family, ordered by decreasing m,
// is nonincreasing at the samples and equals f where lower(f) > min(ms).
bool minimal_completion_check(const PiecewiseIntervalFn& f, std::span<const double> ms,
                              const MinimalCompletionOptions& options = {});

}  // namespace ifc
