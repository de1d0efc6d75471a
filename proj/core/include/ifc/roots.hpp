#pragma once

#include <cmath>
#include <vector>

#include "ifc/expr.hpp"

namespace ifc {

// Relative distance under which two crossings are the same point.
inline constexpr double kRootTolerance = 1e-12;

struct Crossing {
  double x = 0.0;
  bool exact = false;  // closed form rather than bisection
};

/// Points of (l, r) where a - b changes sign, sorted ascending.
///
/// Affine/constant pairs and constant-vs-power/sigmoid pairs are solved in
/// closed form. Everything else is bracketed on a dense sample of the piece
/// (compactified when unbounded) and bisected to kRootTolerance. Tangential
/// touches without a sign change are not reported.
std::vector<Crossing> crossings(const PieceExpr& a, const PieceExpr& b, ExtReal l, ExtReal r);

// A representative interior point of (l, r); finite for every nonempty piece.
double interior_point(ExtReal l, ExtReal r);

// n roughly uniform interior points of (l, r) plus points clustered toward the
// ends; unbounded pieces are sampled through a compactifying map.
std::vector<double> interior_samples(ExtReal l, ExtReal r, int n);

// Bisection on a bracket where sign(f(lo)) != sign(f(hi)). With tol = 0 it
// runs until the bracket holds adjacent doubles, so steep crossings stay exact.
template <class F>
double bisect(F&& f, double lo, double hi, double tol = 0.0) {
  double flo = f(lo);
  for (int it = 0; it < 2200 && hi - lo > tol * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

}  // namespace ifc
