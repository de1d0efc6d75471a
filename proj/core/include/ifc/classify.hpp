#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ifc/dense.hpp"
#include "ifc/piecewise.hpp"

namespace ifc {

struct Witness {
  double point = 0.0;
  std::string identity;  // the identity that fails at `point`
};

struct ContinuityReport {
  bool isS = false;
  bool isD = false;
  bool isH = false;
  bool isContinuousInterval = false;
  // True when piece degeneracy had to be decided by sampling.
  bool approximate = false;
  std::vector<Witness> witnesses;
};

ContinuityReport continuity_report(const PiecewiseIntervalFn& f);

// F(f) = f.
bool is_S_continuous(const PiecewiseIntervalFn& f);
// G(f) = f.
bool is_D_continuous(const PiecewiseIntervalFn& f);
// D-continuous with degenerate values on every open piece.
bool is_H_continuous(const PiecewiseIntervalFn& f);

using OpenPiece = std::pair<ExtReal, ExtReal>;

// W_f = {x : w(f(x)) > 0} as breakpoints plus whole open pieces of the normalized function.
struct ProperValueSet {
  std::vector<double> points;
  std::vector<OpenPiece> pieces;
  bool approximate = false;
  bool empty() const noexcept { return points.empty() && pieces.empty(); }
};

ProperValueSet proper_value_set(const PiecewiseIntervalFn& f);

// The domain minus every point where some member has a proper value.
// Throws PreconditionError for an empty family, a member that is not
// H-continuous, or mismatched domains.
CofiniteDense common_point_set(std::span<const PiecewiseIntervalFn> fs);

struct PointContinuity {
  bool lowerContinuousAtA = false;
  bool upperContinuousAtA = false;
  bool degenerateAtA = false;
};

// Throws PreconditionError unless f is H-continuous and a lies in its domain.
PointContinuity point_continuity_report(const PiecewiseIntervalFn& f, double a);

// Gamma_nf(f): points and pieces where +inf or -inf belongs to f(x).
struct FinitenessReport {
  bool isFinite = false;
  bool isNearlyFinite = false;
  bool isBounded = false;
  std::vector<double> gammaPoints;
  std::vector<OpenPiece> gammaPieces;
};

FinitenessReport finiteness(const PiecewiseIntervalFn& f);

struct SelectionResult {
  bool exists = false;
  // Polyline samples (x, phi(x)) of a continuous selection, breakpoints included.
  std::vector<std::pair<double, ExtReal>> witness;
};

/// Decides whether some continuous phi has phi(x) in f(x) for every x.
///
/// Every open piece is a connected tube between continuous components, so
/// the constraints localize at breakpoints: a selection exists iff at each
/// breakpoint the left limit interval, the value and the right limit
/// interval share a point. Throws PreconditionError unless f is D-continuous.
SelectionResult has_continuous_selection(const PiecewiseIntervalFn& f, int samples_per_piece = 16);

}  // namespace ifc
