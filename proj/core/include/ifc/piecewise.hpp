#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ifc/expr.hpp"
#include "ifc/extreal.hpp"

namespace ifc {

// Tolerance for sampled comparisons and for the lower <= upper check.
inline constexpr double kEqualityTolerance = 1e-9;

/// The open interval (left, right) of the real line; either end may be infinite.
struct Domain {
  ExtReal left;
  ExtReal right;

  Domain(ExtReal l, ExtReal r);
  static Domain real_line() { return {ExtReal::neg_inf(), ExtReal::pos_inf()}; }

  bool contains(double x) const noexcept { return left < ExtReal(x) && ExtReal(x) < right; }
  friend bool operator==(const Domain&, const Domain&) = default;
};

enum class Component { lower, upper };

struct Piece {
  PieceExpr lower;
  PieceExpr upper;

  const PieceExpr& operator[](Component c) const noexcept { return c == Component::lower ? lower : upper; }
  bool degenerate() const noexcept { return lower == upper; }
  friend bool operator==(const Piece&, const Piece&) = default;
};

struct ValidationOptions {
  int interior_samples = 32;
  double tolerance = kEqualityTolerance;
};

/// An interval-valued function on an open interval: finitely many finite
/// breakpoints, a (lower, upper) expression pair on each open piece between
/// them, and an explicit interval value at every breakpoint.
///
/// Piece i is (left end, breakpoints[0]) for i == 0, (breakpoints[i-1],
/// breakpoints[i]) in the middle and (breakpoints.back(), right end) last.
/// Instances are immutable and validated on construction.
class PiecewiseIntervalFn {
 public:
  PiecewiseIntervalFn(Domain domain, std::vector<double> breakpoints, std::vector<Piece> pieces,
                      std::vector<ExtInterval> values, const ValidationOptions& options = {});

  static PiecewiseIntervalFn constant(Domain domain, ExtInterval value);
  static PiecewiseIntervalFn point(Domain domain, const PieceExpr& expr);

  const Domain& domain() const noexcept { return domain_; }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const Piece> pieces() const noexcept { return pieces_; }
  std::span<const ExtInterval> values() const noexcept { return values_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }

  ExtReal piece_left(std::size_t i) const noexcept;
  ExtReal piece_right(std::size_t i) const noexcept;

  std::optional<std::size_t> breakpoint_index(double x) const noexcept;
  // Piece whose open interval contains x; x must not be a breakpoint.
  std::size_t piece_index(double x) const;

  ExtInterval eval(double x) const;
  ExtReal eval(double x, Component c) const;

  // Limits of both components of piece i at one of its ends, approached from inside the piece.
  ExtInterval piece_limit(std::size_t i, Side end) const;

  // [lim lower, lim upper] as y -> x from `side`. x may be a domain end when
  // approached from inside.
  ExtInterval one_sided_limit(double x, Side side) const;
  ExtReal one_sided_limit(double x, Side side, Component c) const;

  bool is_point_valued() const noexcept;

  // Merges adjacent pieces with identical expressions whose breakpoint value
  // is the continuous value of those expressions.
  PiecewiseIntervalFn normalized() const;

  friend bool operator==(const PiecewiseIntervalFn&, const PiecewiseIntervalFn&) = default;

 private:
  Domain domain_;
  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_;
  std::vector<ExtInterval> values_;
};

ExtInterval one_sided_limits(const PiecewiseIntervalFn& f, double x, Side side);

// Throws PreconditionError unless every function lives on `domain`.
void require_same_domain(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g);

enum class Reduce { min, max };

struct ComponentSource {
  const PiecewiseIntervalFn* fn = nullptr;
  Component component = Component::lower;
};

/// Builds x -> [reduce_lower of the lower sources, reduce_upper of the upper
/// sources] on a common domain. Breakpoints are merged and new ones are
/// inserted where the winning expression of either component changes.
PiecewiseIntervalFn merge_components(std::span<const ComponentSource> lower_sources, Reduce lower_op,
                                     std::span<const ComponentSource> upper_sources, Reduce upper_op);

// x -> [max lowers, max uppers] and x -> [min lowers, min uppers].
PiecewiseIntervalFn pointwise_max(std::span<const PiecewiseIntervalFn> fs);
PiecewiseIntervalFn pointwise_min(std::span<const PiecewiseIntervalFn> fs);
// x -> [lower_op lowers, upper_op uppers].
PiecewiseIntervalFn pointwise_envelope(std::span<const PiecewiseIntervalFn> fs, Reduce lower_op, Reduce upper_op);

// [lower component of a, upper component of b].
PiecewiseIntervalFn with_components(const PiecewiseIntervalFn& lower_source, const PiecewiseIntervalFn& upper_source);
// The point-valued function given by one component.
PiecewiseIntervalFn component_fn(const PiecewiseIntervalFn& f, Component c);

enum class ComparisonMode { structural, sampled };

struct Comparison {
  bool holds = false;
  ComparisonMode mode = ComparisonMode::structural;
  explicit operator bool() const noexcept { return holds; }
};

Comparison fn_equal(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol = kEqualityTolerance);

// Pointwise orders. `skip` lists points where breakpoint values are ignored
// (used to compare on a cofinite subset).
bool fn_leq(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol = kEqualityTolerance,
            std::span<const double> skip = {});
bool fn_subseteq(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol = kEqualityTolerance,
                 std::span<const double> skip = {});
// Equality of values at every point outside `skip`, by sampling.
bool fn_agree(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol = kEqualityTolerance,
              std::span<const double> skip = {});

// a <= b up to tol (relative for large magnitudes); infinities compare exactly.
bool approx_leq(ExtReal a, ExtReal b, double tol = kEqualityTolerance) noexcept;
bool approx_equal(ExtReal a, ExtReal b, double tol = kEqualityTolerance) noexcept;
bool approx_equal(const ExtInterval& a, const ExtInterval& b, double tol = kEqualityTolerance) noexcept;

}  // namespace ifc
