#pragma once

#include <string>
#include <utility>
#include <variant>

#include "ifc/extreal.hpp"

namespace ifc {

// Direction of approach to a point p: Side::left means y -> p-, Side::right y -> p+.
enum class Side { left, right };

enum class ExprKind { constant, affine, power, sigmoid };

struct ConstExpr {
  ExtReal value;
  friend bool operator==(const ConstExpr&, const ConstExpr&) = default;
};

// slope * x + intercept, slope != 0.
struct AffineExpr {
  double slope = 1.0;
  double intercept = 0.0;
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

// coeff * x^exponent on a piece inside (0, inf) or (-inf, 0); exponent not in {0, 1}.
struct PowerExpr {
  int exponent = -1;
  double coeff = 1.0;
  friend bool operator==(const PowerExpr&, const PowerExpr&) = default;
};

// scale * (1 - e^{-rate x}) / (1 + e^{-rate x}) + offset, rate > 0.
struct SigmoidExpr {
  double rate = 1.0;
  double scale = 1.0;
  double offset = 0.0;
  friend bool operator==(const SigmoidExpr&, const SigmoidExpr&) = default;
};

/// An elementary expression evaluated on one open piece. Every expression is
/// constant or strictly monotone on an admissible piece and has closed-form
/// one-sided limits in the extended reals.
///
/// The factories canonicalize degenerate parameters (zero slope, zero scale,
/// exponent one) so that structurally different expressions denote different
/// functions on every open interval.
class PieceExpr {
 public:
  using Variant = std::variant<ConstExpr, AffineExpr, PowerExpr, SigmoidExpr>;

  PieceExpr() : v_(ConstExpr{}) {}

  static PieceExpr constant(ExtReal c);
  static PieceExpr affine(double slope, double intercept);
  static PieceExpr power(int exponent, double coeff = 1.0);
  static PieceExpr sigmoid(double rate, double scale = 1.0, double offset = 0.0);

  ExprKind kind() const noexcept { return static_cast<ExprKind>(v_.index()); }
  const Variant& variant() const noexcept { return v_; }
  template <class T>
  const T& as() const {
    return std::get<T>(v_);
  }

  bool is_constant() const noexcept { return kind() == ExprKind::constant; }
  bool is_infinite_constant() const noexcept;

  // Value at an interior point x of an admissible piece.
  ExtReal eval(double x) const;

  // Limit as y -> p from `side`. p may be infinite (approached from inside).
  ExtReal limit(ExtReal p, Side side) const;

  // Can this expression live on the open piece (l, r)?
  bool admissible_on(ExtReal l, ExtReal r) const noexcept;

  // -1, 0 or +1: monotonicity direction on the admissible piece (l, r).
  int direction(ExtReal l, ExtReal r) const noexcept;

  // sup |e'| over the finite closed interval [lo, hi] of an admissible piece.
  double derivative_bound(double lo, double hi) const;
  // [inf e', sup e'] over the same interval.
  std::pair<double, double> derivative_range(double lo, double hi) const;

  std::string to_string() const;

  friend bool operator==(const PieceExpr&, const PieceExpr&) = default;

 private:
  explicit PieceExpr(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const PieceExpr& e);

}  // namespace ifc
