#pragma once

#include <span>
#include <vector>

#include "ifc/piecewise.hpp"

namespace ifc {

/// A point function continuous off a finite exception set gamma: one
/// expression per open piece of domain \ gamma, undefined on gamma itself.
class CndFunction {
 public:
  CndFunction(Domain domain, std::vector<double> gamma, std::vector<PieceExpr> pieces);

  const Domain& domain() const noexcept { return domain_; }
  std::span<const double> gamma() const noexcept { return gamma_; }
  std::span<const PieceExpr> pieces() const noexcept { return pieces_; }

  // u(x) for x in the domain and off gamma.
  ExtReal eval(double x) const;

  // The same function described with gamma enlarged by `extra`.
  CndFunction with_extra_points(std::span<const double> extra) const;

  // Interval-valued representation; values on gamma are the hulls of the one-sided limits.
  PiecewiseIntervalFn as_piecewise() const;

  friend bool operator==(const CndFunction&, const CndFunction&) = default;

 private:
  Domain domain_;
  std::vector<double> gamma_;
  std::vector<PieceExpr> pieces_;
};

// F0(u) = F(domain \ gamma, domain, u).
PiecewiseIntervalFn f0(const CndFunction& u);

// F0 computed with gamma and with gamma and `extra` agree. Throws
// PreconditionError if `extra` meets gamma or leaves the domain.
bool f0_gamma_independence(const CndFunction& u, std::span<const double> extra);

// W_{F0(u)}: the points of gamma where u has no continuous extension.
std::vector<double> minimal_exception_set(const CndFunction& u);

}  // namespace ifc
