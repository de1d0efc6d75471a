#include "ifc/cnd.hpp"

#include <algorithm>
#include <cmath>

#include "ifc/baire.hpp"
#include "ifc/classify.hpp"
#include "ifc/dense.hpp"

namespace ifc {

CndFunction::CndFunction(Domain domain, std::vector<double> gamma, std::vector<PieceExpr> pieces)
    : domain_(domain), gamma_(std::move(gamma)), pieces_(std::move(pieces)) {
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    if (!std::isfinite(gamma_[k]) || !domain_.contains(gamma_[k])) {
      throw ValidationError("CndFunction: exception point " + ExtReal(gamma_[k]).to_string() +
                            " is not inside the domain");
    }
    if (k > 0 && !(gamma_[k - 1] < gamma_[k])) {
      throw ValidationError("CndFunction: exception points must be strictly increasing");
    }
  }
  if (pieces_.size() != gamma_.size() + 1) {
    throw ValidationError("CndFunction: expected " + std::to_string(gamma_.size() + 1) + " pieces, got " +
                          std::to_string(pieces_.size()));
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const ExtReal l = i == 0 ? domain_.left : ExtReal(gamma_[i - 1]);
    const ExtReal r = i == gamma_.size() ? domain_.right : ExtReal(gamma_[i]);
    if (!pieces_[i].admissible_on(l, r)) {
      throw ValidationError("CndFunction: power expression on piece " + std::to_string(i) +
                            " must stay on one side of 0");
    }
  }
}

ExtReal CndFunction::eval(double x) const {
  if (!domain_.contains(x)) throw PreconditionError("CndFunction: point outside the domain");
  if (std::binary_search(gamma_.begin(), gamma_.end(), x)) {
    throw PreconditionError("CndFunction: undefined on the exception set");
  }
  const auto i = static_cast<std::size_t>(std::upper_bound(gamma_.begin(), gamma_.end(), x) - gamma_.begin());
  return pieces_[i].eval(x);
}

CndFunction CndFunction::with_extra_points(std::span<const double> extra) const {
  std::vector<double> gamma(gamma_);
  for (double x : extra) {
    if (!domain_.contains(x)) throw PreconditionError("f0: extra exception point outside the domain");
    if (std::binary_search(gamma_.begin(), gamma_.end(), x)) {
      throw PreconditionError("f0: extra exception point already in gamma");
    }
    gamma.push_back(x);
  }
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  std::vector<PieceExpr> pieces;
  for (std::size_t i = 0; i <= gamma.size(); ++i) {
    // The new piece sits inside exactly one old piece; locate it by its left end.
    const std::size_t old =
        i == 0 ? 0
               : static_cast<std::size_t>(std::upper_bound(gamma_.begin(), gamma_.end(), gamma[i - 1]) -
                                          gamma_.begin());
    pieces.push_back(pieces_[old]);
  }
  return CndFunction(domain_, std::move(gamma), std::move(pieces));
}

PiecewiseIntervalFn CndFunction::as_piecewise() const {
  std::vector<Piece> pieces;
  for (const auto& e : pieces_) pieces.push_back(Piece{e, e});
  std::vector<ExtInterval> values;
  for (std::size_t k = 0; k < gamma_.size(); ++k) {
    const ExtReal a = pieces_[k].limit(gamma_[k], Side::left);
    const ExtReal b = pieces_[k + 1].limit(gamma_[k], Side::right);
    values.emplace_back(min(a, b), max(a, b));
  }
  return PiecewiseIntervalFn(domain_, gamma_, std::move(pieces), std::move(values));
}

PiecewiseIntervalFn f0(const CndFunction& u) {
  return graph_completion(u.as_piecewise(), CofiniteDense(u.domain(), {u.gamma().begin(), u.gamma().end()}));
}

bool f0_gamma_independence(const CndFunction& u, std::span<const double> extra) {
  return fn_equal(f0(u), f0(u.with_extra_points(extra))).holds;
}

std::vector<double> minimal_exception_set(const CndFunction& u) { return proper_value_set(f0(u)).points; }

}  // namespace ifc
