#pragma once

#include <span>
#include <vector>

#include "ifc/piecewise.hpp"

namespace ifc {

/// The dense open set domain \ excluded, with finitely many excluded points.
class CofiniteDense {
 public:
  // Throws ValidationError on duplicate or out-of-domain points; stores them sorted.
  CofiniteDense(Domain domain, std::vector<double> excluded);

  static CofiniteDense full(Domain domain) { return CofiniteDense(domain, {}); }

  const Domain& domain() const noexcept { return domain_; }
  std::span<const double> excluded() const noexcept { return excluded_; }
  bool is_full() const noexcept { return excluded_.empty(); }
  bool is_excluded(double x) const noexcept;
  bool contains(double x) const noexcept { return domain_.contains(x) && !is_excluded(x); }

  friend bool operator==(const CofiniteDense&, const CofiniteDense&) = default;

 private:
  Domain domain_;
  std::vector<double> excluded_;
};

}  // namespace ifc
