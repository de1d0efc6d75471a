#include "ifc/dense.hpp"

#include <algorithm>
#include <cmath>

namespace ifc {

CofiniteDense::CofiniteDense(Domain domain, std::vector<double> excluded)
    : domain_(domain), excluded_(std::move(excluded)) {
  for (double x : excluded_) {
    if (!std::isfinite(x) || !domain_.contains(x)) {
      throw ValidationError("CofiniteDense: excluded point " + ExtReal(x).to_string() + " is not inside the domain");
    }
  }
  std::sort(excluded_.begin(), excluded_.end());
  if (std::adjacent_find(excluded_.begin(), excluded_.end()) != excluded_.end()) {
    throw ValidationError("CofiniteDense: excluded points must be distinct");
  }
}

bool CofiniteDense::is_excluded(double x) const noexcept {
  return std::binary_search(excluded_.begin(), excluded_.end(), x);
}

}  // namespace ifc
