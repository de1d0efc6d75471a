#pragma once

#include "ifc/piecewise.hpp"

namespace ifc {

struct Window {
  double a = 0.0;
  double b = 1.0;
};

struct DistanceOptions {
  // Safety stop for the branch-and-bound search.
  std::size_t max_cells = 2'000'000;
};

/// Hausdorff distance, in the max metric of the plane, between the closed
/// graphs {(x, z) : a <= x <= b, z in f(x)} of two finite S-continuous
/// functions. Each graph is split into monotone piece regions and vertical
/// breakpoint segments; a branch-and-bound over cells of one graph bounds
/// the directed distance from above (bounding box against each part of the
/// other graph) and from below (exact distance of graph points) until the
/// bounds meet within tol.
///
/// Throws PreconditionError for non-finite or non-S-continuous input, a
/// window not inside the domain, a = b, or tol <= 0.
double graph_distance(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, Window window, double tol,
                      const DistanceOptions& options = {});

}  // namespace ifc
