#pragma once

#include "ifc/metric.hpp"
#include "ifc/piecewise.hpp"

namespace ifc::testgen {

/// Brute-force Hausdorff distance (max metric) between the completed graphs
/// of two finite S-continuous functions over a window. Both graphs are
/// sampled as columns on an x-grid of step s (breakpoints included) and every
/// column is sampled in z with step s. If every piece has slope at most L the
/// result is within (1 + L) s of the true distance.
double sampled_graph_distance(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, Window w, double s);

}  // namespace ifc::testgen
