#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ifc/dense.hpp"
#include "ifc/metric.hpp"
#include "ifc/piecewise.hpp"

namespace ifc {

/// Interval samples on the uniform nodes x_k = a + k (b - a) / (n - 1) of a
/// window [a, b]. `excluded` lists node indices left out of the dense set.
class GridFn {
 public:
  // Throws ValidationError unless (b - a) / h is an integer up to rounding and
  // every excluded index is a node.
  GridFn(Window window, double h, std::vector<ExtInterval> samples, std::vector<std::size_t> excluded = {});

  Window window() const noexcept { return window_; }
  double step() const noexcept { return h_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double node(std::size_t k) const noexcept;
  std::span<const ExtInterval> samples() const noexcept { return samples_; }
  std::span<const std::size_t> excluded() const noexcept { return excluded_; }
  bool is_excluded(std::size_t k) const noexcept;

  // Number of nodes of a grid with this window and step.
  static std::size_t node_count(Window window, double h);

 private:
  Window window_;
  double h_;
  std::vector<ExtInterval> samples_;
  std::vector<std::size_t> excluded_;
};

// Samples f at the nodes; nodes equal to excluded points of d are excluded.
GridFn sample_grid(const PiecewiseIntervalFn& f, Window window, double h);
GridFn sample_grid(const PiecewiseIntervalFn& f, Window window, double h, const CofiniteDense& d);

// delta_k = 2^-k (b - a) / 4 while at least 2h, closed by a final rung 2h.
std::vector<double> default_ladder(Window window, double h);

/// Literal lower Baire formula restricted to a delta ladder: at node x, the
/// sup over the ladder of the inf of lower samples over non-excluded nodes y
/// of the window with |y - x| < delta. Throws PreconditionError unless the
/// ladder is strictly decreasing, positive and ends at or above 2h.
GridFn grid_lower_baire(const GridFn& g, std::span<const double> ladder);
GridFn grid_upper_baire(const GridFn& g, std::span<const double> ladder);
GridFn grid_graph_completion(const GridFn& g, std::span<const double> ladder);

struct NodeDeviation {
  double x = 0.0;
  ExtInterval exact;
  ExtInterval grid;
  double deviation = 0.0;
};

struct CrosscheckReport {
  double max_deviation = 0.0;
  double lipschitz = 0.0;  // L: max derivative bound of the pieces near compared nodes
  double bound = 0.0;      // L * h
  std::size_t nodes_compared = 0;
  bool within_bound = false;
  std::vector<NodeDeviation> nodes;
};

/// Samples f, runs the grid graph completion with the default ladder and
/// compares with the exact F(f) at every node farther than margin from a
/// breakpoint. Infinite values must match exactly. Throws PreconditionError
/// unless margin > h and the window lies inside the domain.
CrosscheckReport crosscheck(const PiecewiseIntervalFn& f, Window window, double h, double margin);

}  // namespace ifc
