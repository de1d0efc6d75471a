#include "ifc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "ifc/baire.hpp"

namespace ifc {
namespace {

void require_window(const PiecewiseIntervalFn& f, Window w) {
  if (!(w.a < w.b)) throw PreconditionError("empty window");
  if (!f.domain().contains(w.a) || !f.domain().contains(w.b)) {
    throw PreconditionError("window must lie inside the domain");
  }
}

void require_ladder(std::span<const double> ladder, double h) {
  if (ladder.empty()) throw PreconditionError("empty delta ladder");
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    if (!(ladder[k] > 0.0)) throw PreconditionError("delta ladder must be positive");
    if (k > 0 && !(ladder[k] < ladder[k - 1])) throw PreconditionError("delta ladder must be strictly decreasing");
  }
  if (ladder.back() < 2.0 * h * (1.0 - 1e-12)) throw PreconditionError("delta ladder too fine for the grid step");
}

// Largest m with m h < delta.
std::size_t reach(double delta, double h) {
  auto m = static_cast<std::size_t>(std::floor(delta / h));
  while (m > 0 && static_cast<double>(m) * h >= delta) --m;
  return m;
}

// Extreme of vals over the non-excluded nodes within m steps of every node;
// an empty slice yields the identity (+inf for min, -inf for max).
std::vector<ExtReal> sliding_extreme(const std::vector<ExtReal>& vals, const GridFn& g, std::size_t m, bool take_min) {
  const std::size_t n = vals.size();
  auto better = [take_min](ExtReal a, ExtReal b) { return take_min ? a <= b : a >= b; };
  std::vector<ExtReal> out(n, take_min ? ExtReal::pos_inf() : ExtReal::neg_inf());
  std::deque<std::size_t> dq;
  std::size_t next = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t hi = std::min(n - 1, k + m);
    for (; next <= hi; ++next) {
      if (g.is_excluded(next)) continue;
      while (!dq.empty() && better(vals[next], vals[dq.back()])) dq.pop_back();
      dq.push_back(next);
    }
    const std::size_t lo = k >= m ? k - m : 0;
    while (!dq.empty() && dq.front() < lo) dq.pop_front();
    if (!dq.empty()) out[k] = vals[dq.front()];
  }
  return out;
}

std::vector<ExtReal> grid_baire(const GridFn& g, std::span<const double> ladder, bool lower) {
  require_ladder(ladder, g.step());
  std::vector<ExtReal> vals;
  vals.reserve(g.size());
  for (const auto& s : g.samples()) vals.push_back(lower ? s.lower() : s.upper());
  std::vector<ExtReal> out(g.size(), lower ? ExtReal::neg_inf() : ExtReal::pos_inf());
  for (double delta : ladder) {
    const auto ext = sliding_extreme(vals, g, reach(delta, g.step()), lower);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = lower ? max(out[k], ext[k]) : min(out[k], ext[k]);
  }
  return out;
}

std::vector<std::size_t> excluded_nodes(const GridFn& g) { return {g.excluded().begin(), g.excluded().end()}; }

double component_deviation(ExtReal exact, ExtReal grid) {
  if (exact == grid) return 0.0;
  if (!exact.is_finite() || !grid.is_finite()) return std::numeric_limits<double>::infinity();
  return std::abs(exact.value() - grid.value());
}

}  // namespace

std::size_t GridFn::node_count(Window window, double h) {
  if (!(h > 0.0) || !(window.a < window.b)) throw ValidationError("GridFn: need h > 0 and a < b");
  const double q = (window.b - window.a) / h;
  const double r = std::round(q);
  if (r < 1.0 || std::abs(q - r) > 1e-9 * std::max(1.0, r)) {
    throw ValidationError("GridFn: window length is not an integer multiple of h");
  }
  return static_cast<std::size_t>(r) + 1;
}

GridFn::GridFn(Window window, double h, std::vector<ExtInterval> samples, std::vector<std::size_t> excluded)
    : window_(window), h_(h), samples_(std::move(samples)), excluded_(std::move(excluded)) {
  if (samples_.size() != node_count(window, h)) throw ValidationError("GridFn: one sample per node is required");
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
  if (!excluded_.empty() && excluded_.back() >= samples_.size()) {
    throw ValidationError("GridFn: excluded index is not a node");
  }
}

double GridFn::node(std::size_t k) const noexcept {
  const auto n = static_cast<double>(samples_.size() - 1);
  return window_.a + (static_cast<double>(k) * (window_.b - window_.a)) / n;
}

bool GridFn::is_excluded(std::size_t k) const noexcept {
  return std::binary_search(excluded_.begin(), excluded_.end(), k);
}

GridFn sample_grid(const PiecewiseIntervalFn& f, Window window, double h) {
  return sample_grid(f, window, h, CofiniteDense::full(f.domain()));
}

GridFn sample_grid(const PiecewiseIntervalFn& f, Window window, double h, const CofiniteDense& d) {
  require_window(f, window);
  const std::size_t n = GridFn::node_count(window, h);
  std::vector<ExtInterval> samples;
  samples.reserve(n);
  std::vector<std::size_t> excluded;
  const GridFn shape(window, h, std::vector<ExtInterval>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double x = shape.node(k);
    samples.push_back(f.eval(x));
    if (d.is_excluded(x)) excluded.push_back(k);
  }
  return GridFn(window, h, std::move(samples), std::move(excluded));
}

std::vector<double> default_ladder(Window window, double h) {
  std::vector<double> ladder;
  const double floor = 2.0 * h;
  for (double delta = (window.b - window.a) / 4.0; delta >= floor; delta *= 0.5) ladder.push_back(delta);
  if (ladder.empty() || ladder.back() > floor) ladder.push_back(floor);
  return ladder;
}

GridFn grid_lower_baire(const GridFn& g, std::span<const double> ladder) {
  const auto lo = grid_baire(g, ladder, true);
  return GridFn(g.window(), g.step(), {lo.begin(), lo.end()}, excluded_nodes(g));
}

GridFn grid_upper_baire(const GridFn& g, std::span<const double> ladder) {
  const auto hi = grid_baire(g, ladder, false);
  return GridFn(g.window(), g.step(), {hi.begin(), hi.end()}, excluded_nodes(g));
}

GridFn grid_graph_completion(const GridFn& g, std::span<const double> ladder) {
  const auto lo = grid_baire(g, ladder, true);
  const auto hi = grid_baire(g, ladder, false);
  std::vector<ExtInterval> samples;
  samples.reserve(lo.size());
  for (std::size_t k = 0; k < lo.size(); ++k) samples.emplace_back(lo[k], hi[k]);
  return GridFn(g.window(), g.step(), std::move(samples), excluded_nodes(g));
}

CrosscheckReport crosscheck(const PiecewiseIntervalFn& f, Window window, double h, double margin) {
  if (!(margin > h)) throw PreconditionError("crosscheck: margin must exceed h");
  require_window(f, window);
  const auto grid = grid_graph_completion(sample_grid(f, window, h), default_ladder(window, h));
  const auto exact = graph_completion(f);
  const auto bps = f.breakpoints();

  CrosscheckReport rep;
  // Grid neighbours of a compared node stay at least margin - h away from every breakpoint.
  const double shrink = margin - h;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const ExtReal l = f.piece_left(i);
    const ExtReal r = f.piece_right(i);
    const double lo = l > ExtReal(window.a) ? l.value() + shrink : window.a;
    const double hi = r < ExtReal(window.b) ? r.value() - shrink : window.b;
    if (!(lo <= hi)) continue;
    for (const PieceExpr* e : {&f.pieces()[i].lower, &f.pieces()[i].upper}) {
      rep.lipschitz = std::max(rep.lipschitz, e->derivative_bound(lo, hi));
    }
  }
  rep.bound = rep.lipschitz * h;

  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid.node(k);
    const bool near = std::any_of(bps.begin(), bps.end(), [&](double b) { return std::abs(x - b) <= margin; });
    if (near) continue;
    const ExtInterval e = exact.eval(x);
    const ExtInterval gv = grid.samples()[k];
    const double dev =
        std::max(component_deviation(e.lower(), gv.lower()), component_deviation(e.upper(), gv.upper()));
    rep.nodes.push_back({x, e, gv, dev});
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  rep.nodes_compared = rep.nodes.size();
  rep.within_bound = rep.max_deviation <= rep.bound * (1.0 + 1e-9) + 1e-12;
  return rep;
}

}  // namespace ifc
