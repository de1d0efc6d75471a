#include "ifc/metric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "ifc/classify.hpp"

namespace ifc {
namespace {

// A piece region {(x, z) : s <= x <= t, lo(x) <= z <= hi(x)} with monotone
// lo and hi, or a vertical segment when s == t.
struct Part {
  double s = 0.0;
  double t = 0.0;
  PieceExpr lo;
  PieceExpr hi;
  double lo_s = 0.0, lo_t = 0.0, hi_s = 0.0, hi_t = 0.0;
  int dlo = 0;
  int dhi = 0;

  bool vertical() const noexcept { return s == t; }
  bool degenerate() const noexcept { return vertical() ? lo_s == hi_s : lo == hi; }

  double at(Component c, double x) const {
    if (x <= s) return c == Component::lower ? lo_s : hi_s;
    if (x >= t) return c == Component::lower ? lo_t : hi_t;
    return (c == Component::lower ? lo : hi).eval(x).value();
  }
  int dir(Component c) const noexcept { return c == Component::lower ? dlo : dhi; }
  // Range of the derivative of a component over [x1, x2] inside [s, t].
  std::pair<double, double> slope(Component c, double x1, double x2) const {
    if (vertical() || !(x1 < x2)) return {0.0, 0.0};
    return (c == Component::lower ? lo : hi).derivative_range(std::max(x1, s), std::min(x2, t));
  }
  double lo_min(double x1, double x2) const { return std::min(at(Component::lower, x1), at(Component::lower, x2)); }
  double hi_max(double x1, double x2) const { return std::max(at(Component::upper, x1), at(Component::upper, x2)); }
};

double finite_value(ExtReal v) {
  if (!v.is_finite()) throw PreconditionError("graph_distance: function is not finite on the window");
  return v.value();
}

std::vector<Part> graph_parts(const PiecewiseIntervalFn& f, Window w) {
  std::vector<Part> parts;
  for (std::size_t k = 0; k < f.breakpoints().size(); ++k) {
    const double b = f.breakpoints()[k];
    if (b < w.a || b > w.b) continue;
    const ExtInterval v = f.values()[k];
    Part p;
    p.s = p.t = b;
    p.lo_s = p.lo_t = finite_value(v.lower());
    p.hi_s = p.hi_t = finite_value(v.upper());
    parts.push_back(p);
  }
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    const ExtReal l = f.piece_left(i);
    const ExtReal r = f.piece_right(i);
    const double s = std::max(l, ExtReal(w.a)).value();
    const double t = std::min(r, ExtReal(w.b)).value();
    if (!(s < t)) continue;
    const Piece& pc = f.pieces()[i];
    Part p;
    p.s = s;
    p.t = t;
    p.lo = pc.lower;
    p.hi = pc.upper;
    p.lo_s = finite_value(ExtReal(s) == l ? pc.lower.limit(l, Side::right) : pc.lower.eval(s));
    p.hi_s = finite_value(ExtReal(s) == l ? pc.upper.limit(l, Side::right) : pc.upper.eval(s));
    p.lo_t = finite_value(ExtReal(t) == r ? pc.lower.limit(r, Side::left) : pc.lower.eval(t));
    p.hi_t = finite_value(ExtReal(t) == r ? pc.upper.limit(r, Side::left) : pc.upper.eval(t));
    p.dlo = pc.lower.direction(l, r);
    p.dhi = pc.upper.direction(l, r);
    parts.push_back(p);
  }
  return parts;
}

// The graph points of part `part` with x in [x1, x2] and z in [z1, z2].
struct Cell {
  std::size_t part = 0;
  double x1 = 0.0, x2 = 0.0, z1 = 0.0, z2 = 0.0;
};

// Lower bound of phi(x) = a(x) - b(clamp(x + shift, q.s, q.t)) over [x1, x2],
// where a is component ca of p and b is component cb of q. Both are monotone;
// when no clamping happens inside the cell the derivative range of phi gives
// a bound that is exact for matching affine pieces.
double inf_difference(const Part& p, Component ca, double x1, double x2, const Part& q, Component cb,
                      double shift) {
  const double u1 = x1 + shift;
  const double u2 = x2 + shift;
  const double b1 = q.at(cb, u1);
  const double b2 = q.at(cb, u2);
  const double phi1 = p.at(ca, x1) - b1;
  const double phi2 = p.at(ca, x2) - b2;
  const double dx = x2 - x1;
  if (dx <= 0.0) return std::min(phi1, phi2);
  const bool constant_b = q.vertical() || q.dir(cb) == 0 || u1 >= q.t || u2 <= q.s;
  if (constant_b) return std::min(phi1, phi2);  // a monotone, b constant
  if (u1 < q.s || u2 > q.t) {
    return std::min(p.at(ca, x1), p.at(ca, x2)) - std::max(b1, b2);
  }
  const auto [amin, amax] = p.slope(ca, x1, x2);
  const auto [bmin, bmax] = q.slope(cb, u1, u2);
  const double dmin = amin - bmax;
  const double dmax = amax - bmin;
  if (dmin >= 0.0) return phi1;
  if (dmax <= 0.0) return phi2;
  // phi >= phi1 + dmin (x - x1) and phi >= phi2 - dmax (x2 - x); meet of the two lines.
  const double tstar = std::clamp((phi2 - dmax * dx - phi1) / (dmin - dmax), 0.0, dx);
  return std::min({phi1, phi2, phi1 + dmin * tstar});
}

// Does the cell lie inside the closed r-neighborhood of part q? At abscissa x
// the neighborhood covers z in [min lo_q - r, max hi_q + r] over the x-window
// [x - r, x + r] of q, so the cell fits when its lower edge stays above the
// shifted lower component of q and its upper edge below the shifted upper one.
bool fits(const Cell& c, const Part& p, const Part& q, double r) {
  if (c.x1 < q.s - r || c.x2 > q.t + r) return false;
  // Window minimum of lo_q sits at x - r when lo_q increases, x + r when it decreases.
  const double lo_shift = q.dlo >= 0 ? -r : r;
  const double hi_shift = q.dhi >= 0 ? r : -r;
  const double sup_lq = std::max(q.at(Component::lower, c.x1 + lo_shift), q.at(Component::lower, c.x2 + lo_shift));
  const bool lower_ok = c.z1 >= sup_lq - r ||
                        inf_difference(p, Component::lower, c.x1, c.x2, q, Component::lower, lo_shift) >= -r;
  if (!lower_ok) return false;
  const double inf_hq = std::min(q.at(Component::upper, c.x1 + hi_shift), q.at(Component::upper, c.x2 + hi_shift));
  if (c.z2 <= inf_hq + r) return true;
  // hi_q(x + shift) - hi_p(x) >= -r, written as a lower bound of -(hi_p - hi_q).
  const double sup_gap = -inf_difference(q, Component::upper, c.x1 + hi_shift, c.x2 + hi_shift, p, Component::upper,
                                         -hi_shift);
  return sup_gap <= r;
}

struct Radius {
  double lo;
  double hi;
};

// Smallest r with the cell inside the r-neighborhood of q, bracketed to width tol.
Radius fit_radius(const Cell& c, const Part& p, const Part& q, double tol) {
  if (fits(c, p, q, 0.0)) return {0.0, 0.0};
  double lo = 0.0;
  double hi = 1.0;
  while (!fits(c, p, q, hi)) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (fits(c, p, q, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

Radius distance_to(const Cell& c, const Part& p, const std::vector<Part>& parts, double tol) {
  Radius best{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& q : parts) {
    const Radius r = fit_radius(c, p, q, tol);
    best.lo = std::min(best.lo, r.lo);
    best.hi = std::min(best.hi, r.hi);
  }
  return best;
}

struct Queued {
  Cell cell;
  double ub;
  friend bool operator<(const Queued& a, const Queued& b) { return a.ub < b.ub; }
};

double directed(const std::vector<Part>& from, const std::vector<Part>& to, double tol, std::size_t max_cells) {
  const double rtol = tol / 16.0;
  double best_lb = 0.0;
  std::priority_queue<Queued> queue;

  auto push = [&](Cell c) {
    const Part& p = from[c.part];
    c.z1 = std::max(c.z1, p.lo_min(c.x1, c.x2));
    c.z2 = std::min(c.z2, p.hi_max(c.x1, c.x2));
    if (c.z1 > c.z2) return;
    // A true graph point near the middle of the cell bounds the supremum from below.
    const double xm = c.x1 + 0.5 * (c.x2 - c.x1);
    const double lo = p.at(Component::lower, xm);
    const double zm = std::clamp(c.z1 + 0.5 * (c.z2 - c.z1), lo, std::max(lo, p.at(Component::upper, xm)));
    const Cell point{c.part, xm, xm, zm, zm};
    Part probe = p;
    best_lb = std::max(best_lb, distance_to(point, probe, to, rtol).lo);
    queue.push(Queued{c, distance_to(c, p, to, rtol).hi});
  };

  for (std::size_t i = 0; i < from.size(); ++i) {
    const Part& p = from[i];
    push(Cell{i, p.s, p.t, p.lo_min(p.s, p.t), p.hi_max(p.s, p.t)});
  }
  std::size_t processed = 0;
  while (!queue.empty()) {
    const Queued top = queue.top();
    if (top.ub <= best_lb + 0.5 * tol) return 0.5 * (best_lb + top.ub);
    queue.pop();
    if (++processed > max_cells) throw Error("graph_distance: search did not converge");
    const Cell& c = top.cell;
    const Part& p = from[c.part];
    // Curves only shrink along x; bands and segments also along z.
    const bool split_x = !p.vertical() && (p.degenerate() || c.x2 - c.x1 >= c.z2 - c.z1);
    if (split_x) {
      const double xm = c.x1 + 0.5 * (c.x2 - c.x1);
      push(Cell{c.part, c.x1, xm, c.z1, c.z2});
      push(Cell{c.part, xm, c.x2, c.z1, c.z2});
    } else {
      const double zm = c.z1 + 0.5 * (c.z2 - c.z1);
      push(Cell{c.part, c.x1, c.x2, c.z1, zm});
      push(Cell{c.part, c.x1, c.x2, zm, c.z2});
    }
  }
  return best_lb;
}

void require_metric_input(const PiecewiseIntervalFn& f) {
  if (!finiteness(f).isFinite) throw PreconditionError("graph_distance: input must be finite");
  if (!is_S_continuous(f)) throw PreconditionError("graph_distance: input must be S-continuous");
}

}  // namespace

double graph_distance(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, Window window, double tol,
                      const DistanceOptions& options) {
  require_same_domain(f, g);
  if (!(tol > 0.0)) throw PreconditionError("graph_distance: tol must be positive");
  if (!(window.a < window.b)) throw PreconditionError("graph_distance: empty window");
  if (!f.domain().contains(window.a) || !f.domain().contains(window.b)) {
    throw PreconditionError("graph_distance: window must lie inside the domain");
  }
  require_metric_input(f);
  require_metric_input(g);
  const auto pf = graph_parts(f, window);
  const auto pg = graph_parts(g, window);
  return std::max(directed(pf, pg, tol, options.max_cells), directed(pg, pf, tol, options.max_cells));
}

}  // namespace ifc
