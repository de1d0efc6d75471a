#include "ifc/classify.hpp"

#include <algorithm>
#include <cmath>

#include "ifc/baire.hpp"
#include "ifc/roots.hpp"

namespace ifc {
namespace {

enum class Degeneracy { exact, sampled, proper };

Degeneracy piece_degeneracy(const Piece& p, ExtReal l, ExtReal r) {
  if (p.degenerate()) return Degeneracy::exact;
  if (!approx_equal(p.lower.limit(l, Side::right), p.upper.limit(l, Side::right)) ||
      !approx_equal(p.lower.limit(r, Side::left), p.upper.limit(r, Side::left))) {
    return Degeneracy::proper;
  }
  for (double x : interior_samples(l, r, 32)) {
    if (!approx_equal(p.lower.eval(x), p.upper.eval(x))) return Degeneracy::proper;
  }
  return Degeneracy::sampled;
}

// Records where g differs from f; falls back to a piece point when only the pieces differ.
void collect_witnesses(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, const std::string& identity,
                       std::vector<Witness>& out) {
  const std::size_t before = out.size();
  std::vector<double> bps(f.breakpoints().begin(), f.breakpoints().end());
  bps.insert(bps.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  for (double b : bps) {
    if (!approx_equal(f.eval(b), g.eval(b))) out.push_back({b, identity});
  }
  if (out.size() != before) return;
  for (std::size_t k = 0; k <= bps.size(); ++k) {
    const ExtReal l = k == 0 ? f.domain().left : ExtReal(bps[k - 1]);
    const ExtReal r = k == bps.size() ? f.domain().right : ExtReal(bps[k]);
    for (double x : interior_samples(l, r, 8)) {
      if (!approx_equal(f.eval(x), g.eval(x))) {
        out.push_back({x, identity});
        return;
      }
    }
  }
}

bool component_continuous_at(const PiecewiseIntervalFn& f, double a, Component c) {
  const ExtReal v = f.eval(a, c);
  return approx_equal(f.one_sided_limit(a, Side::left, c), v) && approx_equal(f.one_sided_limit(a, Side::right, c), v);
}

bool contains_infinity(const ExtInterval& v) { return v.lower().is_neg_inf() || v.upper().is_pos_inf(); }

double to_unit(ExtReal y) {
  if (y.is_pos_inf()) return 1.0;
  if (y.is_neg_inf()) return -1.0;
  return y.value() / (1.0 + std::abs(y.value()));
}

ExtReal from_unit(double t) {
  if (t >= 1.0) return ExtReal::pos_inf();
  if (t <= -1.0) return ExtReal::neg_inf();
  return t / (1.0 - std::abs(t));
}

ExtReal clamp(ExtReal y, ExtReal lo, ExtReal hi) { return min(max(y, lo), hi); }

// The point of a closest to 0.
ExtReal central_point(ExtReal lo, ExtReal hi) { return clamp(ExtReal(0.0), lo, hi); }

}  // namespace

ContinuityReport continuity_report(const PiecewiseIntervalFn& f) {
  ContinuityReport rep;
  const auto fc = graph_completion(f);
  rep.isS = fn_equal(fc, f).holds;
  if (!rep.isS) collect_witnesses(f, fc, "F(f)(x) = f(x)", rep.witnesses);
  const auto g = normalize_G(f);
  rep.isD = fn_equal(g, f).holds;
  if (!rep.isD) collect_witnesses(f, g, "G(f)(x) = f(x)", rep.witnesses);

  const auto n = f.normalized();
  bool degenerate_pieces = true;
  for (std::size_t i = 0; i < n.piece_count(); ++i) {
    const auto d = piece_degeneracy(n.pieces()[i], n.piece_left(i), n.piece_right(i));
    if (d == Degeneracy::sampled) rep.approximate = true;
    if (d == Degeneracy::proper) {
      degenerate_pieces = false;
      rep.witnesses.push_back({interior_point(n.piece_left(i), n.piece_right(i)), "w(f(x)) = 0 off breakpoints"});
    }
  }
  rep.isH = rep.isD && degenerate_pieces;

  rep.isContinuousInterval = true;
  for (double b : n.breakpoints()) {
    if (!component_continuous_at(n, b, Component::lower) || !component_continuous_at(n, b, Component::upper)) {
      rep.isContinuousInterval = false;
      rep.witnesses.push_back({b, "lower and upper continuous"});
    }
  }
  std::stable_sort(rep.witnesses.begin(), rep.witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.point < b.point; });
  return rep;
}

bool is_S_continuous(const PiecewiseIntervalFn& f) { return fn_equal(graph_completion(f), f).holds; }

bool is_D_continuous(const PiecewiseIntervalFn& f) { return fn_equal(normalize_G(f), f).holds; }

bool is_H_continuous(const PiecewiseIntervalFn& f) {
  return proper_value_set(f).pieces.empty() && is_D_continuous(f);
}

ProperValueSet proper_value_set(const PiecewiseIntervalFn& f) {
  ProperValueSet out;
  const auto n = f.normalized();
  for (std::size_t k = 0; k < n.breakpoints().size(); ++k) {
    if (!n.values()[k].degenerate()) out.points.push_back(n.breakpoints()[k]);
  }
  for (std::size_t i = 0; i < n.piece_count(); ++i) {
    const auto d = piece_degeneracy(n.pieces()[i], n.piece_left(i), n.piece_right(i));
    if (d == Degeneracy::sampled) out.approximate = true;
    if (d == Degeneracy::proper) out.pieces.emplace_back(n.piece_left(i), n.piece_right(i));
  }
  return out;
}

CofiniteDense common_point_set(std::span<const PiecewiseIntervalFn> fs) {
  if (fs.empty()) throw PreconditionError("common_point_set: empty family");
  std::vector<double> pts;
  for (const auto& f : fs) {
    require_same_domain(fs.front(), f);
    const auto w = proper_value_set(f);
    if (!w.pieces.empty() || !is_D_continuous(f)) {
      throw PreconditionError("common_point_set: every member must be H-continuous");
    }
    pts.insert(pts.end(), w.points.begin(), w.points.end());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return CofiniteDense(fs.front().domain(), std::move(pts));
}

PointContinuity point_continuity_report(const PiecewiseIntervalFn& f, double a) {
  if (!f.domain().contains(a)) throw PreconditionError("point_continuity_report: point outside the domain");
  if (!is_H_continuous(f)) throw PreconditionError("point_continuity_report: input must be H-continuous");
  return {component_continuous_at(f, a, Component::lower), component_continuous_at(f, a, Component::upper),
          f.eval(a).degenerate()};
}

FinitenessReport finiteness(const PiecewiseIntervalFn& f) {
  FinitenessReport rep;
  const auto n = f.normalized();
  for (std::size_t k = 0; k < n.breakpoints().size(); ++k) {
    if (contains_infinity(n.values()[k])) rep.gammaPoints.push_back(n.breakpoints()[k]);
  }
  bool bounded_ranges = true;
  for (std::size_t i = 0; i < n.piece_count(); ++i) {
    const Piece& p = n.pieces()[i];
    const ExtReal l = n.piece_left(i);
    const ExtReal r = n.piece_right(i);
    // Non-constant expressions are finite inside their piece.
    const bool neg = p.lower.is_infinite_constant() && p.lower.eval(0.0).is_neg_inf();
    const bool pos = p.upper.is_infinite_constant() && p.upper.eval(0.0).is_pos_inf();
    if (neg || pos) rep.gammaPieces.emplace_back(l, r);
    // Monotone expressions take their extreme values at the piece ends.
    for (const PieceExpr* e : {&p.lower, &p.upper}) {
      for (ExtReal v : {e->limit(l, Side::right), e->limit(r, Side::left)}) {
        if (!v.is_finite()) bounded_ranges = false;
      }
    }
  }
  rep.isNearlyFinite = rep.gammaPieces.empty();
  rep.isFinite = rep.isNearlyFinite && rep.gammaPoints.empty();
  rep.isBounded = rep.isFinite && bounded_ranges;
  return rep;
}

SelectionResult has_continuous_selection(const PiecewiseIntervalFn& f, int samples_per_piece) {
  if (!is_D_continuous(f)) throw PreconditionError("has_continuous_selection: input must be D-continuous");
  const auto n = f.normalized();
  const auto bps = n.breakpoints();

  // Admissible selection value at each breakpoint.
  std::vector<ExtReal> anchor;
  for (std::size_t k = 0; k < bps.size(); ++k) {
    const ExtInterval lv = n.one_sided_limit(bps[k], Side::left);
    const ExtInterval rv = n.one_sided_limit(bps[k], Side::right);
    const ExtInterval v = n.values()[k];
    const ExtReal lo = max(max(lv.lower(), rv.lower()), v.lower());
    const ExtReal hi = min(min(lv.upper(), rv.upper()), v.upper());
    if (hi < lo) return {};
    anchor.push_back(central_point(lo, hi));
  }

  SelectionResult out{true, {}};
  for (std::size_t i = 0; i < n.piece_count(); ++i) {
    const ExtReal l = n.piece_left(i);
    const ExtReal r = n.piece_right(i);
    const Piece& p = n.pieces()[i];
    const ExtReal yl = i == 0 ? central_point(p.lower.limit(l, Side::right), p.upper.limit(l, Side::right))
                              : anchor[i - 1];
    const ExtReal yr = i + 1 == n.piece_count()
                           ? central_point(p.lower.limit(r, Side::left), p.upper.limit(r, Side::left))
                           : anchor[i];
    if (i > 0) out.witness.emplace_back(bps[i - 1], yl);
    // Interpolate the anchors in compactified coordinates, then clamp into the tube.
    const double tl = to_unit(yl);
    const double tr = to_unit(yr);
    const double ul = l.is_finite() ? to_unit(l) : -1.0;
    const double ur = r.is_finite() ? to_unit(r) : 1.0;
    for (double x : interior_samples(l, r, samples_per_piece)) {
      const double s = ur > ul ? (to_unit(x) - ul) / (ur - ul) : 0.5;
      const ExtReal y = from_unit(tl + s * (tr - tl));
      out.witness.emplace_back(x, clamp(y, p.lower.eval(x), p.upper.eval(x)));
    }
  }
  return out;
}

}  // namespace ifc
