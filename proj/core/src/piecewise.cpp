#include "ifc/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifc/roots.hpp"

namespace ifc {
namespace {

double scale_of(double x) { return std::max(1.0, std::abs(x)); }

bool close_points(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(scale_of(a), scale_of(b)); }

// [lo, hi], swapping endpoints that cross by rounding noise.
ExtInterval tolerant_interval(ExtReal lo, ExtReal hi) {
  if (hi < lo) return ExtInterval(hi, lo);
  return ExtInterval(lo, hi);
}

ExtReal reduce(ExtReal a, ExtReal b, Reduce op) { return op == Reduce::min ? min(a, b) : max(a, b); }

std::vector<double> union_breakpoints(std::span<const ComponentSource> a, std::span<const ComponentSource> b) {
  std::vector<double> out;
  for (auto group : {a, b}) {
    for (const auto& s : group) out.insert(out.end(), s.fn->breakpoints().begin(), s.fn->breakpoints().end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> union_breakpoints(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g) {
  std::vector<double> out(f.breakpoints().begin(), f.breakpoints().end());
  out.insert(out.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool skipped(double x, std::span<const double> skip) { return std::find(skip.begin(), skip.end(), x) != skip.end(); }

// Index of the extreme expression at x.
std::size_t winner(const std::vector<PieceExpr>& exprs, Reduce op, double x) {
  std::size_t best = 0;
  ExtReal best_v = exprs[0].eval(x);
  for (std::size_t k = 1; k < exprs.size(); ++k) {
    const ExtReal v = exprs[k].eval(x);
    if (op == Reduce::min ? v < best_v : best_v < v) {
      best = k;
      best_v = v;
    }
  }
  return best;
}

void add_unique(std::vector<PieceExpr>& exprs, const PieceExpr& e) {
  if (std::find(exprs.begin(), exprs.end(), e) == exprs.end()) exprs.push_back(e);
}

void collect_crossings(const std::vector<PieceExpr>& exprs, ExtReal l, ExtReal r, std::vector<double>& out) {
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    for (std::size_t j = i + 1; j < exprs.size(); ++j) {
      for (const auto& c : crossings(exprs[i], exprs[j], l, r)) out.push_back(c.x);
    }
  }
}

// a_ca(x) <= b_cb(x) for every x outside the skipped breakpoints.
bool component_leq(const PiecewiseIntervalFn& a, Component ca, const PiecewiseIntervalFn& b, Component cb,
                   double tol, std::span<const double> skip) {
  const auto bps = union_breakpoints(a, b);
  for (double x : bps) {
    if (skipped(x, skip)) continue;
    if (!approx_leq(a.eval(x, ca), b.eval(x, cb), tol)) return false;
  }
  const Domain& dom = a.domain();
  for (std::size_t k = 0; k <= bps.size(); ++k) {
    const ExtReal l = k == 0 ? dom.left : ExtReal(bps[k - 1]);
    const ExtReal r = k == bps.size() ? dom.right : ExtReal(bps[k]);
    const double mid = interior_point(l, r);
    const PieceExpr& ea = a.pieces()[a.piece_index(mid)][ca];
    const PieceExpr& eb = b.pieces()[b.piece_index(mid)][cb];
    if (ea == eb) continue;
    if (!approx_leq(ea.limit(l, Side::right), eb.limit(l, Side::right), tol)) return false;
    if (!approx_leq(ea.limit(r, Side::left), eb.limit(r, Side::left), tol)) return false;
    std::vector<double> pts = interior_samples(l, r, 32);
    std::vector<double> cuts;
    for (const auto& c : crossings(ea, eb, l, r)) cuts.push_back(c.x);
    for (std::size_t s = 0; s <= cuts.size(); ++s) {
      const ExtReal sl = s == 0 ? l : ExtReal(cuts[s - 1]);
      const ExtReal sr = s == cuts.size() ? r : ExtReal(cuts[s]);
      if (sl < sr) pts.push_back(interior_point(sl, sr));
    }
    for (double x : pts) {
      if (!approx_leq(ea.eval(x), eb.eval(x), tol)) return false;
    }
  }
  return true;
}

// Value of f at a breakpoint cluster: its own breakpoint value if it has one there.
ExtInterval cluster_value(const PiecewiseIntervalFn& f, const std::vector<double>& cluster) {
  for (double x : cluster) {
    if (f.breakpoint_index(x)) return f.eval(x);
  }
  return f.eval(cluster.front());
}

double cluster_anchor(const PiecewiseIntervalFn& f, const std::vector<double>& cluster, bool last) {
  for (double x : cluster) {
    if (f.breakpoint_index(x)) return x;
  }
  return last ? cluster.back() : cluster.front();
}

Comparison sampled_equal(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol) {
  const Comparison no{false, ComparisonMode::sampled};
  const auto bps = union_breakpoints(f, g);
  std::vector<std::vector<double>> clusters;
  for (double x : bps) {
    if (!clusters.empty() && close_points(clusters.back().back(), x, tol)) {
      clusters.back().push_back(x);
    } else {
      clusters.push_back({x});
    }
  }
  for (const auto& c : clusters) {
    if (!approx_equal(cluster_value(f, c), cluster_value(g, c), tol)) return no;
  }
  const Domain& dom = f.domain();
  for (std::size_t k = 0; k <= clusters.size(); ++k) {
    const ExtReal l = k == 0 ? dom.left : ExtReal(clusters[k - 1].back());
    const ExtReal r = k == clusters.size() ? dom.right : ExtReal(clusters[k].front());
    if (!(l < r)) continue;
    const double mid = interior_point(l, r);
    const Piece& pf = f.pieces()[f.piece_index(mid)];
    const Piece& pg = g.pieces()[g.piece_index(mid)];
    const double fl = k == 0 ? l.value() : cluster_anchor(f, clusters[k - 1], true);
    const double gl = k == 0 ? l.value() : cluster_anchor(g, clusters[k - 1], true);
    const double fr = k == clusters.size() ? r.value() : cluster_anchor(f, clusters[k], false);
    const double gr = k == clusters.size() ? r.value() : cluster_anchor(g, clusters[k], false);
    if (!approx_equal(f.one_sided_limit(fl, Side::right), g.one_sided_limit(gl, Side::right), tol)) return no;
    if (!approx_equal(f.one_sided_limit(fr, Side::left), g.one_sided_limit(gr, Side::left), tol)) return no;
    if (pf == pg) continue;
    for (double x : interior_samples(l, r, 32)) {
      if (!approx_equal(f.eval(x), g.eval(x), tol)) return no;
    }
  }
  return {true, ComparisonMode::sampled};
}

}  // namespace

Domain::Domain(ExtReal l, ExtReal r) : left(l), right(r) {
  if (!(l < r)) throw ValidationError("Domain: left end must be below right end");
}

PiecewiseIntervalFn::PiecewiseIntervalFn(Domain domain, std::vector<double> breakpoints, std::vector<Piece> pieces,
                                         std::vector<ExtInterval> values, const ValidationOptions& options)
    : domain_(domain), breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), values_(std::move(values)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw ValidationError("PiecewiseIntervalFn: expected " + std::to_string(breakpoints_.size() + 1) + " pieces, got " +
                          std::to_string(pieces_.size()));
  }
  if (values_.size() != breakpoints_.size()) {
    throw ValidationError("PiecewiseIntervalFn: one breakpoint value per breakpoint is required");
  }
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    const double b = breakpoints_[k];
    if (!std::isfinite(b) || !domain_.contains(b)) {
      throw ValidationError("PiecewiseIntervalFn: breakpoint " + ExtReal(b).to_string() + " is not inside the domain");
    }
    if (k > 0 && !(breakpoints_[k - 1] < b)) {
      throw ValidationError("PiecewiseIntervalFn: breakpoints must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const ExtReal l = piece_left(i);
    const ExtReal r = piece_right(i);
    const Piece& p = pieces_[i];
    if (!p.lower.admissible_on(l, r) || !p.upper.admissible_on(l, r)) {
      throw ValidationError("PiecewiseIntervalFn: power expression on piece " + std::to_string(i) +
                            " must stay on one side of 0");
    }
    if (p.degenerate()) continue;
    auto check = [&](ExtReal lo, ExtReal hi) {
      if (!approx_leq(lo, hi, options.tolerance)) {
        throw ValidationError("PiecewiseIntervalFn: lower exceeds upper on piece " + std::to_string(i) + " (" +
                              lo.to_string() + " > " + hi.to_string() + ")");
      }
    };
    check(p.lower.limit(l, Side::right), p.upper.limit(l, Side::right));
    check(p.lower.limit(r, Side::left), p.upper.limit(r, Side::left));
    const int n = options.interior_samples;
    for (int k = 1; k <= n; ++k) {
      double x = 0.0;
      if (l.is_finite() && r.is_finite()) {
        x = l.value() + (r.value() - l.value()) * k / (n + 1);
      } else {
        // unbounded piece: spread samples geometrically away from the finite end
        const double base = interior_point(l, r);
        const double step = std::ldexp(1.0, k / 2) * (k % 2 == 0 ? 1.0 : 0.5);
        x = l.is_finite() ? l.value() + (base - l.value()) * step / 8.0
            : r.is_finite() ? r.value() - (r.value() - base) * step / 8.0
                            : (k % 2 == 0 ? step : -step);
      }
      if (domain_.contains(x) && l < ExtReal(x) && ExtReal(x) < r) check(p.lower.eval(x), p.upper.eval(x));
    }
  }
}

PiecewiseIntervalFn PiecewiseIntervalFn::constant(Domain domain, ExtInterval value) {
  return PiecewiseIntervalFn(domain, {}, {Piece{PieceExpr::constant(value.lower()), PieceExpr::constant(value.upper())}},
                             {});
}

PiecewiseIntervalFn PiecewiseIntervalFn::point(Domain domain, const PieceExpr& expr) {
  return PiecewiseIntervalFn(domain, {}, {Piece{expr, expr}}, {});
}

ExtReal PiecewiseIntervalFn::piece_left(std::size_t i) const noexcept {
  return i == 0 ? domain_.left : ExtReal(breakpoints_[i - 1]);
}

ExtReal PiecewiseIntervalFn::piece_right(std::size_t i) const noexcept {
  return i < breakpoints_.size() ? ExtReal(breakpoints_[i]) : domain_.right;
}

std::optional<std::size_t> PiecewiseIntervalFn::breakpoint_index(double x) const noexcept {
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  if (it != breakpoints_.end() && *it == x) return static_cast<std::size_t>(it - breakpoints_.begin());
  return std::nullopt;
}

std::size_t PiecewiseIntervalFn::piece_index(double x) const {
  if (!domain_.contains(x)) throw PreconditionError("point " + ExtReal(x).to_string() + " is outside the domain");
  return static_cast<std::size_t>(std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x) - breakpoints_.begin());
}

ExtInterval PiecewiseIntervalFn::eval(double x) const {
  if (!domain_.contains(x)) throw PreconditionError("eval: point " + ExtReal(x).to_string() + " is outside the domain");
  if (auto k = breakpoint_index(x)) return values_[*k];
  const Piece& p = pieces_[piece_index(x)];
  return tolerant_interval(p.lower.eval(x), p.upper.eval(x));
}

ExtReal PiecewiseIntervalFn::eval(double x, Component c) const {
  if (!domain_.contains(x)) throw PreconditionError("eval: point " + ExtReal(x).to_string() + " is outside the domain");
  if (auto k = breakpoint_index(x)) return c == Component::lower ? values_[*k].lower() : values_[*k].upper();
  return pieces_[piece_index(x)][c].eval(x);
}

ExtReal PiecewiseIntervalFn::one_sided_limit(double x, Side side, Component c) const {
  one_sided_limit(x, side);  // rejects an empty approach region
  const ExtReal ex(x);
  std::size_t i = 0;
  if (side == Side::left) {
    if (ex == domain_.right) {
      i = pieces_.size() - 1;
    } else if (auto k = breakpoint_index(x)) {
      i = *k;
    } else {
      return pieces_[piece_index(x)][c].eval(x);
    }
    return pieces_[i][c].limit(piece_right(i), Side::left);
  }
  if (ex == domain_.left) {
    i = 0;
  } else if (auto k = breakpoint_index(x)) {
    i = *k + 1;
  } else {
    return pieces_[piece_index(x)][c].eval(x);
  }
  return pieces_[i][c].limit(piece_left(i), Side::right);
}

ExtInterval PiecewiseIntervalFn::piece_limit(std::size_t i, Side end) const {
  const Piece& p = pieces_[i];
  if (end == Side::left) {
    const ExtReal l = piece_left(i);
    return tolerant_interval(p.lower.limit(l, Side::right), p.upper.limit(l, Side::right));
  }
  const ExtReal r = piece_right(i);
  return tolerant_interval(p.lower.limit(r, Side::left), p.upper.limit(r, Side::left));
}

ExtInterval PiecewiseIntervalFn::one_sided_limit(double x, Side side) const {
  const ExtReal ex(x);
  if (side == Side::left) {
    if (!(domain_.left < ex) || domain_.right < ex) {
      throw PreconditionError("one_sided_limit: no approach region to the left of " + ex.to_string());
    }
    if (ex == domain_.right) return piece_limit(pieces_.size() - 1, Side::right);
    if (auto k = breakpoint_index(x)) return piece_limit(*k, Side::right);
  } else {
    if (!(ex < domain_.right) || ex < domain_.left) {
      throw PreconditionError("one_sided_limit: no approach region to the right of " + ex.to_string());
    }
    if (ex == domain_.left) return piece_limit(0, Side::left);
    if (auto k = breakpoint_index(x)) return piece_limit(*k + 1, Side::left);
  }
  const Piece& p = pieces_[piece_index(x)];
  return tolerant_interval(p.lower.eval(x), p.upper.eval(x));
}

bool PiecewiseIntervalFn::is_point_valued() const noexcept {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.degenerate(); }) &&
         std::all_of(values_.begin(), values_.end(), [](const ExtInterval& v) { return v.degenerate(); });
}

PiecewiseIntervalFn PiecewiseIntervalFn::normalized() const {
  std::vector<double> bps;
  std::vector<Piece> pieces{pieces_.front()};
  std::vector<ExtInterval> values;
  ExtReal current_left = domain_.left;
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    const double b = breakpoints_[k];
    const Piece& next = pieces_[k + 1];
    const Piece& cur = pieces.back();
    bool merge = cur == next && cur.lower.admissible_on(current_left, piece_right(k + 1));
    if (merge) {
      const ExtInterval v = values_[k];
      merge = v.lower() == cur.lower.limit(b, Side::left) && v.lower() == cur.lower.limit(b, Side::right) &&
              v.upper() == cur.upper.limit(b, Side::left) && v.upper() == cur.upper.limit(b, Side::right);
    }
    if (merge) continue;
    bps.push_back(b);
    values.push_back(values_[k]);
    pieces.push_back(next);
    current_left = ExtReal(b);
  }
  return PiecewiseIntervalFn(domain_, std::move(bps), std::move(pieces), std::move(values));
}

ExtInterval one_sided_limits(const PiecewiseIntervalFn& f, double x, Side side) { return f.one_sided_limit(x, side); }

void require_same_domain(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g) {
  if (!(f.domain() == g.domain())) throw PreconditionError("functions are defined on different domains");
}

PiecewiseIntervalFn merge_components(std::span<const ComponentSource> lower_sources, Reduce lower_op,
                                     std::span<const ComponentSource> upper_sources, Reduce upper_op) {
  if (lower_sources.empty() || upper_sources.empty()) throw PreconditionError("merge: empty function list");
  const Domain dom = lower_sources.front().fn->domain();
  for (auto group : {lower_sources, upper_sources}) {
    for (const auto& s : group) require_same_domain(*lower_sources.front().fn, *s.fn);
  }

  const auto bps = union_breakpoints(lower_sources, upper_sources);
  std::vector<double> out_bps;
  std::vector<Piece> out_pieces;
  std::vector<ExtInterval> out_values;

  auto value_at = [&](double x) {
    ExtReal lo = lower_sources.front().fn->eval(x, lower_sources.front().component);
    for (const auto& s : lower_sources.subspan(1)) lo = reduce(lo, s.fn->eval(x, s.component), lower_op);
    ExtReal hi = upper_sources.front().fn->eval(x, upper_sources.front().component);
    for (const auto& s : upper_sources.subspan(1)) hi = reduce(hi, s.fn->eval(x, s.component), upper_op);
    return tolerant_interval(lo, hi);
  };

  for (std::size_t k = 0; k <= bps.size(); ++k) {
    const ExtReal l = k == 0 ? dom.left : ExtReal(bps[k - 1]);
    const ExtReal r = k == bps.size() ? dom.right : ExtReal(bps[k]);
    if (k > 0) {
      out_bps.push_back(bps[k - 1]);
      out_values.push_back(value_at(bps[k - 1]));
    }
    const double mid = interior_point(l, r);
    std::vector<PieceExpr> lows;
    std::vector<PieceExpr> highs;
    for (const auto& s : lower_sources) add_unique(lows, s.fn->pieces()[s.fn->piece_index(mid)][s.component]);
    for (const auto& s : upper_sources) add_unique(highs, s.fn->pieces()[s.fn->piece_index(mid)][s.component]);

    std::vector<double> cuts;
    collect_crossings(lows, l, r, cuts);
    collect_crossings(highs, l, r, cuts);
    std::sort(cuts.begin(), cuts.end());
    std::vector<double> kept;
    for (double c : cuts) {
      if (l.is_finite() && close_points(c, l.value(), kRootTolerance)) continue;
      if (r.is_finite() && close_points(c, r.value(), kRootTolerance)) continue;
      if (!kept.empty() && close_points(kept.back(), c, kRootTolerance)) continue;
      kept.push_back(c);
    }

    // winners on each sub-segment between cuts
    std::vector<std::pair<std::size_t, std::size_t>> wins;
    for (std::size_t s = 0; s <= kept.size(); ++s) {
      const ExtReal sl = s == 0 ? l : ExtReal(kept[s - 1]);
      const ExtReal sr = s == kept.size() ? r : ExtReal(kept[s]);
      const double m = interior_point(sl, sr);
      wins.emplace_back(winner(lows, lower_op, m), winner(highs, upper_op, m));
    }
    out_pieces.push_back(Piece{lows[wins[0].first], highs[wins[0].second]});
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (wins[s + 1] == wins[s]) continue;
      const double c = kept[s];
      const PieceExpr& ll = lows[wins[s].first];
      const PieceExpr& lr = lows[wins[s + 1].first];
      const PieceExpr& hl = highs[wins[s].second];
      const PieceExpr& hr = highs[wins[s + 1].second];
      // Completed value at a crossing: both one-sided limits of each component are enclosed.
      // Between point-valued pieces the limits agree up to rounding, so keep a point.
      out_bps.push_back(c);
      const ExtReal lo = min(ll.eval(c), lr.eval(c));
      if (ll == hl && lr == hr) {
        out_values.emplace_back(lo);
      } else {
        out_values.push_back(tolerant_interval(lo, max(hl.eval(c), hr.eval(c))));
      }
      out_pieces.push_back(Piece{lr, hr});
    }
  }
  return PiecewiseIntervalFn(dom, std::move(out_bps), std::move(out_pieces), std::move(out_values));
}

PiecewiseIntervalFn pointwise_envelope(std::span<const PiecewiseIntervalFn> fs, Reduce lower_op, Reduce upper_op) {
  if (fs.empty()) throw PreconditionError("pointwise envelope of an empty family");
  std::vector<ComponentSource> lows;
  std::vector<ComponentSource> highs;
  for (const auto& f : fs) {
    lows.push_back({&f, Component::lower});
    highs.push_back({&f, Component::upper});
  }
  return merge_components(lows, lower_op, highs, upper_op);
}

PiecewiseIntervalFn pointwise_max(std::span<const PiecewiseIntervalFn> fs) {
  return pointwise_envelope(fs, Reduce::max, Reduce::max);
}

PiecewiseIntervalFn pointwise_min(std::span<const PiecewiseIntervalFn> fs) {
  return pointwise_envelope(fs, Reduce::min, Reduce::min);
}

PiecewiseIntervalFn with_components(const PiecewiseIntervalFn& lower_source, const PiecewiseIntervalFn& upper_source) {
  const ComponentSource lo{&lower_source, Component::lower};
  const ComponentSource hi{&upper_source, Component::upper};
  return merge_components({&lo, 1}, Reduce::min, {&hi, 1}, Reduce::max);
}

PiecewiseIntervalFn component_fn(const PiecewiseIntervalFn& f, Component c) {
  const ComponentSource s{&f, c};
  return merge_components({&s, 1}, Reduce::min, {&s, 1}, Reduce::max);
}

Comparison fn_equal(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol) {
  require_same_domain(f, g);
  const auto nf = f.normalized();
  const auto ng = g.normalized();
  if (nf == ng) return {true, ComparisonMode::structural};
  return sampled_equal(nf, ng, tol);
}

bool fn_leq(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol, std::span<const double> skip) {
  require_same_domain(f, g);
  return component_leq(f, Component::lower, g, Component::lower, tol, skip) &&
         component_leq(f, Component::upper, g, Component::upper, tol, skip);
}

bool fn_subseteq(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol,
                 std::span<const double> skip) {
  require_same_domain(f, g);
  return component_leq(g, Component::lower, f, Component::lower, tol, skip) &&
         component_leq(f, Component::upper, g, Component::upper, tol, skip);
}

bool fn_agree(const PiecewiseIntervalFn& f, const PiecewiseIntervalFn& g, double tol, std::span<const double> skip) {
  return fn_leq(f, g, tol, skip) && fn_leq(g, f, tol, skip);
}

bool approx_leq(ExtReal a, ExtReal b, double tol) noexcept {
  if (a <= b) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  return a.value() - b.value() <= tol * std::max(scale_of(a.value()), scale_of(b.value()));
}

bool approx_equal(ExtReal a, ExtReal b, double tol) noexcept { return approx_leq(a, b, tol) && approx_leq(b, a, tol); }

bool approx_equal(const ExtInterval& a, const ExtInterval& b, double tol) noexcept {
  return approx_equal(a.lower(), b.lower(), tol) && approx_equal(a.upper(), b.upper(), tol);
}

}  // namespace ifc
