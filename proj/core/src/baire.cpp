#include "ifc/baire.hpp"

#include <algorithm>

#include "ifc/roots.hpp"

namespace ifc {
namespace {

PiecewiseIntervalFn baire(const PiecewiseIntervalFn& f, const CofiniteDense& d, Component c) {
  if (!(d.domain() == f.domain())) throw PreconditionError("dense subset and function live on different domains");
  const Reduce op = c == Component::lower ? Reduce::min : Reduce::max;
  auto pick = [op](ExtReal a, ExtReal b) { return op == Reduce::min ? min(a, b) : max(a, b); };

  std::vector<double> bps(f.breakpoints().begin(), f.breakpoints().end());
  bps.insert(bps.end(), d.excluded().begin(), d.excluded().end());
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  std::vector<Piece> pieces;
  std::vector<ExtInterval> values;
  pieces.reserve(bps.size() + 1);
  values.reserve(bps.size());
  for (std::size_t k = 0; k <= bps.size(); ++k) {
    const ExtReal l = k == 0 ? f.domain().left : ExtReal(bps[k - 1]);
    const ExtReal r = k == bps.size() ? f.domain().right : ExtReal(bps[k]);
    const PieceExpr& e = f.pieces()[f.piece_index(interior_point(l, r))][c];
    pieces.push_back(Piece{e, e});
  }
  for (double b : bps) {
    ExtReal v = pick(f.one_sided_limit(b, Side::left, c), f.one_sided_limit(b, Side::right, c));
    if (d.contains(b)) v = pick(v, f.eval(b, c));
    values.emplace_back(v);
  }
  return PiecewiseIntervalFn(f.domain(), std::move(bps), std::move(pieces), std::move(values)).normalized();
}

}  // namespace

PiecewiseIntervalFn lower_baire(const PiecewiseIntervalFn& f, const CofiniteDense& d) {
  return baire(f, d, Component::lower);
}

PiecewiseIntervalFn lower_baire(const PiecewiseIntervalFn& f) {
  return lower_baire(f, CofiniteDense::full(f.domain()));
}

PiecewiseIntervalFn upper_baire(const PiecewiseIntervalFn& f, const CofiniteDense& d) {
  return baire(f, d, Component::upper);
}

PiecewiseIntervalFn upper_baire(const PiecewiseIntervalFn& f) {
  return upper_baire(f, CofiniteDense::full(f.domain()));
}

PiecewiseIntervalFn graph_completion(const PiecewiseIntervalFn& f, const CofiniteDense& d) {
  return with_components(lower_baire(f, d), upper_baire(f, d)).normalized();
}

PiecewiseIntervalFn graph_completion(const PiecewiseIntervalFn& f) {
  return graph_completion(f, CofiniteDense::full(f.domain()));
}

PiecewiseIntervalFn normalize_G(const PiecewiseIntervalFn& f) {
  const auto lower = lower_baire(upper_baire(lower_baire(f)));
  const auto upper = upper_baire(lower_baire(upper_baire(f)));
  return with_components(lower, upper).normalized();
}

PiecewiseIntervalFn hcont_lower_completion(const PiecewiseIntervalFn& f) {
  return graph_completion(upper_baire(lower_baire(f)));
}

PiecewiseIntervalFn hcont_upper_completion(const PiecewiseIntervalFn& f) {
  return graph_completion(lower_baire(upper_baire(f)));
}

PiecewiseIntervalFn lsc_envelope(const PiecewiseIntervalFn& f) { return lower_baire(f); }

PiecewiseIntervalFn usc_envelope(const PiecewiseIntervalFn& f) { return upper_baire(f); }

bool is_normal_lsc(const PiecewiseIntervalFn& phi) {
  if (!phi.is_point_valued()) throw PreconditionError("is_normal_lsc: input must be point valued");
  return fn_equal(lower_baire(phi), phi).holds && fn_equal(lower_baire(upper_baire(phi)), phi).holds;
}

bool is_normal_usc(const PiecewiseIntervalFn& phi) {
  if (!phi.is_point_valued()) throw PreconditionError("is_normal_usc: input must be point valued");
  return fn_equal(upper_baire(phi), phi).holds && fn_equal(upper_baire(lower_baire(phi)), phi).holds;
}

}  // namespace ifc
