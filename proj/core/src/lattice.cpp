#include "ifc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ifc/baire.hpp"
#include "ifc/classify.hpp"
#include "ifc/roots.hpp"

namespace ifc {
namespace {

void require_family(std::span<const PiecewiseIntervalFn> fs, const char* what) {
  if (fs.empty()) throw PreconditionError(std::string(what) + ": empty family");
  for (const auto& f : fs) require_same_domain(fs.front(), f);
}

void require_h_continuous(std::span<const PiecewiseIntervalFn> fs, const char* what) {
  for (const auto& f : fs) {
    if (!is_H_continuous(f)) throw PreconditionError(std::string(what) + ": every member must be H-continuous");
  }
}

void require_d_continuous(std::span<const PiecewiseIntervalFn> fs, const char* what) {
  for (const auto& f : fs) {
    if (!is_D_continuous(f)) throw PreconditionError(std::string(what) + ": every member must be D-continuous");
  }
}

void require_point_valued(const PiecewiseIntervalFn& f, const char* what) {
  if (!f.is_point_valued()) throw PreconditionError(std::string(what) + ": input must be point valued");
}

// x -> op over the chosen component of every member, as a point-valued function.
PiecewiseIntervalFn component_envelope(std::span<const PiecewiseIntervalFn> fs, Component c, Reduce op) {
  std::vector<ComponentSource> src;
  for (const auto& f : fs) src.push_back({&f, c});
  // Crossing values may widen by rounding; keep only the lower component.
  return component_fn(merge_components(src, op, src, op), Component::lower);
}

}  // namespace

PiecewiseIntervalFn sup_H(std::span<const PiecewiseIntervalFn> fs) {
  require_family(fs, "sup_H");
  require_h_continuous(fs, "sup_H");
  return sup_from_pointwise(component_envelope(fs, Component::upper, Reduce::max));
}

PiecewiseIntervalFn inf_H(std::span<const PiecewiseIntervalFn> fs) {
  require_family(fs, "inf_H");
  require_h_continuous(fs, "inf_H");
  return inf_from_pointwise(component_envelope(fs, Component::lower, Reduce::min));
}

PiecewiseIntervalFn sup_from_pointwise(const PiecewiseIntervalFn& psi) {
  require_point_valued(psi, "sup_from_pointwise");
  return graph_completion(upper_baire(psi));
}

PiecewiseIntervalFn inf_from_pointwise(const PiecewiseIntervalFn& phi) {
  require_point_valued(phi, "inf_from_pointwise");
  return graph_completion(lower_baire(phi));
}

PiecewiseIntervalFn interval_hull(const PiecewiseIntervalFn& phi, const PiecewiseIntervalFn& psi) {
  require_point_valued(phi, "interval_hull");
  require_point_valued(psi, "interval_hull");
  require_same_domain(phi, psi);
  if (!fn_leq(phi, psi)) throw PreconditionError("interval_hull: phi <= psi fails somewhere");
  return with_components(lower_baire(phi), upper_baire(psi)).normalized();
}

PiecewiseIntervalFn inclusion_join(std::span<const PiecewiseIntervalFn> fs) {
  require_family(fs, "inclusion_join");
  require_d_continuous(fs, "inclusion_join");
  return normalize_G(pointwise_envelope(fs, Reduce::min, Reduce::max));
}

PiecewiseIntervalFn inclusion_meet(std::span<const PiecewiseIntervalFn> fs) {
  require_family(fs, "inclusion_meet");
  require_d_continuous(fs, "inclusion_meet");
  const auto lo = component_envelope(fs, Component::lower, Reduce::max);
  const auto hi = component_envelope(fs, Component::upper, Reduce::min);
  if (!fn_leq(lo, hi)) throw PreconditionError("inclusion_meet: the members have empty intersection somewhere");
  return normalize_G(with_components(lo, hi));
}

PiecewiseIntervalFn continuous_minorant(const PiecewiseIntervalFn& f, double x, double eps,
                                        const MinorantOptions& options) {
  if (!(eps > 0.0)) throw PreconditionError("continuous_minorant: eps must be positive");
  if (!f.domain().contains(x)) throw PreconditionError("continuous_minorant: point outside the domain");
  if (!is_H_continuous(f)) throw PreconditionError("continuous_minorant: input must be H-continuous");
  const auto lower = component_fn(f, Component::lower).normalized();
  for (const auto& v : lower.values()) {
    if (v.lower().is_neg_inf()) throw PreconditionError("continuous_minorant: lower component reaches -inf");
  }
  for (const auto& p : lower.pieces()) {
    if (p.lower.is_infinite_constant() && p.lower.eval(0.0).is_neg_inf()) {
      throw PreconditionError("continuous_minorant: lower component reaches -inf");
    }
  }

  const ExtReal fx = lower.eval(x, Component::lower);
  const double target = fx.is_pos_inf() ? options.cap : std::min(fx.value() - eps, options.cap);
  const Domain dom = f.domain();

  std::vector<PiecewiseIntervalFn> parts{lower, PiecewiseIntervalFn::constant(dom, ExtReal(target))};
  const auto bps = lower.breakpoints();
  double slope = 1.0;
  for (std::size_t k = 0; k < bps.size(); ++k) {
    const ExtReal v = lower.values()[k].lower();
    if (!v.is_finite() || bps[k] == x) continue;
    slope = std::max(slope, 2.0 * (target - v.value()) / std::abs(x - bps[k]));
  }
  for (std::size_t k = 0; k < bps.size(); ++k) {
    const ExtReal v = lower.values()[k].lower();
    if (!v.is_finite()) continue;
    const double b = bps[k];
    const auto down = PieceExpr::affine(-slope, v.value() + slope * b);
    const auto up = PieceExpr::affine(slope, v.value() - slope * b);
    parts.emplace_back(dom, std::vector<double>{b}, std::vector<Piece>{{down, down}, {up, up}},
                       std::vector<ExtInterval>{v});
  }
  return pointwise_min(parts).normalized();
}

bool minimal_completion_check(const PiecewiseIntervalFn& f, std::span<const double> ms,
                              const MinimalCompletionOptions& options) {
  if (ms.empty()) return true;
  std::vector<double> floors(ms.begin(), ms.end());
  std::sort(floors.begin(), floors.end(), std::greater<>());
  const auto xs = interior_samples(f.domain().left, f.domain().right, options.samples);

  std::vector<PiecewiseIntervalFn> hs;
  for (double m : floors) {
    const std::vector<PiecewiseIntervalFn> pair{f, PiecewiseIntervalFn::constant(f.domain(), ExtReal(m))};
    auto h = sup_H(pair);
    if (!fn_leq(f, h)) return false;
    for (double x : xs) {
      const ExtReal hx = h.eval(x, Component::lower);
      if (hx.is_pos_inf()) continue;
      const auto g = continuous_minorant(h, x, options.eps);
      if (!fn_leq(g, h)) return false;
      if (!approx_leq(hx - ExtReal(options.eps), g.eval(x, Component::lower), 1e-9)) return false;
    }
    hs.push_back(std::move(h));
  }
  for (std::size_t k = 1; k < hs.size(); ++k) {
    for (double x : xs) {
      if (!leq(hs[k].eval(x), hs[k - 1].eval(x))) return false;
    }
  }
  const double lowest = floors.back();
  for (double x : xs) {
    if (f.eval(x, Component::lower) > ExtReal(lowest) && !approx_equal(hs.back().eval(x), f.eval(x))) return false;
  }
  return true;
}

}  // namespace ifc
