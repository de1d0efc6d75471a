#include "ifc/roots.hpp"

#include <algorithm>
#include <optional>

namespace ifc {
namespace {

bool inside(double x, ExtReal l, ExtReal r) { return l < ExtReal(x) && ExtReal(x) < r; }

// Maps t in (0, 1) onto (l, r).
double from_unit(double t, ExtReal l, ExtReal r) {
  if (l.is_finite() && r.is_finite()) return l.value() + t * (r.value() - l.value());
  if (l.is_finite()) {
    const double s = std::max(1.0, std::abs(l.value()));
    return l.value() + s * t / (1.0 - t);
  }
  if (r.is_finite()) {
    const double s = std::max(1.0, std::abs(r.value()));
    return r.value() - s * (1.0 - t) / t;
  }
  const double u = 2.0 * t - 1.0;
  return u / (1.0 - std::abs(u));
}

// Linear view of a constant or affine expression.
std::optional<std::pair<double, double>> as_linear(const PieceExpr& e) {
  if (e.kind() == ExprKind::affine) {
    const auto& a = e.as<AffineExpr>();
    return std::make_pair(a.slope, a.intercept);
  }
  if (e.kind() == ExprKind::constant && e.as<ConstExpr>().value.is_finite()) {
    return std::make_pair(0.0, e.as<ConstExpr>().value.value());
  }
  return std::nullopt;
}

std::optional<double> const_vs_power(double c, const PowerExpr& p, ExtReal l) {
  const double q = c / p.coeff;
  const bool positive_side = l >= ExtReal(0.0);
  const double inv = 1.0 / p.exponent;
  if (positive_side) {
    if (q <= 0) return std::nullopt;
    return std::pow(q, inv);
  }
  if (p.exponent % 2 != 0) {
    if (q >= 0) return std::nullopt;
    return -std::pow(-q, inv);
  }
  if (q <= 0) return std::nullopt;
  return -std::pow(q, inv);
}

std::optional<double> const_vs_sigmoid(double c, const SigmoidExpr& s) {
  const double t = (c - s.offset) / s.scale;
  if (!(std::abs(t) < 1.0)) return std::nullopt;
  return 2.0 * std::atanh(t) / s.rate;
}

std::vector<Crossing> closed_form(const PieceExpr& a, const PieceExpr& b, ExtReal l, ExtReal r, bool& solved) {
  solved = true;
  std::vector<Crossing> out;
  const auto la = as_linear(a);
  const auto lb = as_linear(b);
  if (la && lb) {
    if (la->first != lb->first) {
      const double x = (lb->second - la->second) / (la->first - lb->first);
      if (inside(x, l, r)) out.push_back({x, true});
    }
    return out;
  }
  const PieceExpr* c = nullptr;
  const PieceExpr* other = nullptr;
  if (a.is_constant()) {
    c = &a;
    other = &b;
  } else if (b.is_constant()) {
    c = &b;
    other = &a;
  }
  if (c != nullptr) {
    const double cv = c->as<ConstExpr>().value.value();
    std::optional<double> x;
    if (other->kind() == ExprKind::power) x = const_vs_power(cv, other->as<PowerExpr>(), l);
    if (other->kind() == ExprKind::sigmoid) x = const_vs_sigmoid(cv, other->as<SigmoidExpr>());
    if (x && inside(*x, l, r)) out.push_back({*x, true});
    return out;
  }
  solved = false;
  return out;
}

}  // namespace

double interior_point(ExtReal l, ExtReal r) {
  if (l.is_finite() && r.is_finite()) return 0.5 * (l.value() + r.value());
  if (l.is_finite()) return l.value() + std::max(1.0, std::abs(l.value()));
  if (r.is_finite()) return r.value() - std::max(1.0, std::abs(r.value()));
  return 0.0;
}

std::vector<double> interior_samples(ExtReal l, ExtReal r, int n) {
  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(n) + 16);
  for (int k = 1; k <= n; ++k) ts.push_back(static_cast<double>(k) / (n + 1));
  for (double e : {1e-3, 1e-5, 1e-7, 1e-9}) {
    ts.push_back(e);
    ts.push_back(1.0 - e);
  }
  std::vector<double> xs;
  xs.reserve(ts.size());
  for (double t : ts) {
    const double x = from_unit(t, l, r);
    if (std::isfinite(x) && inside(x, l, r)) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Crossing> crossings(const PieceExpr& a, const PieceExpr& b, ExtReal l, ExtReal r) {
  if (a == b) return {};
  if (a.is_infinite_constant() || b.is_infinite_constant()) return {};
  if (a.is_constant() && b.is_constant()) return {};

  bool solved = false;
  auto out = closed_form(a, b, l, r, solved);
  if (solved) return out;

  auto diff = [&](double x) { return a.eval(x).value() - b.eval(x).value(); };
  double last_x = 0.0;
  double last_d = 0.0;  // last nonzero difference seen
  bool have_last = false;
  double first_zero = 0.0;  // first exact zero since the last nonzero sample
  bool have_zero = false;
  for (double x : interior_samples(l, r, 512)) {
    const double d = diff(x);
    if (!std::isfinite(d)) {
      have_last = false;
      have_zero = false;
      continue;
    }
    if (d == 0.0) {
      if (have_last && !have_zero) {
        first_zero = x;
        have_zero = true;
      }
      continue;
    }
    if (have_last && ((last_d < 0) != (d < 0))) {
      out.push_back({have_zero ? first_zero : bisect(diff, last_x, x), false});
    }
    have_zero = false;
    last_x = x;
    last_d = d;
    have_last = true;
  }
  std::sort(out.begin(), out.end(), [](const Crossing& p, const Crossing& q) { return p.x < q.x; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Crossing& p, const Crossing& q) {
                          return std::abs(p.x - q.x) <= kRootTolerance * std::max(1.0, std::abs(p.x));
                        }),
            out.end());
  return out;
}

}  // namespace ifc
