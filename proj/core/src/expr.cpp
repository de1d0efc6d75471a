#include "ifc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ifc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ValidationError(std::string("PieceExpr: ") + what + " must be finite");
}

double signed_inf(double sign) { return sign < 0 ? -kInf : kInf; }

double sgn(double v) { return v < 0 ? -1.0 : (v > 0 ? 1.0 : 0.0); }

}  // namespace

PieceExpr PieceExpr::constant(ExtReal c) { return PieceExpr(ConstExpr{c}); }

PieceExpr PieceExpr::affine(double slope, double intercept) {
  require_finite(slope, "affine slope");
  require_finite(intercept, "affine intercept");
  if (slope == 0.0) return constant(intercept);
  return PieceExpr(AffineExpr{slope, ExtReal(intercept).value()});
}

PieceExpr PieceExpr::power(int exponent, double coeff) {
  require_finite(coeff, "power coefficient");
  if (exponent == 0) throw ValidationError("PieceExpr: power exponent must be nonzero");
  if (coeff == 0.0) return constant(0.0);
  if (exponent == 1) return affine(coeff, 0.0);
  return PieceExpr(PowerExpr{exponent, coeff});
}

PieceExpr PieceExpr::sigmoid(double rate, double scale, double offset) {
  require_finite(rate, "sigmoid rate");
  require_finite(scale, "sigmoid scale");
  require_finite(offset, "sigmoid offset");
  if (!(rate > 0.0)) throw ValidationError("PieceExpr: sigmoid rate must be positive");
  if (scale == 0.0) return constant(offset);
  return PieceExpr(SigmoidExpr{rate, scale, ExtReal(offset).value()});
}

bool PieceExpr::is_infinite_constant() const noexcept {
  const auto* c = std::get_if<ConstExpr>(&v_);
  return c != nullptr && !c->value.is_finite();
}

ExtReal PieceExpr::eval(double x) const {
  return std::visit(Overloaded{
                        [](const ConstExpr& c) { return c.value; },
                        [x](const AffineExpr& a) { return ExtReal(a.slope * x + a.intercept); },
                        [x](const PowerExpr& p) {
                          if (x == 0.0) {
                            if (p.exponent > 0) return ExtReal(0.0);
                            throw PreconditionError("PieceExpr: power with negative exponent evaluated at 0");
                          }
                          return ExtReal(p.coeff * std::pow(x, p.exponent));
                        },
                        [x](const SigmoidExpr& s) { return ExtReal(s.scale * std::tanh(0.5 * s.rate * x) + s.offset); },
                    },
                    v_);
}

ExtReal PieceExpr::limit(ExtReal p, Side side) const {
  if (p.is_finite()) {
    const double x = p.value();
    if (const auto* pw = std::get_if<PowerExpr>(&v_); pw != nullptr && x == 0.0) {
      if (pw->exponent > 0) return 0.0;
      // x^n with n < 0 blows up; from the left the sign alternates with parity.
      const bool odd = (pw->exponent % 2) != 0;
      const double base = (side == Side::right || !odd) ? 1.0 : -1.0;
      return signed_inf(base * sgn(pw->coeff));
    }
    return eval(x);
  }
  const bool at_pos = p.is_pos_inf();
  return std::visit(Overloaded{
                        [](const ConstExpr& c) { return c.value; },
                        [at_pos](const AffineExpr& a) {
                          return ExtReal(signed_inf((at_pos ? 1.0 : -1.0) * sgn(a.slope)));
                        },
                        [at_pos](const PowerExpr& pw) {
                          if (pw.exponent < 0) return ExtReal(0.0);
                          const bool odd = (pw.exponent % 2) != 0;
                          const double base = (at_pos || !odd) ? 1.0 : -1.0;
                          return ExtReal(signed_inf(base * sgn(pw.coeff)));
                        },
                        [at_pos](const SigmoidExpr& s) { return ExtReal((at_pos ? s.scale : -s.scale) + s.offset); },
                    },
                    v_);
}

bool PieceExpr::admissible_on(ExtReal l, ExtReal r) const noexcept {
  if (!(l < r)) return false;
  if (kind() != ExprKind::power) return true;
  return l >= ExtReal(0.0) || r <= ExtReal(0.0);
}

int PieceExpr::direction(ExtReal l, ExtReal /*r*/) const noexcept {
  return std::visit(Overloaded{
                        [](const ConstExpr&) { return 0; },
                        [](const AffineExpr& a) { return a.slope > 0 ? 1 : -1; },
                        [l](const PowerExpr& p) {
                          // d/dx coeff x^n = coeff n x^{n-1}; x^{n-1} < 0 only for x < 0 and n even.
                          const bool negative_side = l < ExtReal(0.0);
                          double s = sgn(p.coeff) * (p.exponent > 0 ? 1.0 : -1.0);
                          if (negative_side && p.exponent % 2 == 0) s = -s;
                          return s > 0 ? 1 : -1;
                        },
                        [](const SigmoidExpr& s) { return s.scale > 0 ? 1 : -1; },
                    },
                    v_);
}

double PieceExpr::derivative_bound(double lo, double hi) const {
  const auto [a, b] = derivative_range(lo, hi);
  return std::max(std::abs(a), std::abs(b));
}

std::pair<double, double> PieceExpr::derivative_range(double lo, double hi) const {
  const auto ends = [](double a, double b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  return std::visit(Overloaded{
                        [](const ConstExpr&) { return std::make_pair(0.0, 0.0); },
                        [](const AffineExpr& a) { return std::make_pair(a.slope, a.slope); },
                        [&](const PowerExpr& p) {
                          // coeff n x^{n-1} is monotone on either side of 0.
                          const double k = p.coeff * p.exponent;
                          return ends(k * std::pow(lo, p.exponent - 1), k * std::pow(hi, p.exponent - 1));
                        },
                        [&](const SigmoidExpr& s) {
                          // scale rate / 2 sech^2(rate x / 2): unimodal with its peak at 0.
                          const auto d = [&s](double x) {
                            const double t = std::tanh(0.5 * s.rate * x);
                            return s.scale * 0.5 * s.rate * (1.0 - t * t);
                          };
                          if (!(lo < 0.0 && 0.0 < hi)) return ends(d(lo), d(hi));
                          const double tail = s.scale > 0 ? std::min(d(lo), d(hi)) : std::max(d(lo), d(hi));
                          return ends(d(0.0), tail);
                        },
                    },
                    v_);
}

std::string PieceExpr::to_string() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const ConstExpr& c) { os << c.value; },
                 [&](const AffineExpr& a) { os << a.slope << "*x + " << a.intercept; },
                 [&](const PowerExpr& p) { os << p.coeff << "*x^" << p.exponent; },
                 [&](const SigmoidExpr& s) {
                   os << s.scale << "*sigmoid(" << s.rate << "*x) + " << s.offset;
                 },
             },
             v_);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PieceExpr& e) { return os << e.to_string(); }

}  // namespace ifc
