#include "ifc/extreal.hpp"

#include <charconv>
#include <cmath>

namespace ifc {

ExtReal::ExtReal(double v) : v_(v) {
  if (std::isnan(v)) throw ValidationError("ExtReal: NaN is not an extended real");
  if (v == 0.0) v_ = 0.0;
}

ExtReal operator+(ExtReal a, ExtReal b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw ValidationError("ExtReal: (+inf) + (-inf) is undefined");
  }
  return ExtReal(a.v_ + b.v_);
}

ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }

std::string ExtReal::to_string() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v_);
  return std::string(buf, res.ptr);
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << x.to_string(); }

ExtInterval::ExtInterval(ExtReal lower, ExtReal upper) : lower_(lower), upper_(upper) {
  if (upper < lower) {
    throw ValidationError("ExtInterval: lower " + lower.to_string() + " exceeds upper " + upper.to_string());
  }
}

std::string ExtInterval::to_string() const {
  if (degenerate()) return lower_.to_string();
  return "[" + lower_.to_string() + ", " + upper_.to_string() + "]";
}

std::ostream& operator<<(std::ostream& os, const ExtInterval& a) { return os << a.to_string(); }

ExtReal width(const ExtInterval& a) noexcept {
  if (a.degenerate()) return 0.0;
  if (!a.finite()) return ExtReal::pos_inf();
  return ExtReal(a.upper().value() - a.lower().value());
}

bool leq(const ExtInterval& a, const ExtInterval& b) noexcept {
  return a.lower() <= b.lower() && a.upper() <= b.upper();
}

bool subseteq(const ExtInterval& a, const ExtInterval& b) noexcept {
  return b.lower() <= a.lower() && a.upper() <= b.upper();
}

bool strictly_precedes(const ExtInterval& a, const ExtInterval& b) noexcept { return a.upper() <= b.lower(); }

ExtInterval hull2(const ExtInterval& a, const ExtInterval& b) noexcept {
  return ExtInterval(min(a.lower(), b.lower()), max(a.upper(), b.upper()));
}

}  // namespace ifc
