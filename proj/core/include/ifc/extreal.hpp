#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

#include "ifc/error.hpp"

namespace ifc {

/// An extended real number: a finite double, +inf or -inf. NaN is rejected
/// at construction and negative zero is folded into +0 so that equal values
/// have a single bit pattern.
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  ExtReal(double v);

  static constexpr ExtReal pos_inf() noexcept { return ExtReal(std::numeric_limits<double>::infinity(), Unchecked{}); }
  static constexpr ExtReal neg_inf() noexcept { return ExtReal(-std::numeric_limits<double>::infinity(), Unchecked{}); }

  constexpr double value() const noexcept { return v_; }
  constexpr bool is_finite() const noexcept { return v_ > -kInf && v_ < kInf; }
  constexpr bool is_pos_inf() const noexcept { return v_ == kInf; }
  constexpr bool is_neg_inf() const noexcept { return v_ == -kInf; }

  friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) noexcept { return a.v_ <=> b.v_; }

  // (+inf) + (-inf) throws ValidationError.
  friend ExtReal operator+(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a, ExtReal b);
  friend ExtReal operator-(ExtReal a) { return ExtReal(-a.v_); }

  std::string to_string() const;

 private:
  struct Unchecked {};
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr ExtReal(double v, Unchecked) noexcept : v_(v) {}

  double v_ = 0.0;
};

inline ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }
inline ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, ExtReal x);

/// A closed extended interval [lower, upper] with lower <= upper.
class ExtInterval {
 public:
  ExtInterval() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  ExtInterval(ExtReal point) : lower_(point), upper_(point) {}
  ExtInterval(ExtReal lower, ExtReal upper);

  ExtReal lower() const noexcept { return lower_; }
  ExtReal upper() const noexcept { return upper_; }
  bool degenerate() const noexcept { return lower_ == upper_; }
  bool contains(ExtReal x) const noexcept { return lower_ <= x && x <= upper_; }
  bool finite() const noexcept { return lower_.is_finite() && upper_.is_finite(); }

  friend bool operator==(const ExtInterval&, const ExtInterval&) = default;

  std::string to_string() const;

 private:
  ExtReal lower_;
  ExtReal upper_;
};

std::ostream& operator<<(std::ostream& os, const ExtInterval& a);

// w(a): upper - lower, with 0 for [+inf,+inf] / [-inf,-inf] and +inf whenever
// a proper interval has an infinite endpoint.
ExtReal width(const ExtInterval& a) noexcept;

// Componentwise order: a <= b iff lower(a) <= lower(b) and upper(a) <= upper(b).
bool leq(const ExtInterval& a, const ExtInterval& b) noexcept;
bool subseteq(const ExtInterval& a, const ExtInterval& b) noexcept;
// upper(a) <= lower(b).
bool strictly_precedes(const ExtInterval& a, const ExtInterval& b) noexcept;
ExtInterval hull2(const ExtInterval& a, const ExtInterval& b) noexcept;

}  // namespace ifc
