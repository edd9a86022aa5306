#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pcsf {

/// Exact rational scalar. All costs, penalties, durations and flow values
/// are kept in this type; there is no floating point anywhere in the solver.
using Rat = mpq_class;

/// Parses a nonnegative decimal string ("10", "0.5", "1.25") into an exact
/// rational. Throws std::invalid_argument on malformed input or more than
/// `max_frac_digits` fractional digits.
Rat rat_from_decimal(std::string_view text, int max_frac_digits = 9);

/// Prints `r` as an integer when the denominator is 1, otherwise as "p/q".
std::string rat_to_string(const Rat& r);

/// Rational extended with a single point at infinity. Used for arc
/// capacities; a flow amount is always a finite Rat.
class ExtRat {
 public:
  ExtRat() : finite_(true), value_(0) {}
  ExtRat(Rat value) : finite_(true), value_(std::move(value)) {}

  static ExtRat infinity() {
    ExtRat r;
    r.finite_ = false;
    return r;
  }

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }

  /// Precondition: is_finite().
  const Rat& value() const { return value_; }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.finite_ && b.finite_) return a.value_ < b.value_;
    return a.finite_ && !b.finite_;  // finite < infinity, infinity !< anything
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }

  friend const ExtRat& min(const ExtRat& a, const ExtRat& b) {
    return b < a ? b : a;
  }

 private:
  bool finite_;
  Rat value_;
};

std::string ext_rat_to_string(const ExtRat& r);

}  // namespace pcsf
