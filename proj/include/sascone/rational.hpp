#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "sascone/integer.hpp"

namespace sascone {

// Exact fraction in lowest terms with a positive denominator. Arithmetic is
// carried out in WideInt and narrowed back; results outside Int throw
// Error(Overflow) rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  int sign() const { return (num_ > 0) - (num_ < 0); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  // "a/b", or "a" when the denominator is 1.
  std::string to_string() const;

  // Accepts "a", "a/b", "-a/b" (surrounding whitespace not allowed).
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(WideInt num, WideInt den);

  Int num_ = 0;
  Int den_ = 1;
};

// Compares p/q (q > 0) against r without constructing a Rational.
std::strong_ordering compare_ratio(Int p, Int q, const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sascone
