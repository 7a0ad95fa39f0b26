#include "sascone/rational.hpp"

#include <ostream>

#include "sascone/error.hpp"

namespace sascone {

Rational::Rational(Int num, Int den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(WideInt num, WideInt den) {
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const WideInt g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num, "rational numerator");
  r.den_ = narrow(den, "rational denominator");
  return r;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<WideInt>(num_), den_);
}

Rational Rational::reciprocal() const {
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(
      static_cast<WideInt>(a.num_) * b.den_ + static_cast<WideInt>(b.num_) * a.den_,
      static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<WideInt>(a.num_) * b.num_,
                             static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw Error(ErrorKind::InvalidArgument, "division by zero rational");
  }
  return Rational::from_wide(static_cast<WideInt>(a.num_) * b.den_,
                             static_cast<WideInt>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const WideInt lhs = static_cast<WideInt>(a.num_) * b.den_;
  const WideInt rhs = static_cast<WideInt>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::strong_ordering compare_ratio(Int p, Int q, const Rational& r) {
  const WideInt lhs = static_cast<WideInt>(p) * r.den();
  const WideInt rhs = static_cast<WideInt>(r.num()) * q;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::InvalidArgument,
                "zero denominator in '" + text + "'");
  }
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace sascone
