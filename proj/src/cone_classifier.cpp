#include "sascone/cone_classifier.hpp"

#include <cmath>

#include "sascone/error.hpp"
#include "sascone/topology.hpp"

namespace sascone::cone {

bool PositivityRange::contains(const Rational& ratio) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Entire: return ratio.sign() > 0;
    case Kind::HalfLine: return ratio > lower;
    case Kind::Interval: return ratio > lower && ratio < upper;
  }
  return false;
}

bool PositivityRange::contains(Int v1, Int v2) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Entire: return true;
    case Kind::HalfLine: return compare_ratio(v1, v2, lower) > 0;
    case Kind::Interval:
      return compare_ratio(v1, v2, lower) > 0 && compare_ratio(v1, v2, upper) < 0;
  }
  return false;
}

bool PositivityRange::on_boundary(const Rational& ratio) const {
  switch (kind) {
    case Kind::Empty:
    case Kind::Entire: return false;
    case Kind::HalfLine: return ratio == lower;
    case Kind::Interval: return ratio == lower || ratio == upper;
  }
  return false;
}

std::optional<Rational> PositivityRange::distance_to_boundary(
    const Rational& ratio) const {
  auto abs_diff = [](const Rational& a, const Rational& b) {
    Rational d = a - b;
    return d.sign() < 0 ? -d : d;
  };
  switch (kind) {
    case Kind::Empty:
    case Kind::Entire: return std::nullopt;
    case Kind::HalfLine: return abs_diff(ratio, lower);
    case Kind::Interval: return std::min(abs_diff(ratio, lower), abs_diff(ratio, upper));
  }
  return std::nullopt;
}

std::string to_string(PositivityRange::Kind kind) {
  switch (kind) {
    case PositivityRange::Kind::Empty: return "empty";
    case PositivityRange::Kind::Entire: return "entire";
    case PositivityRange::Kind::HalfLine: return "half_line";
    case PositivityRange::Kind::Interval: return "interval";
  }
  return "unknown";
}

std::string to_string(TypeVerdict verdict) {
  return verdict == TypeVerdict::Positive ? "positive" : "indefinite";
}

PositivityRange positivity_range(const JoinParams& join) {
  if (!join.base().monotone) {
    throw Error(ErrorKind::NonMonotoneBase,
                "positivity range requires a monotone base");
  }
  const Int index = join.base().c1_coeff;
  if (index <= 0) return PositivityRange::empty();

  const Int l1 = join.l1(), l2 = join.l2(), w1 = join.w1(), w2 = join.w2();
  const WideInt scaled_index = static_cast<WideInt>(l2) * index;
  const WideInt l1w1 = static_cast<WideInt>(l1) * w1;
  const WideInt l1w2 = static_cast<WideInt>(l1) * w2;

  // Equality l2 I = l1 w1 puts the lower bound at 0, so every ray is positive.
  if (scaled_index >= l1w1) return PositivityRange::entire();

  // lower = w1/w2 - l2 I/(l1 w2) = (l1 w1 - l2 I) / (l1 w2) > 0 here.
  const Rational lower(narrow(l1w1 - scaled_index, "range lower"),
                       narrow(l1w2, "range lower"));
  if (scaled_index < l1w2) {
    // upper = (w1/w2) / (1 - l2 I/(l1 w2)) = l1 w1 / (l1 w2 - l2 I).
    const Rational upper(narrow(l1w1, "range upper"),
                         narrow(l1w2 - scaled_index, "range upper"));
    return PositivityRange::interval(lower, upper);
  }
  return PositivityRange::half_line(lower);
}

TypeVerdict classify_ray(const JoinParams& join, const ReebRay& v) {
  return positivity_range(join).contains(v.v1(), v.v2())
             ? TypeVerdict::Positive
             : TypeVerdict::Indefinite;
}

WholeConeRules whole_cone_rules(Int p, const JoinParams& join) {
  WholeConeRules rules;
  rules.c1_coeff = topology::c1_gamma_coeff_sphere_join(p, join);
  rules.c1_zero = rules.c1_coeff == 0;
  rules.c1_positive = rules.c1_coeff > 0;
  rules.entire_by_index = static_cast<WideInt>(join.l2()) * join.base().c1_coeff >=
                          static_cast<WideInt>(join.l1()) * join.w1();
  rules.predicted_entire = rules.c1_zero || rules.c1_positive || rules.entire_by_index;
  rules.range_is_entire =
      positivity_range(join).kind == PositivityRange::Kind::Entire;
  // c1 >= 0 implies Entire; the index test is an equivalence.
  const bool c1_rules_hold = !(rules.c1_zero || rules.c1_positive) || rules.range_is_entire;
  rules.consistent = c1_rules_hold && rules.entire_by_index == rules.range_is_entire;
  return rules;
}

double h1_signed(double total_scalar, double volume, int n_half) {
  if (!(volume > 0.0)) {
    throw Error(ErrorKind::NonpositiveVolume, "volume must be positive");
  }
  if (n_half < 1) {
    throw Error(ErrorKind::InvalidArgument, "n must be a positive integer");
  }
  if (total_scalar == 0.0) return 0.0;
  const double magnitude = std::pow(std::fabs(total_scalar), n_half + 1) /
                           std::pow(volume, n_half);
  return std::copysign(magnitude, total_scalar);
}

}  // namespace sascone::cone
