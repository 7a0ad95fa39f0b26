#pragma once

#include <optional>
#include <string>

#include "sascone/core_types.hpp"
#include "sascone/rational.hpp"

namespace sascone::cone {

// Open positivity set of the w-cone in the ratio coordinate x = v1/v2.
struct PositivityRange {
  enum class Kind { Empty, Entire, HalfLine, Interval };

  Kind kind = Kind::Empty;
  Rational lower;  // HalfLine, Interval
  Rational upper;  // Interval

  static PositivityRange empty() { return {}; }
  static PositivityRange entire() { return {Kind::Entire, {}, {}}; }
  static PositivityRange half_line(Rational lo) { return {Kind::HalfLine, lo, {}}; }
  static PositivityRange interval(Rational lo, Rational hi) {
    return {Kind::Interval, lo, hi};
  }

  bool contains(const Rational& ratio) const;
  bool contains(Int v1, Int v2) const;
  // Ratio equals an open endpoint.
  bool on_boundary(const Rational& ratio) const;
  // Distance from the ratio to the nearest finite endpoint; nullopt when the
  // range has no finite endpoint (Empty, Entire).
  std::optional<Rational> distance_to_boundary(const Rational& ratio) const;

  friend bool operator==(const PositivityRange&, const PositivityRange&) = default;
};

std::string to_string(PositivityRange::Kind kind);

enum class TypeVerdict { Positive, Indefinite };

std::string to_string(TypeVerdict verdict);

// Exact positivity range on the w-cone. For a Fano base with index I and
// rho = l2 I / (l1 w2):
//   l2 I >= l1 w1        -> Entire
//   rho < 1              -> (w1/w2 - rho, (w1/w2) / (1 - rho))
//   1 <= rho < w1/w2     -> (w1/w2 - rho, inf)
// Non-Fano bases give Empty.
PositivityRange positivity_range(const JoinParams& join);

TypeVerdict classify_ray(const JoinParams& join, const ReebRay& v);

struct WholeConeRules {
  WideInt c1_coeff = 0;
  // c1(D) = 0 forces the entire cone positive.
  bool c1_zero = false;
  bool c1_positive = false;
  // l2 I >= l1 w1.
  bool entire_by_index = false;
  // Entire predicted by the c1 rules or by the index test.
  bool predicted_entire = false;
  bool range_is_entire = false;
  // The c1-based rules never contradict positivity_range.
  bool consistent = false;
};

// Throws BaseMismatch unless the base is CP^p.
WholeConeRules whole_cone_rules(Int p, const JoinParams& join);

// Signed Einstein-Hilbert functional sign(S) |S|^{n+1} / V^n for a
// (2n+1)-dimensional Sasaki manifold. Throws NonpositiveVolume.
double h1_signed(double total_scalar, double volume, int n_half);

}  // namespace sascone::cone
