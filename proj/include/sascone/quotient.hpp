#pragma once

#include "sascone/core_types.hpp"
#include "sascone/rational.hpp"

namespace sascone::quotient {

// Log-pair data (S_n, Delta) of the quasi-regular quotient along a ray:
// s = gcd(|w2 v1 - w1 v2|, l2), m = l2 / s, m_i = m v_i,
// n = l1 (w1 v2 - w2 v1) / s.
struct QuotientData {
  Int s = 1;
  Int n = 0;
  Int m = 1;
  Int m1 = 1;
  Int m2 = 1;

  friend bool operator==(const QuotientData&, const QuotientData&) = default;
};

// w1 v2 - w2 v1; its sign selects the branch of the positivity inequality.
WideInt weight_determinant(const JoinParams& join, const ReebRay& v);

// Throws ProductCase when v = w (n = 0).
QuotientData quotient_data(const JoinParams& join, const ReebRay& v);

// Orbifold first Chern class of (S_n, Delta) is positive. Integer form of the
// inequalities; false for non-Fano bases. Throws NonMonotoneBase.
bool orb_fano_predicate(const JoinParams& join, const ReebRay& v);

// The two scalars of c1^orb against the admissible class:
//   a = 2 b0 / n + 1/m1 - 1/m2,  c = 1/m1 + 1/m2,
// positive iff a > c (n > 0) or a < -c (n < 0).
struct OrbC1Report {
  Rational a;
  Rational c;
  bool positive = false;
};

OrbC1Report orb_c1_report(const JoinParams& join, const ReebRay& v,
                          const QuotientData& data);

}  // namespace sascone::quotient
