#include "sascone/quotient.hpp"

#include <string>

#include "sascone/error.hpp"

namespace sascone::quotient {
namespace {

void require_monotone(const JoinParams& join) {
  if (!join.base().monotone) {
    throw Error(ErrorKind::NonMonotoneBase,
                "base '" + join.base().label +
                    "' is not monotone; only c1(N) = b0 [omega_N] is supported");
  }
}

}  // namespace

WideInt weight_determinant(const JoinParams& join, const ReebRay& v) {
  return static_cast<WideInt>(join.w1()) * v.v2() -
         static_cast<WideInt>(join.w2()) * v.v1();
}

QuotientData quotient_data(const JoinParams& join, const ReebRay& v) {
  const WideInt det = weight_determinant(join, v);
  if (det == 0) {
    // For coprime pairs det = 0 forces v = w.
    throw Error(ErrorKind::ProductCase,
                "ray (" + std::to_string(v.v1()) + ", " + std::to_string(v.v2()) +
                    ") equals w; the quotient is the product N x CP^1[w]");
  }
  QuotientData q;
  q.s = narrow(gcd_wide(det, join.l2()), "s");
  q.m = join.l2() / q.s;
  q.m1 = narrow(static_cast<WideInt>(q.m) * v.v1(), "m1");
  q.m2 = narrow(static_cast<WideInt>(q.m) * v.v2(), "m2");
  q.n = narrow(static_cast<WideInt>(join.l1()) * (det / q.s), "n");
  return q;
}

bool orb_fano_predicate(const JoinParams& join, const ReebRay& v) {
  require_monotone(join);
  const Int index = join.base().c1_coeff;
  if (index <= 0) return false;
  const WideInt det = weight_determinant(join, v);
  const WideInt scaled_index = static_cast<WideInt>(index) * join.l2();
  if (det > 0) return scaled_index * v.v2() - join.l1() * det > 0;
  if (det < 0) return scaled_index * v.v1() + join.l1() * det > 0;
  return true;
}

OrbC1Report orb_c1_report(const JoinParams& join, const ReebRay& /*v*/,
                          const QuotientData& data) {
  require_monotone(join);
  if (data.n == 0) {
    throw Error(ErrorKind::ProductCase, "n = 0: no log-pair quotient");
  }
  const Rational inv1(1, data.m1);
  const Rational inv2(1, data.m2);
  OrbC1Report report;
  report.a = Rational(2 * join.base().c1_coeff, data.n) + inv1 - inv2;
  report.c = inv1 + inv2;
  report.positive = data.n > 0 ? report.a > report.c : report.a < -report.c;
  return report;
}

}  // namespace sascone::quotient
