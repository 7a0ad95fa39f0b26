#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "sascone/admissible_metric.hpp"
#include "sascone/error.hpp"
#include "sascone/quotient.hpp"

using namespace sascone;
using namespace sascone::metric;

namespace {

// High-precision reference values computed once with 40-digit arithmetic.
constexpr double kF1Unit = -1.252141141997325214544644987723391331648;  // -8/(e^2 - 1)
constexpr double kRoot32 = 1.151106371434629651255517422705331590717;
constexpr double kFHalf32 = 1.0 / 3.0;
constexpr double kFMinus2 = -3.831623454556052852813835539103877619653;

ProfileParams random_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> m(1, 9);
  std::uniform_int_distribution<int> d(0, 4);
  std::uniform_real_distribution<double> mag(0.05, 0.95);
  std::uniform_int_distribution<Int> n(1, 12);
  std::uniform_int_distribution<Int> index(1, 5);
  std::bernoulli_distribution negative(0.5);
  const bool neg = negative(rng);
  const double r = neg ? -mag(rng) : mag(rng);
  const Int nn = neg ? -n(rng) : n(rng);
  return ProfileParams::make(m(rng), m(rng), d(rng), r, nn, index(rng));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ProfileParams::make(1, 1, 1, 0.0, 1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(1, 1, 1, 1.0, 1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(1, 1, 1, 0.5, -1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(0, 1, 1, 0.5, 1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(1, 1, -1, 0.5, 1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(1, 1, kMaxBaseDimension + 1, 0.5, 1, 1), Error);
  CHECK_THROWS_AS(ProfileParams::make(1, 1, 1, 0.5, 1, 0), Error);
  CHECK(ProfileParams::make(1, 1, 0, 0.5, 1, 1).synthetic());
  CHECK(default_r(-3) == -0.5);
  CHECK(default_r(3) == 0.5);
}

TEST_CASE("g endpoint values hold for every k") {
  for (double k : {-300.0, -40.0, -1.0, -1e-9, 0.0, 1e-12, 0.3, 5.0, 33.0, 300.0}) {
    CHECK(g_func(-1.0, k, 3, 2) == doctest::Approx(2.0 / 2).epsilon(1e-14));
    CHECK(g_func(1.0, k, 3, 2) == doctest::Approx(-2.0 / 3).epsilon(1e-14));
  }
  CHECK(g_func(0.0, 0.0, 1, 1) == 0.0);
  CHECK(g_func(0.25, 0.0, 2, 5) == doctest::Approx(0.75 / 5 - 1.25 / 2));
}

TEST_CASE("g agrees with the direct formula and is continuous at k = 0") {
  for (double k : {-20.0, -3.0, -0.5, 0.01, 0.7, 4.0, 25.0})
    for (double t = -1.0; t <= 1.0; t += 0.125) {
      const double direct = static_cast<double>(oracle::g_direct(t, k, 4, 7));
      CHECK(g_func(t, k, 4, 7) == doctest::Approx(direct).epsilon(1e-13));
    }
  for (double t : {-0.8, 0.0, 0.6}) {
    CHECK(g_func(t, 1e-9, 4, 7) == doctest::Approx(g_func(t, 0.0, 4, 7)).epsilon(1e-8));
    CHECK(g_func(t, -1e-9, 4, 7) == doctest::Approx(g_func(t, 0.0, 4, 7)).epsilon(1e-8));
  }
}

TEST_CASE("g is strictly decreasing in t") {
  for (double k : {-60.0, -2.0, 0.0, 1e-7, 3.0, 60.0})
    for (Int m1 : {1, 4, 9})
      for (Int m2 : {1, 2, 9}) {
        double previous = g_func(-1.0, k, m1, m2);
        for (int i = 1; i <= 200; ++i) {
          const double t = -1.0 + i / 100.0;
          CHECK(g_func_dt(t, k, m1, m2) < 0.0);
          const double value = g_func(t, k, m1, m2);
          // Beyond |k| ~ 20 the exponential saturates and g is flat in double.
          if (std::abs(k) < 20.0) CHECK(value < previous);
          previous = value;
        }
      }
}

TEST_CASE("moment kernels match quadrature") {
  using boost::math::quadrature::gauss_kronrod;
  for (double x : {-200.0, -40.0, -32.5, -31.5, -5.0, -0.3, -1e-6, 0.0, 1e-6, 0.3, 5.0, 31.5,
                   32.5, 40.0})
    for (int i : {0, 1, 3, 6}) {
      auto integrand = [&](long double s) {
        return std::pow(s, i) * std::expm1(static_cast<long double>(x) * s);
      };
      const long double ref =
          gauss_kronrod<long double, 61>::integrate(integrand, 0.0L, 1.0L, 10, 1e-16L);
      CAPTURE(x);
      CAPTURE(i);
      const double got = detail::phi_moment(i, x);
      CHECK(std::abs(got - static_cast<double>(ref)) <=
            1e-13 * std::max(1.0, std::abs(static_cast<double>(ref))));
    }
}

TEST_CASE("f at reference points") {
  const auto unit = ProfileParams::make(1, 1, 0, 0.5, 1, 1);
  CHECK(f_of_k(0.0, unit) == 0.0);
  CHECK(f_of_k(1.0, unit) == doctest::Approx(kF1Unit).epsilon(1e-14));

  const auto p32 = ProfileParams::make(3, 2, 1, -0.5, -4, 2);
  CHECK(f_of_k(0.5, p32) == doctest::Approx(kFHalf32).epsilon(1e-14));
  CHECK(f_of_k(-2.0, ProfileParams::make(1, 9, 4, 0.7, 5, 2)) ==
        doctest::Approx(kFMinus2).epsilon(1e-14));

  CHECK(f_of_k(200.0, p32) < 0.0);
  CHECK(f_of_k(-200.0, p32) > 0.0);
}

TEST_CASE("root for (3, 2, r = -1/2, d = 1)") {
  const auto params = ProfileParams::make(3, 2, 1, -0.5, -4, 2);
  const double k = solve_k(params);
  CHECK(std::abs(k - kRoot32) < 1e-11);
  CHECK(std::abs(f_of_k(k, params)) <= root_tolerance(params));
  CHECK(f_of_k(k - 1e-6, params) > 0.0);
  CHECK(f_of_k(k + 1e-6, params) < 0.0);
}

TEST_CASE("symmetric case gives k = 0 and F = 1 - z^2") {
  for (Int m : {1, 2, 5}) {
    const auto params = ProfileParams::make(m, m, 0, 0.5, 1, 1);
    CHECK(solve_k(params) == 0.0);
    const MetricProfile profile = build_profile(params, 101);
    for (const Sample& s : profile.samples) {
      CHECK(std::abs(s.F - (1.0 - s.z * s.z) / static_cast<double>(m)) <= 1e-12);
    }
    CHECK(profile.report.k_zero);
  }
  const MetricProfile unit = build_profile(ProfileParams::make(1, 1, 0, 0.5, 1, 1), 3);
  REQUIRE(unit.samples.size() == 3);
  CHECK(unit.samples[0].z == -1.0);
  CHECK(unit.samples[1].z == 0.0);
  CHECK(unit.samples[2].z == 1.0);
  CHECK(std::abs(unit.samples[0].F) <= 1e-15);
  CHECK(unit.samples[1].F == doctest::Approx(1.0));
  CHECK(std::abs(unit.samples[2].F) <= 1e-15);
  CHECK_THROWS_AS(build_profile(ProfileParams::make(1, 1, 0, 0.5, 1, 1), 2), Error);
}

TEST_CASE("Kahler-Einstein flag") {
  // k = 0 and 2 r I / n = (1 + r)/m2 + (1 - r)/m1 = 2.
  const MetricProfile ke = build_profile(ProfileParams::make(1, 1, 0, 0.5, 1, 2), 11);
  CHECK(ke.report.k_zero);
  CHECK(ke.report.kahler_einstein);
  CHECK(ke.report.synthetic);
  const MetricProfile other = build_profile(ProfileParams::make(1, 1, 0, 0.5, 1, 3), 11);
  CHECK(other.report.k_zero);
  CHECK_FALSE(other.report.kahler_einstein);
  CHECK_FALSE(build_profile(ProfileParams::make(3, 2, 1, -0.5, -4, 2), 11).report.k_zero);
}

TEST_CASE("box conditions") {
  CHECK(ricci_box_check(2, -4, 3, 2));
  for (Int index : {0, -1, -3})
    for (Int n : {-5, -1, 1, 5})
      CHECK_FALSE(ricci_box_check(index, n, 2, 3));
  // n > 0: the second condition always holds.
  for (Int n = 1; n <= 20; ++n) CHECK(ricci_box_check(3, n, 1, 1) == (3 - n > 0));
}

TEST_CASE("Ricci coefficients") {
  const MetricProfile unit = build_profile(ProfileParams::make(1, 1, 0, 0.5, 1, 1), 5);
  CHECK(unit.samples[2].ricci_h == doctest::Approx(1.0));

  const auto params = ProfileParams::make(3, 2, 1, -0.5, -4, 2);
  const MetricProfile profile = build_profile(params, 201);
  const double n = static_cast<double>(params.n);
  CHECK(profile.samples.front().ricci_h * n ==
        doctest::Approx((2.0 / n - 1.0 / 2.0) * n).epsilon(1e-12));
  CHECK(profile.samples.back().ricci_h * n ==
        doctest::Approx((2.0 / n + 1.0 / 3.0) * n).epsilon(1e-12));
  for (const Sample& s : profile.samples) {
    CHECK(s.ricci_h * n > 0.0);
    CHECK(s.ricci_v > 0.0);
  }
  CHECK(profile.report.box);
  CHECK(profile.report.ricci_h_positive);
  CHECK(profile.report.ricci_v_positive);
}

TEST_CASE("certified profile for (3, 2, r = -1/2, d = 1)") {
  const auto params = ProfileParams::make(3, 2, 1, -0.5, -4, 2);
  const MetricProfile profile = build_profile(params, 201);
  const VerificationReport& rep = profile.report;
  CHECK(rep.certified);
  CHECK(std::abs(rep.F_left) <= kVerifyTolerance);
  CHECK(std::abs(rep.F_right) <= kVerifyTolerance);
  CHECK(rep.dF_left_residual <= kVerifyTolerance);
  CHECK(rep.dF_right_residual <= kVerifyTolerance);
  CHECK(rep.min_interior_F > 0.0);
  for (const Sample& s : profile.samples) {
    const long double ref = oracle::profile_F(s.z, profile.k_root, params);
    CHECK(oracle::agrees(s.F, ref, oracle::scale(params)));
  }
}

TEST_CASE("F' equals g p") {
  const auto params = ProfileParams::make(5, 2, 3, 0.6, 3, 2);
  const double k = solve_k(params);
  const double h = 1e-5;
  for (double z = -0.9; z < 0.95; z += 0.1) {
    const double derivative = (profile_F(z + h, k, params) - profile_F(z - h, k, params)) / (2 * h);
    CHECK(derivative == doctest::Approx(g_func(z, k, 5, 2) * params.p(z)).epsilon(1e-8));
  }
}

TEST_CASE("randomized oracle agreement, uniqueness and interior positivity") {
  std::mt19937_64 rng(7177);
  for (int trial = 0; trial < 40; ++trial) {
    const ProfileParams params = random_params(rng);
    CAPTURE(params.m1);
    CAPTURE(params.m2);
    CAPTURE(params.d_n);
    CAPTURE(params.r);
    const double scale = oracle::scale(params);

    int sign_changes = 0;
    double previous = f_of_k(-64.0, params);
    for (int i = 1; i < 1000; ++i) {
      const double k = -64.0 + 128.0 * i / 999.0;
      const double value = f_of_k(k, params);
      CHECK(value < previous);
      if ((value < 0.0) != (previous < 0.0)) ++sign_changes;
      previous = value;
      if (i % 111 == 0) CHECK(oracle::agrees(value, oracle::f_of_k(k, params), scale));
    }
    CHECK(sign_changes == 1);

    const MetricProfile profile = build_profile(params, 10001);
    CHECK(profile.report.interior_positive);
    CHECK(profile.report.monotone);
    CHECK(std::abs(profile.report.F_left) <= kVerifyTolerance);
    CHECK(std::abs(profile.report.F_right) <= kVerifyTolerance);
    for (std::size_t i = 1; i + 1 < profile.samples.size(); ++i) CHECK(profile.samples[i].F > 0.0);
    for (double z : {-0.75, -0.1, 0.4, 0.95}) {
      CHECK(oracle::agrees(profile_F(z, profile.k_root, params),
                           oracle::profile_F(z, profile.k_root, params), scale));
    }
  }
}

TEST_CASE("box from quotient data matches the orbifold Fano predicate") {
  const auto base = BaseManifold::projective_space(1);
  for (Int l1 = 1; l1 <= 5; ++l1)
    for (Int w1 = 1; w1 <= 6; ++w1)
      for (Int w2 = 1; w2 <= w1; ++w2) {
        if (std::gcd(w1, w2) != 1) continue;
        const auto join = validate_join(l1, 1, w1, w2, base);
        for (Int v1 = 1; v1 <= 9; ++v1)
          for (Int v2 = 1; v2 <= 9; ++v2) {
            if (std::gcd(v1, v2) != 1 || (v1 == w1 && v2 == w2)) continue;
            const ReebRay v(v1, v2);
            const auto q = quotient::quotient_data(join, v);
            CHECK(ricci_box_check(params_from_quotient(join, q)) ==
                  quotient::orb_fano_predicate(join, v));
          }
      }
}

TEST_CASE("Sasaki lift") {
  const auto join = validate_join(4, 1, 1, 1, BaseManifold::projective_space(1));
  const LiftReport report =
      sasaki_lift_check(join, {ReebRay(3, 2), ReebRay(5, 1), ReebRay(1, 1)}, std::nullopt, 101);
  REQUIRE(report.entries.size() == 3);
  const LiftEntry& first = report.entries[0];
  CHECK(first.accepted);
  REQUIRE(first.quotient.has_value());
  CHECK(first.quotient->n == -4);
  CHECK(first.quotient->m1 == 3);
  CHECK(first.quotient->m2 == 2);
  CHECK(first.doubling_deviation == 0.0);
  CHECK(first.doubling_ok);
  CHECK(first.smooth);
  CHECK_FALSE(report.entries[1].accepted);
  // v = w is the product case.
  CHECK_FALSE(report.entries[2].accepted);
  CHECK(report.all_ok);

  CHECK_THROWS_AS(sasaki_lift_check(validate_join(1, 1, 3, 1, BaseManifold::riemann_surface(2)),
                                    {ReebRay(1, 1)}),
                  Error);
}

TEST_CASE("doubling m1 and m2 leaves m Theta unchanged") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const ProfileParams a = random_params(rng);
    ProfileParams b = a;
    b.m1 *= 2;
    b.m2 *= 2;
    const MetricProfile pa = build_profile(a, 201);
    const MetricProfile pb = build_profile(b, 201);
    CHECK(pa.k_root == pb.k_root);
    for (std::size_t i = 0; i < pa.samples.size(); ++i)
      CHECK(pa.samples[i].theta == 2.0 * pb.samples[i].theta);
  }
}

TEST_CASE("root beyond the bracket limit is reported") {
  // f(-512) < 0 here: the root lies below -512.
  const auto params = ProfileParams::make(1, kMaxParameter, 30, 0.95, 1, 1);
  try {
    solve_k(params);
    FAIL("expected BracketFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BracketFailure);
  }
}

TEST_CASE("large degree and |r| close to 1 stay accurate") {
  for (int d : {12, 20, 30})
    for (double r : {-0.99, -0.8, 0.8, 0.99}) {
      const auto params = ProfileParams::make(2, 7, d, r, r > 0 ? 1 : -1, 1);
      const double scale = oracle::scale(params);
      const double k = solve_k(params);
      CHECK(std::abs(f_of_k(k, params)) <= root_tolerance(params));
      for (double z : {-0.9, -0.3, 0.2, 0.85}) {
        CHECK(oracle::agrees(profile_F(z, k, params), oracle::profile_F(z, k, params), scale,
                             1e-13));
      }
      CHECK(build_profile(params, 401).report.certified);
    }
}
