#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sascone/core_types.hpp"
#include "sascone/quotient.hpp"

namespace sascone::metric {

inline constexpr int kMaxBaseDimension = 30;
inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kVerifyTolerance = 1e-10;
inline constexpr double kBracketLimit = 512.0;

// Data of an admissible profile on the log pair (S_n, Delta) over a KE base:
// ramification indices m1, m2, p(z) = (1 + r z)^{d_N}, degree n, Fano index.
struct ProfileParams {
  Int m1 = 1;
  Int m2 = 1;
  int d_n = 0;
  double r = 0.5;
  Int n = 1;
  Int fano_index = 1;

  // Validates 0 < |r| < 1, r n > 0, m_i >= 1, 0 <= d_N <= kMaxBaseDimension,
  // fano_index >= 1.
  static ProfileParams make(Int m1, Int m2, int d_n, double r, Int n,
                            Int fano_index);

  // No geometric base has d_N = 0; such profiles only exercise the kernel.
  bool synthetic() const { return d_n == 0; }

  double p(double z) const;
  // Integral of p over [-1, 1].
  double p_integral() const;

  friend bool operator==(const ProfileParams&, const ProfileParams&) = default;
};

// Default r = sign(n) / 2.
double default_r(Int n);

// g(t, k) for ramification indices (m1, m2). Uses the expm1 form, so it is
// accurate uniformly in k including k -> 0 and |k| large.
double g_func(double t, double k, Int m1, Int m2);
double g_func_dt(double t, double k, Int m1, Int m2);

// f(k) = integral_{-1}^{1} g(t, k) p(t) dt, in closed form.
double f_of_k(double k, const ProfileParams& params);

// F(z) = integral_{-1}^{z} g(t, k) p(t) dt, in closed form.
double profile_F(double z, double k, const ProfileParams& params);

// Absolute tolerance on |f(k)| at the root: 1e-12 (1/m1 + 1/m2) * int p.
double root_tolerance(const ProfileParams& params);

// Endpoint tolerance of the verification report: 1e-10 max(1, S) with
// S = (1/m1 + 1/m2) int p, so profiles with a large p are judged relative to
// their own size.
double verify_tolerance(const ProfileParams& params);

// Unique root of the strictly decreasing f. Bracket doubling from [-1, 1]
// then bisection. Throws BracketFailure beyond |k| = 512.
double solve_k(const ProfileParams& params);

// The balance integral f(0) whose vanishing means k = 0.
double ke_balance(const ProfileParams& params);

struct Sample {
  double z = 0.0;
  double F = 0.0;
  double theta = 0.0;
  double ricci_h = 0.0;
  double ricci_v = 0.0;
};

struct VerificationReport {
  double k_root = 0.0;
  double f_residual = 0.0;
  double F_left = 0.0;
  double F_right = 0.0;
  double dF_left_residual = 0.0;
  double dF_right_residual = 0.0;
  double min_interior_F = 0.0;
  bool interior_positive = false;
  // dg/dz < 0 at every sample.
  bool monotone = false;
  bool box = false;
  bool ricci_h_positive = false;
  bool ricci_v_positive = false;
  double balance = 0.0;
  bool k_zero = false;
  // k = 0 together with 2 r I / n = (1 + r)/m2 + (1 - r)/m1.
  bool kahler_einstein = false;
  bool synthetic = false;
  // Endpoint conditions, interior positivity and monotonicity all hold.
  bool certified = false;
};

struct MetricProfile {
  ProfileParams params;
  double k_root = 0.0;
  std::vector<Sample> samples;
  VerificationReport report;
};

// grid_size >= 3 uniform samples on [-1, 1], endpoints included.
MetricProfile build_profile(const ProfileParams& params, int grid_size);

// The two scalar box conditions (I/n - 1/m2) n > 0 and (I/n + 1/m1) n > 0.
// The third condition, (F'/p)' < 0, is checked on samples by
// ricci_coefficients.
bool ricci_box_check(Int fano_index, Int n, Int m1, Int m2);
bool ricci_box_check(const ProfileParams& params);

// Fills ricci_h = I/n - g/2 and ricci_v = -(1/2) dg/dz on every sample and
// the corresponding report flags. Throws BoxViolation when the box holds but
// a sample is not positive.
std::vector<Sample> ricci_coefficients(MetricProfile& profile);

// Profile parameters of the quotient along a ray: (m1, m2, n) from the
// quotient data, d_N and I from the base, r defaulting to sign(n)/2.
ProfileParams params_from_quotient(const JoinParams& join,
                                   const quotient::QuotientData& data,
                                   std::optional<double> r = std::nullopt);

struct LiftEntry {
  explicit LiftEntry(ReebRay v) : ray(v) {}

  ReebRay ray;
  bool accepted = false;
  std::string reason;
  std::optional<quotient::QuotientData> quotient;
  double k_root = 0.0;
  // max |m Theta - 2m Theta'| between the profile and its (2 m1, 2 m2) double.
  double doubling_deviation = 0.0;
  bool doubling_ok = false;
  // sup |m Theta(v + h e1) - m Theta(v)| at h = 1/N and h = 1/(2N).
  double step_deviation = 0.0;
  double half_step_deviation = 0.0;
  bool smooth = false;
};

struct LiftReport {
  std::vector<LiftEntry> entries;
  // Every accepted ray passed both checks; refused rays do not count.
  bool all_ok = false;
};

// For each ray in the orbifold-Fano region: builds the quotient profile,
// checks that m Theta is unchanged when m is doubled, and that m Theta varies
// to first order under a small rational perturbation of v. Rays outside the
// region are refused. Throws NotFano for non-Fano bases.
LiftReport sasaki_lift_check(const JoinParams& join,
                             const std::vector<ReebRay>& rays,
                             std::optional<double> r = std::nullopt,
                             int grid_size = 201);

namespace detail {

// integral_0^1 s^i (e^{x s} - 1) ds.
double phi_moment(int i, double x);
// integral_0^1 s^i e^{x (s - 1)} ds, x > 0.
double psi_moment(int i, double x);
// integral_0^U u^i expm1(c u) / expm1(2 c) du for 0 <= U <= 2.
double q_moment(int i, double c, double upper);
// expm1(c u) / expm1(2 c), with the c -> 0 limit u / 2.
double q_kernel(double c, double u);

}  // namespace detail

}  // namespace sascone::metric
