#include "sascone/admissible_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sascone/error.hpp"

namespace sascone::metric {

namespace detail {
namespace {

// Above this argument the moment recurrences are stable for every admissible
// degree (i <= kMaxBaseDimension), and the series below it converge quickly.
constexpr double kLargeArgument = 32.0;
constexpr int kMaxSeriesTerms = 400;

// sum_{n >= 0} x^n / (n! (n + i + 1)) for x > 0: all terms positive.
double j_moment_positive_series(int i, double x) {
  double term = 1.0;  // x^n / n!
  double sum = 1.0 / (i + 1);
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= x / n;
    const double add = term / (n + i + 1);
    sum += add;
    if (add < sum * 1e-18) break;
  }
  return sum;
}

// integral_0^1 s^i e^{-y s} ds = e^{-y} sum_{n >= 0} y^n / ((i+1)...(i+1+n)),
// the lower incomplete gamma series; all terms positive.
double j_moment_negative_series(int i, double y) {
  double term = 1.0 / (i + 1);
  double sum = term;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= y / (i + 1 + n);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return std::exp(-y) * sum;
}

}  // namespace

double phi_moment(int i, double x) {
  if (x == 0.0) return 0.0;
  if (std::fabs(x) <= 1.0) {
    // sum_{n >= 1} x^n / (n! (n + i + 1)); no cancellation against 1/(i+1).
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n < 60; ++n) {
      term *= x / n;
      const double add = term / (n + i + 1);
      sum += add;
      if (std::fabs(add) <= std::fabs(sum) * 1e-18) break;
    }
    return sum;
  }
  const double base = 1.0 / (i + 1);
  if (x > 0.0) {
    if (x <= kLargeArgument) return j_moment_positive_series(i, x) - base;
    return std::exp(x) * psi_moment(i, x) - base;
  }
  const double y = -x;
  if (y <= kLargeArgument) return j_moment_negative_series(i, y) - base;
  // Upward recurrence J_i = (i J_{i-1} - e^{-y}) / y, stable for y > i.
  const double decay = std::exp(-y);
  double j = -std::expm1(-y) / y;
  for (int q = 1; q <= i; ++q) j = (q * j - decay) / y;
  return j - base;
}

double psi_moment(int i, double x) {
  if (x <= kLargeArgument) {
    return std::exp(-x) * (phi_moment(i, x) + 1.0 / (i + 1));
  }
  // psi_i = (1 - i psi_{i-1}) / x, stable for x > i.
  double psi = -std::expm1(-x) / x;
  for (int q = 1; q <= i; ++q) psi = (1.0 - q * psi) / x;
  return psi;
}

double q_moment(int i, double c, double upper) {
  if (upper == 0.0) return 0.0;
  const double scale = std::pow(upper, i + 1);
  if (c == 0.0) return scale * upper / (2.0 * (i + 2));
  const double x = c * upper;
  if (c < 0.0 || x <= kLargeArgument) {
    return scale * phi_moment(i, x) / std::expm1(2.0 * c);
  }
  // e^{x} psi - 1/(i+1) over e^{2c} - 1, rescaled by e^{-2c}.
  return scale * (psi_moment(i, x) * std::exp(x - 2.0 * c) / -std::expm1(-2.0 * c) -
                  1.0 / ((i + 1) * std::expm1(2.0 * c)));
}

double q_kernel(double c, double u) {
  if (c == 0.0) return 0.5 * u;
  if (c < 0.0) return std::expm1(c * u) / std::expm1(2.0 * c);
  return std::exp(c * (u - 2.0)) * std::expm1(-c * u) / std::expm1(-2.0 * c);
}

}  // namespace detail

namespace {

double binomial(int n, int k) {
  double b = 1.0;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

// For r > 0, p(t) = sum_i coeff[i] (1 + t)^i with nonnegative coefficients.
// Profiles with r < 0 are evaluated through the reflection
// (t, k, m1, m2, r) -> (-t, -k, m2, m1, -r), so the sum never alternates.
struct Expansion {
  std::vector<double> coeff;
  bool reflected = false;
};

Expansion expand(const ProfileParams& params) {
  const int d = params.d_n;
  const double r = std::fabs(params.r);
  Expansion e;
  e.reflected = params.r < 0.0;
  e.coeff.resize(d + 1);
  for (int i = 0; i <= d; ++i) {
    e.coeff[i] = binomial(d, i) * std::pow(1.0 - r, d - i) * std::pow(r, i);
  }
  return e;
}

struct Weights {
  double inv_m1;
  double inv_m2;
};

Weights weights(Int m1, Int m2) {
  return {1.0 / static_cast<double>(m1), 1.0 / static_cast<double>(m2)};
}

// g(t, k) = -2 e^{k} expm1(-k(1+t)) / (e^k - e^{-k}) / m1
//           + 2 e^{-k} expm1(k(1-t)) / (e^k - e^{-k}) / m2.
double g_weighted(double t, double k, const Weights& w) {
  return -2.0 * w.inv_m1 * detail::q_kernel(-k, 1.0 + t) +
         2.0 * w.inv_m2 * detail::q_kernel(k, 1.0 - t);
}

double g_dt_weighted(double t, double k, const Weights& w) {
  const double a = w.inv_m1 + w.inv_m2;
  if (k == 0.0) return -a;
  if (k > 0.0) return 2.0 * k * a * std::exp(-k * (1.0 + t)) / std::expm1(-2.0 * k);
  return -2.0 * k * a * std::exp(k * (1.0 - t)) / std::expm1(2.0 * k);
}

// Since Q(k, 1 - t) = 1 - Q(-k, 1 + t), g = 2/m2 - 2 (1/m1 + 1/m2) Q(-k, 1 + t)
// and F is a difference of two integrals with positive integrands.
double F_positive_r(double z, double k, double inv_m1, double inv_m2,
                    const Expansion& e) {
  const double u = 1.0 + z;
  double mass = 0.0;
  double kernel = 0.0;
  for (std::size_t i = 0; i < e.coeff.size(); ++i) {
    const int deg = static_cast<int>(i);
    mass += e.coeff[i] * std::pow(u, deg + 1) / (deg + 1);
    kernel += e.coeff[i] * detail::q_moment(deg, -k, u);
  }
  return 2.0 * inv_m2 * mass - 2.0 * (inv_m1 + inv_m2) * kernel;
}

double F_weighted(double z, double k, const ProfileParams& params,
                  const Expansion& e) {
  const Weights w = weights(params.m1, params.m2);
  if (!e.reflected) return F_positive_r(z, k, w.inv_m1, w.inv_m2, e);
  // F(z) = G(-z) - G(1) for the reflected profile G.
  if (z == -1.0) return 0.0;
  return F_positive_r(-z, -k, w.inv_m2, w.inv_m1, e) -
         F_positive_r(1.0, -k, w.inv_m2, w.inv_m1, e);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace

ProfileParams ProfileParams::make(Int m1, Int m2, int d_n, double r, Int n,
                                  Int fano_index) {
  require(m1 >= 1 && m1 <= kMaxParameter, "m1 must be a positive integer");
  require(m2 >= 1 && m2 <= kMaxParameter, "m2 must be a positive integer");
  require(d_n >= 0 && d_n <= kMaxBaseDimension,
          "d_N must lie in [0, " + std::to_string(kMaxBaseDimension) + "]");
  require(std::isfinite(r) && r != 0.0 && std::fabs(r) < 1.0,
          "r must satisfy 0 < |r| < 1");
  require(n != 0, "n must be nonzero");
  require((r > 0.0) == (n > 0), "r and n must have the same sign");
  require(fano_index >= 1 && fano_index <= kMaxParameter,
          "fano index must be a positive integer");
  return {m1, m2, d_n, r, n, fano_index};
}

double ProfileParams::p(double z) const {
  return std::pow(1.0 + r * z, d_n);
}

double ProfileParams::p_integral() const {
  // Only even powers of t survive on [-1, 1].
  double sum = 0.0;
  for (int j = 0; j <= d_n; j += 2) {
    sum += binomial(d_n, j) * std::pow(r, j) * 2.0 / (j + 1);
  }
  return sum;
}

double default_r(Int n) { return n > 0 ? 0.5 : -0.5; }

double g_func(double t, double k, Int m1, Int m2) {
  return g_weighted(t, k, weights(m1, m2));
}

double g_func_dt(double t, double k, Int m1, Int m2) {
  return g_dt_weighted(t, k, weights(m1, m2));
}

double f_of_k(double k, const ProfileParams& params) {
  return F_weighted(1.0, k, params, expand(params));
}

double profile_F(double z, double k, const ProfileParams& params) {
  return F_weighted(z, k, params, expand(params));
}

double root_tolerance(const ProfileParams& params) {
  const Weights w = weights(params.m1, params.m2);
  return kRootTolerance * (w.inv_m1 + w.inv_m2) * params.p_integral();
}

double verify_tolerance(const ProfileParams& params) {
  const Weights w = weights(params.m1, params.m2);
  return kVerifyTolerance * std::max(1.0, (w.inv_m1 + w.inv_m2) * params.p_integral());
}

double ke_balance(const ProfileParams& params) { return f_of_k(0.0, params); }

double solve_k(const ProfileParams& params) {
  const Expansion e = expand(params);
  auto f = [&](double k) { return F_weighted(1.0, k, params, e); };
  const double tol = root_tolerance(params);

  double lo = -1.0, hi = 1.0;
  double f_lo = f(lo), f_hi = f(hi);
  while (!(f_lo >= 0.0)) {
    lo *= 2.0;
    if (-lo > kBracketLimit) {
      throw Error(ErrorKind::BracketFailure, "no sign change of f for k >= -512");
    }
    f_lo = f(lo);
  }
  while (!(f_hi <= 0.0)) {
    hi *= 2.0;
    if (hi > kBracketLimit) {
      throw Error(ErrorKind::BracketFailure, "no sign change of f for k <= 512");
    }
    f_hi = f(hi);
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;

  // Bisect to double resolution; the scaled tolerance is a convergence
  // guarantee, not a stopping rule.
  double best = lo;
  double best_abs = std::fabs(f_lo);
  if (std::fabs(f_hi) < best_abs) {
    best = hi;
    best_abs = std::fabs(f_hi);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (std::fabs(f_mid) < best_abs) {
      best = mid;
      best_abs = std::fabs(f_mid);
    }
    if (f_mid == 0.0) break;
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(best_abs <= tol)) {
    throw Error(ErrorKind::BracketFailure, "bisection did not reach the root tolerance");
  }
  return best;
}

bool ricci_box_check(Int fano_index, Int n, Int m1, Int m2) {
  // (I/n - 1/m2) n = I - n/m2 and (I/n + 1/m1) n = I + n/m1, times m_i > 0.
  const WideInt first = static_cast<WideInt>(fano_index) * m2 - n;
  const WideInt second = static_cast<WideInt>(fano_index) * m1 + n;
  return first > 0 && second > 0;
}

bool ricci_box_check(const ProfileParams& params) {
  return ricci_box_check(params.fano_index, params.n, params.m1, params.m2);
}

std::vector<Sample> ricci_coefficients(MetricProfile& profile) {
  const ProfileParams& params = profile.params;
  const Weights w = weights(params.m1, params.m2);
  const double k = profile.k_root;
  const double einstein = static_cast<double>(params.fano_index) /
                          static_cast<double>(params.n);
  const double sign_n = params.n > 0 ? 1.0 : -1.0;

  bool h_positive = true;
  bool v_positive = true;
  for (Sample& s : profile.samples) {
    s.ricci_h = einstein - 0.5 * g_weighted(s.z, k, w);
    s.ricci_v = -0.5 * g_dt_weighted(s.z, k, w);
    h_positive = h_positive && s.ricci_h * sign_n > 0.0;
    v_positive = v_positive && s.ricci_v > 0.0;
  }
  VerificationReport& report = profile.report;
  report.box = ricci_box_check(params);
  report.ricci_h_positive = h_positive;
  report.ricci_v_positive = v_positive;
  if (report.box && !(h_positive && v_positive)) {
    throw Error(ErrorKind::BoxViolation,
                "box conditions hold but a sampled Ricci coefficient is not positive");
  }
  return profile.samples;
}

MetricProfile build_profile(const ProfileParams& params, int grid_size) {
  if (grid_size < 3) {
    throw Error(ErrorKind::InvalidArgument, "grid size must be at least 3");
  }
  const Expansion e = expand(params);
  const Weights w = weights(params.m1, params.m2);

  MetricProfile profile;
  profile.params = params;
  profile.k_root = solve_k(params);
  const double k = profile.k_root;

  profile.samples.resize(grid_size);
  const int last = grid_size - 1;
  for (int idx = 0; idx < grid_size; ++idx) {
    Sample& s = profile.samples[idx];
    s.z = idx == last ? 1.0 : -1.0 + 2.0 * idx / last;
    s.F = F_weighted(s.z, k, params, e);
    s.theta = s.F / params.p(s.z);
  }

  VerificationReport& report = profile.report;
  report.k_root = k;
  report.f_residual = std::fabs(F_weighted(1.0, k, params, e));
  report.F_left = profile.samples.front().F;
  report.F_right = profile.samples.back().F;
  // F' = g p by construction.
  report.dF_left_residual =
      std::fabs(g_weighted(-1.0, k, w) * params.p(-1.0) - 2.0 * params.p(-1.0) * w.inv_m2);
  report.dF_right_residual =
      std::fabs(g_weighted(1.0, k, w) * params.p(1.0) + 2.0 * params.p(1.0) * w.inv_m1);

  double min_interior = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (int idx = 0; idx < grid_size; ++idx) {
    const Sample& s = profile.samples[idx];
    if (idx != 0 && idx != last) min_interior = std::min(min_interior, s.F);
    monotone = monotone && g_dt_weighted(s.z, k, w) < 0.0;
  }
  report.min_interior_F = min_interior;
  report.interior_positive = min_interior > 0.0;
  report.monotone = monotone;

  const double tol = root_tolerance(params);
  report.balance = F_weighted(1.0, 0.0, params, e);
  report.k_zero = std::fabs(report.balance) <= tol;
  const double r = params.r;
  const double ke_lhs = 2.0 * r * static_cast<double>(params.fano_index) /
                        static_cast<double>(params.n);
  const double ke_rhs = (1.0 + r) * w.inv_m2 + (1.0 - r) * w.inv_m1;
  report.kahler_einstein = report.k_zero && std::fabs(ke_lhs - ke_rhs) <= kRootTolerance;
  report.synthetic = params.synthetic();

  ricci_coefficients(profile);

  const double verify = verify_tolerance(params);
  report.certified = std::fabs(report.F_left) <= verify &&
                     std::fabs(report.F_right) <= verify &&
                     report.dF_left_residual <= verify &&
                     report.dF_right_residual <= verify &&
                     report.interior_positive && report.monotone;
  return profile;
}

ProfileParams params_from_quotient(const JoinParams& join,
                                   const quotient::QuotientData& data,
                                   std::optional<double> r) {
  if (join.base().dim_c > kMaxBaseDimension) {
    throw Error(ErrorKind::InvalidArgument, "base dimension too large for profiles");
  }
  if (!join.base().is_fano()) {
    throw Error(ErrorKind::NotFano, "admissible profiles require a Fano base");
  }
  return ProfileParams::make(data.m1, data.m2, static_cast<int>(join.base().dim_c),
                             r.value_or(default_r(data.n)), data.n,
                             join.base().c1_coeff);
}

namespace {

// m Theta for the weight pair (a, b) read as the vector (a, b) / scale.
std::vector<double> lifted_theta(const ProfileParams& base, Int a, Int b,
                                 double scale, int grid_size) {
  ProfileParams p = base;
  p.m1 = a;
  p.m2 = b;
  const MetricProfile profile = build_profile(p, grid_size);
  std::vector<double> out;
  out.reserve(profile.samples.size());
  for (const Sample& s : profile.samples) out.push_back(scale * s.theta);
  return out;
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

LiftReport sasaki_lift_check(const JoinParams& join,
                             const std::vector<ReebRay>& rays,
                             std::optional<double> r, int grid_size) {
  if (!join.base().is_fano()) {
    throw Error(ErrorKind::NotFano, "Sasaki lift requires a Fano base");
  }
  constexpr Int kStep = 1000;
  constexpr double kLiftTolerance = 1e-9;

  LiftReport report;
  report.all_ok = true;
  for (const ReebRay& v : rays) {
    LiftEntry entry(v);
    quotient::QuotientData q;
    try {
      q = quotient::quotient_data(join, v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ProductCase) throw;
      entry.reason = e.what();
      report.entries.push_back(entry);
      continue;
    }
    entry.quotient = q;
    if (!ricci_box_check(join.base().c1_coeff, q.n, q.m1, q.m2)) {
      entry.reason = "ray is outside the orbifold-Fano region";
      report.entries.push_back(entry);
      continue;
    }
    const ProfileParams params = params_from_quotient(join, q, r);
    const MetricProfile profile = build_profile(params, grid_size);
    entry.k_root = profile.k_root;

    std::vector<double> lifted;
    for (const Sample& s : profile.samples) lifted.push_back(q.m * s.theta);
    const std::vector<double> doubled =
        lifted_theta(params, 2 * q.m1, 2 * q.m2, 2.0 * q.m, grid_size);
    entry.doubling_deviation = sup_distance(lifted, doubled);
    entry.doubling_ok = entry.doubling_deviation <= kLiftTolerance;

    // v + (1/N) e1 as the integer pair (N v1 + 1, N v2) scaled by N.
    const std::vector<double> step = lifted_theta(
        params, kStep * v.v1() + 1, kStep * v.v2(), static_cast<double>(kStep), grid_size);
    const std::vector<double> half_step =
        lifted_theta(params, 2 * kStep * v.v1() + 1, 2 * kStep * v.v2(),
                     static_cast<double>(2 * kStep), grid_size);
    entry.step_deviation = sup_distance(lifted, step);
    entry.half_step_deviation = sup_distance(lifted, half_step);
    // First-order variation: halving the step halves the deviation.
    const double ratio = entry.step_deviation / entry.half_step_deviation;
    entry.smooth = entry.step_deviation <= 1e-12 || (ratio > 1.5 && ratio < 2.5);

    entry.accepted = true;
    report.all_ok = report.all_ok && entry.doubling_ok && entry.smooth;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace sascone::metric
