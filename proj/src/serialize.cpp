#include "sascone/serialize.hpp"

#include "sascone/error.hpp"

namespace sascone {
namespace {

Int int_field(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_number_integer()) return v.get<Int>();
  if (v.is_string()) return parse_int(v.get<std::string>());
  throw Error(ErrorKind::InvalidArgument, std::string("field '") + key + "' is not an integer");
}

}  // namespace

Json wide_to_json(WideInt value) {
  if (fits_int64(value)) return Json(static_cast<Int>(value));
  return Json(to_string_wide(value));
}

void to_json(Json& j, const Rational& r) { j = r.to_string(); }

void from_json(const Json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(j.get<Int>());
  } else {
    r = Rational::parse(j.get<std::string>());
  }
}

void to_json(Json& j, const BaseManifold& base) {
  j = Json{{"dim_c", base.dim_c},
           {"c1_coeff", base.c1_coeff},
           {"label", base.label},
           {"monotone", base.monotone},
           {"is_fano", base.is_fano()}};
}

void from_json(const Json& j, BaseManifold& base) {
  base = BaseManifold::custom(int_field(j, "dim_c"), int_field(j, "c1_coeff"),
                              j.value("label", std::string{}));
  base.monotone = j.value("monotone", true);
}

void to_json(Json& j, const JoinParams& join) {
  j = Json{{"base", join.base()},
           {"l1", join.l1()},
           {"l2", join.l2()},
           {"w1", join.w1()},
           {"w2", join.w2()},
           {"smooth", join.smooth()}};
}

JoinParams join_from_json(const Json& j) {
  const BaseManifold base = j.at("base").get<BaseManifold>();
  const Smoothness policy =
      j.value("smooth", false) ? Smoothness::Enforce : Smoothness::Relaxed;
  return validate_join(int_field(j, "l1"), int_field(j, "l2"), int_field(j, "w1"),
                       int_field(j, "w2"), base, policy);
}

void to_json(Json& j, const ReebRay& ray) {
  j = Json{{"v1", ray.v1()}, {"v2", ray.v2()}};
}

ReebRay ray_from_json(const Json& j) {
  return ReebRay(int_field(j, "v1"), int_field(j, "v2"));
}

namespace topology {
void to_json(Json& j, const BouquetLabel& label) {
  j = Json{{"k", label.k}, {"j", label.j}, {"l", label.l}, {"i", label.i}};
}
}  // namespace topology

namespace quotient {
void to_json(Json& j, const QuotientData& q) {
  j = Json{{"s", q.s}, {"n", q.n}, {"m", q.m}, {"m1", q.m1}, {"m2", q.m2}};
}

void to_json(Json& j, const OrbC1Report& report) {
  j = Json{{"a", report.a}, {"c", report.c}, {"positive", report.positive}};
}
}  // namespace quotient

namespace cone {
void to_json(Json& j, const PositivityRange& range) {
  j = Json{{"kind", to_string(range.kind)}};
  if (range.kind == PositivityRange::Kind::HalfLine ||
      range.kind == PositivityRange::Kind::Interval) {
    j["lower"] = range.lower;
  }
  if (range.kind == PositivityRange::Kind::Interval) j["upper"] = range.upper;
}

void to_json(Json& j, const WholeConeRules& rules) {
  j = Json{{"c1_coeff", wide_to_json(rules.c1_coeff)},
           {"c1_zero", rules.c1_zero},
           {"c1_positive", rules.c1_positive},
           {"entire_by_index", rules.entire_by_index},
           {"predicted_entire", rules.predicted_entire},
           {"range_is_entire", rules.range_is_entire},
           {"consistent", rules.consistent}};
}
}  // namespace cone

namespace metric {
void to_json(Json& j, const ProfileParams& params) {
  j = Json{{"m1", params.m1}, {"m2", params.m2},   {"d_n", params.d_n},
           {"r", params.r},   {"n", params.n},     {"fano_index", params.fano_index}};
}

void to_json(Json& j, const VerificationReport& r) {
  j = Json{{"k_root", r.k_root},
           {"f_residual", r.f_residual},
           {"f_left", r.F_left},
           {"f_right", r.F_right},
           {"df_left_residual", r.dF_left_residual},
           {"df_right_residual", r.dF_right_residual},
           {"min_interior_f", r.min_interior_F},
           {"interior_positive", r.interior_positive},
           {"monotone", r.monotone},
           {"box", r.box},
           {"ricci_h_positive", r.ricci_h_positive},
           {"ricci_v_positive", r.ricci_v_positive},
           {"balance", r.balance},
           {"k_zero", r.k_zero},
           {"kahler_einstein", r.kahler_einstein},
           {"synthetic", r.synthetic},
           {"certified", r.certified}};
}

void to_json(Json& j, const Sample& s) {
  j = Json{{"z", s.z}, {"f", s.F}, {"theta", s.theta},
           {"ricci_h", s.ricci_h}, {"ricci_v", s.ricci_v}};
}

void to_json(Json& j, const MetricProfile& profile) {
  j = Json{{"params", profile.params},
           {"k_root", profile.k_root},
           {"samples", profile.samples},
           {"report", profile.report}};
}

void to_json(Json& j, const LiftEntry& e) {
  j = Json{{"ray", e.ray},
           {"accepted", e.accepted},
           {"reason", e.reason},
           {"k_root", e.k_root},
           {"doubling_deviation", e.doubling_deviation},
           {"doubling_ok", e.doubling_ok},
           {"step_deviation", e.step_deviation},
           {"half_step_deviation", e.half_step_deviation},
           {"smooth", e.smooth}};
  j["quotient"] = e.quotient ? Json(*e.quotient) : Json(nullptr);
}

void to_json(Json& j, const LiftReport& report) {
  j = Json{{"entries", report.entries}, {"all_ok", report.all_ok}};
}
}  // namespace metric

}  // namespace sascone
