#pragma once

#include <json.hpp>

#include "sascone/admissible_metric.hpp"
#include "sascone/cone_classifier.hpp"
#include "sascone/core_types.hpp"
#include "sascone/quotient.hpp"
#include "sascone/rational.hpp"
#include "sascone/topology.hpp"

// JSON mapping for every domain type. Field names are lowercase; integers
// beyond 64 bits are written as decimal strings; rationals as "a/b".
namespace sascone {

using Json = nlohmann::json;

Json wide_to_json(WideInt value);

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

void to_json(Json& j, const BaseManifold& base);
void from_json(const Json& j, BaseManifold& base);

void to_json(Json& j, const JoinParams& join);
// Validates with Smoothness::Relaxed unless "smooth" is true in the record.
JoinParams join_from_json(const Json& j);

void to_json(Json& j, const ReebRay& ray);
ReebRay ray_from_json(const Json& j);

namespace topology {
void to_json(Json& j, const BouquetLabel& label);
}

namespace quotient {
void to_json(Json& j, const QuotientData& q);
void to_json(Json& j, const OrbC1Report& report);
}

namespace cone {
void to_json(Json& j, const PositivityRange& range);
void to_json(Json& j, const WholeConeRules& rules);
}

namespace metric {
void to_json(Json& j, const ProfileParams& params);
void to_json(Json& j, const VerificationReport& report);
void to_json(Json& j, const Sample& sample);
void to_json(Json& j, const MetricProfile& profile);
void to_json(Json& j, const LiftEntry& entry);
void to_json(Json& j, const LiftReport& report);
}

}  // namespace sascone
