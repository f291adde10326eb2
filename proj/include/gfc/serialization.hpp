#pragma once

#include "gfc/hyperelliptic.hpp"
#include "gfc/quotient_equations.hpp"
#include "gfc/verification.hpp"

#include <json.hpp>

namespace gfc {

using json = nlohmann::ordered_json;

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);
json point_to_json(const SpherePointC& z);
SpherePointC point_from_json(const json& j);

json to_json(const CyclicGonalModel& m);
CyclicGonalModel model_from_json(const json& j);

json to_json(const HyperellipticCurve& c);
HyperellipticCurve curve_from_json(const json& j);

json to_json(const CheckResult& c);
json to_json(const VerificationReport& r);
VerificationReport report_from_json(const json& j);

json to_json(const Subgroup& K);

}  // namespace gfc
