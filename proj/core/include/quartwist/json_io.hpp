#pragma once

#include <json.hpp>

#include "quartwist/verify.hpp"

namespace quartwist {

using Json = nlohmann::ordered_json;

Json tower_spec_to_json(const TowerSpec& spec);
TowerSpec tower_spec_from_json(const Json& j);

Json elem_to_json(const TowerElem& e);
TowerElem elem_from_json(const Json& j, const TowerPtr& tower);

Json form_to_json(const TernaryQuartic& F);
TernaryQuartic form_from_json(const Json& j, const TowerPtr& tower);

Json matrix_to_json(const ProjMatrix& M);
ProjMatrix matrix_from_json(const Json& j, const TowerPtr& tower);

Json aut_to_json(const FieldAut& a);
FieldAut aut_from_json(const Json& j, const TowerPtr& tower);

Json params_to_json(const ParamMap& curve, const ParamMap& twist);
// split a flat parameter object into (curve, twist) parameters for a case tag
std::pair<ParamMap, ParamMap> params_from_json(const std::string& case_tag, const Json& j);

Json twist_to_json(const Twist& t);
Twist twist_from_json(const Json& j);

Json fingerprint_to_json(const GroupFingerprint& fp);
Json group_to_json(const ProjGroup& G);
Json report_to_json(const VerificationReport& rep);
Json pair_record_to_json(const PairRecord& r);

} // namespace quartwist
