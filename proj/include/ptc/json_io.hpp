#ifndef PTC_JSON_IO_HPP_
#define PTC_JSON_IO_HPP_

#include "ptc/heights.hpp"
#include "ptc/torsion.hpp"

#include <json.hpp>

namespace ptc {

using json = nlohmann::ordered_json;

json to_json(Rational const& q);
json to_json(Curve const& E);
json to_json(CurvePoint const& P);
json to_json(PythTriple const& T);
json to_json(ParamBinding const& p);
json to_json(FamilyInstance const& inst);
json to_json(PositiveRankCertificate const& c);
json to_json(RegulatorReport const& r);
json to_json(OrderVerdict const& v);

Rational rational_from_json(json const& j);
Curve curve_from_json(json const& j);
CurvePoint point_from_json(json const& j);

}  // namespace ptc

#endif /* PTC_JSON_IO_HPP_ */
