#include "ptc/json_io.hpp"

namespace ptc {

json to_json(Rational const& q)
{
    return q.to_string();
}

json to_json(Curve const& E)
{
    return {{"a2", E.a2().to_string()}, {"a4", E.a4().to_string()}, {"a6", E.a6().to_string()}};
}

json to_json(CurvePoint const& P)
{
    if (P.is_infinity())
        return "infinity";
    return {{"x", P.x().to_string()}, {"y", P.y().to_string()}};
}

json to_json(PythTriple const& T)
{
    // plain numbers when they fit, decimal strings otherwise
    auto entry = [](Integer const& v) -> json {
        if (v.fits_slong_p())
            return v.get_si();
        return v.get_str();
    };
    return json::array({entry(T.a), entry(T.b), entry(T.c)});
}

json to_json(ParamBinding const& p)
{
    json j = json::object();
    if (p.kind == ParamKind::triple)
        j["triple"] = to_json(*p.triple);
    else
        j[std::string(param_name(p.kind))] = p.value.to_string();
    return j;
}

json to_json(FamilyInstance const& inst)
{
    json points = json::object();
    for (auto const& np : inst.points)
        points[np.name] = to_json(np.point);
    return {{"family", std::string(family_name(inst.family))},
            {"param", to_json(inst.param)},
            {"curve", to_json(inst.curve)},
            {"points", std::move(points)}};
}

json to_json(OrderVerdict const& v)
{
    if (v.finite)
        return {{"verdict", "finite"}, {"order", v.order}};
    return {{"verdict", "infinite"}, {"certificate", std::string(certificate_name(v.certificate))}};
}

json to_json(PositiveRankCertificate const& c)
{
    json j = {{"family", std::string(family_name(c.family))},
              {"triple", to_json(c.triple)},
              {"witness", to_json(c.witness)}};
    if (c.verdict.finite) {
        j["verdict"] = "finite";
        j["order"] = c.verdict.order;
    } else {
        j["verdict"] = "infinite";
        j["certificate"] = std::string(certificate_name(c.verdict.certificate));
    }
    return j;
}

namespace {

/* "1e-4" style: shortest scientific form with up to 6 significant digits. */
std::string compact_scientific(Real const& v)
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.5Re", v.get());
    std::string s(buf);
    mpfr_free_str(buf);
    auto e = s.find('e');
    std::string mant = s.substr(0, e), ex = s.substr(e + 1);
    if (mant.find('.') != std::string::npos) {
        mant.erase(mant.find_last_not_of('0') + 1);
        if (mant.back() == '.')
            mant.pop_back();
    }
    int k = std::stoi(ex);
    return k == 0 ? mant : mant + "e" + std::to_string(k);
}

}  // namespace

json to_json(RegulatorReport const& r)
{
    json gram = json::array();
    for (auto const& row : r.gram) {
        json jr = json::array();
        for (auto const& v : row)
            jr.push_back(v.to_string(r.digits));
        gram.push_back(std::move(jr));
    }
    json pts = json::array();
    for (auto const& P : r.points)
        pts.push_back(to_json(P));
    return {{"det", r.det.to_string(r.digits)},
            {"precision", r.digits},
            {"epsilon", compact_scientific(r.epsilon)},
            {"independent", r.independent()},
            {"verdict", std::string(independence_name(r.verdict))},
            {"rank_lower_bound", r.rank_lower_bound},
            {"gram", std::move(gram)},
            {"curve", to_json(r.curve)},
            {"points", std::move(pts)}};
}

Rational rational_from_json(json const& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw std::invalid_argument("rational must be a string or integer");
}

Curve curve_from_json(json const& j)
{
    return Curve(rational_from_json(j.at("a2")), rational_from_json(j.at("a4")), rational_from_json(j.at("a6")));
}

CurvePoint point_from_json(json const& j)
{
    if (j.is_string() && j.get<std::string>() == "infinity")
        return CurvePoint::infinity();
    return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

}  // namespace ptc
