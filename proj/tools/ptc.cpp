#include "ptc/families.hpp"
#include "ptc/heights.hpp"
#include "ptc/json_io.hpp"
#include "ptc/repro.hpp"
#include "ptc/sweep.hpp"
#include "ptc/torsion.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace ptc;

namespace {

enum exit_code { ok = 0, failed = 1, usage = 2, computation = 3 };

struct global_opts {
    int precision = 50;
    std::string epsilon{default_epsilon};
    std::string format = "json";
    int jobs = 1;
};

/* Family selection shared by construct / torsion / height / regulator. */
struct instance_opts {
    std::string family;
    std::string t, alpha, T, m, u, triple;
    std::string curve;                // "a2,a4,a6"
    std::vector<std::string> point;   // "x,y"
    std::string points;               // "P1,P3"

    void add_to(CLI::App* app, bool with_points)
    {
        app->add_option("--family", family, "F1_a2c2 .. F7_frey_bc");
        app->add_option("--t", t, "rational parameter t");
        app->add_option("--alpha", alpha);
        app->add_option("--T", T);
        app->add_option("--m", m);
        app->add_option("--u", u);
        app->add_option("--triple", triple, "a,b,c");
        if (with_points) {
            app->add_option("--curve", curve, "a2,a4,a6 of y^2 = x^3 + a2 x^2 + a4 x + a6");
            app->add_option("--point", point, "x,y (repeatable)");
            app->add_option("--points", points, "catalogued point names, comma separated");
        }
    }
};

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

PythTriple parse_triple(std::string const& s)
{
    auto parts = split(s, ',');
    if (parts.size() != 3)
        throw std::invalid_argument("triple must be a,b,c");
    return {Integer(parts[0]), Integer(parts[1]), Integer(parts[2])};
}

FamilyInstance build_instance(instance_opts const& o)
{
    if (o.family.empty())
        throw std::invalid_argument("--family is required");
    FamilyId f = parse_family(o.family);
    std::vector<std::pair<ParamKind, std::string>> given;
    for (auto [k, v] : {std::pair{ParamKind::t, &o.t}, {ParamKind::alpha, &o.alpha}, {ParamKind::T, &o.T},
                        {ParamKind::m, &o.m}, {ParamKind::u, &o.u}, {ParamKind::triple, &o.triple}})
        if (!v->empty())
            given.emplace_back(k, *v);
    if (given.size() != 1)
        throw std::invalid_argument("exactly one of --t, --alpha, --T, --m, --u, --triple is required");
    auto [kind, text] = given.front();
    if (kind == ParamKind::triple)
        return construct(f, parse_triple(text));
    return construct(f, kind, parse_rational(text));
}

CurvePoint parse_point(std::string const& s)
{
    if (s == "infinity" || s == "O")
        return CurvePoint::infinity();
    auto parts = split(s, ',');
    if (parts.size() != 2)
        throw std::invalid_argument("point must be x,y");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

CurvePoint checked(Curve const& E, CurvePoint const& P)
{
    if (!E.contains(P))
        throw std::invalid_argument("point " + P.to_string() + " is not on " + E.to_string());
    return P;
}

/* Curve and points from either --curve/--point or a family instance. */
std::pair<Curve, std::vector<CurvePoint>> curve_and_points(instance_opts const& o)
{
    if (!o.curve.empty()) {
        auto c = split(o.curve, ',');
        if (c.size() != 3)
            throw std::invalid_argument("curve must be a2,a4,a6");
        Curve E(parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2]));
        std::vector<CurvePoint> pts;
        for (auto const& s : o.point)
            pts.push_back(checked(E, parse_point(s)));
        return {E, pts};
    }
    FamilyInstance inst = build_instance(o);
    std::vector<CurvePoint> pts;
    if (o.points.empty()) {
        for (auto const& np : inst.points)
            pts.push_back(np.point);
    } else {
        for (auto const& name : split(o.points, ','))
            pts.push_back(inst.at(name));
    }
    for (auto const& s : o.point)
        pts.push_back(checked(inst.curve, parse_point(s)));
    return {inst.curve, pts};
}

void print(json const& j)
{
    std::cout << j.dump(2) << '\n';
}

/* "2..12" or a single value. */
std::pair<std::string, std::string> parse_range(std::string const& s)
{
    auto pos = s.find("..");
    if (pos == std::string::npos)
        return {s, s};
    return {s.substr(0, pos), s.substr(pos + 2)};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Elliptic curve families from Pythagorean triples"};
    app.require_subcommand(1);
    global_opts g;
    app.add_option("--precision", g.precision, "decimal digits")->check(CLI::Range(5, 100000));
    app.add_option("--epsilon", g.epsilon, "independence threshold");
    app.add_option("--format", g.format)->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", g.jobs, "worker threads for sweep")->check(CLI::PositiveNumber);
    app.fallthrough();

    instance_opts con_o;
    auto* con = app.add_subcommand("construct", "build a family instance and its catalogued points");
    con_o.add_to(con, false);

    std::string cert_family, cert_triple;
    long cert_limit = 0;
    auto* cert = app.add_subcommand("certify", "certify an infinite-order point for primitive triples");
    cert->add_option("--family", cert_family)->required();
    auto* cert_t = cert->add_option("--triple", cert_triple, "a,b,c");
    auto* cert_all = cert->add_option("--all-ppt-up-to", cert_limit, "every primitive triple with c <= C");
    cert_t->excludes(cert_all);

    instance_opts tor_o;
    auto* tor = app.add_subcommand("torsion", "torsion subgroup and point orders");
    tor_o.add_to(tor, true);

    instance_opts h_o;
    auto* hgt = app.add_subcommand("height", "naive and canonical heights of points");
    h_o.add_to(hgt, true);

    instance_opts r_o;
    auto* reg = app.add_subcommand("regulator", "height pairing matrix and its determinant");
    r_o.add_to(reg, true);

    auto* rep = app.add_subcommand("reproduce", "recompute the stated height determinants");

    std::string sw_family, sw_t, sw_alpha, sw_T, sw_m, sw_u, sw_mn, sw_step = "1";
    auto* sw = app.add_subcommand("sweep", "regulators over a parameter grid");
    sw->add_option("--family", sw_family)->required();
    sw->add_option("--t", sw_t, "lo..hi");
    sw->add_option("--alpha", sw_alpha, "lo..hi");
    sw->add_option("--T", sw_T, "lo..hi");
    sw->add_option("--m", sw_m, "lo..hi");
    sw->add_option("--u", sw_u, "lo..hi");
    sw->add_option("--mn", sw_mn, "lo..hi bound on the triple generator m");
    sw->add_option("--step", sw_step);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : usage;
    }

    try {
        if (*con) {
            print(to_json(build_instance(con_o)));
            return ok;
        }

        if (*cert) {
            FamilyId f = parse_family(cert_family);
            std::vector<PythTriple> triples;
            if (!cert_triple.empty()) {
                PythTriple T = parse_triple(cert_triple);
                if (!T.is_pythagorean())
                    throw std::invalid_argument("not a Pythagorean triple: " + T.to_string());
                if (!T.is_primitive())
                    throw non_primitive_triple("triple is not primitive: " + T.to_string());
                triples.push_back(T);
            } else if (cert_limit > 0) {
                triples = enumerate_ppts(cert_limit);
            } else {
                throw std::invalid_argument("give --triple or --all-ppt-up-to");
            }
            bool all = true;
            for (auto const& T : triples) {
                auto c = certify_positive_rank(f, T);
                all = all && c.ok();
                std::cout << to_json(c).dump() << '\n';
            }
            return all ? ok : failed;
        }

        if (*tor) {
            auto [E, pts] = curve_and_points(tor_o);
            json tors = json::array();
            for (auto const& P : torsion_points(E))
                tors.push_back({{"point", to_json(P)}, {"order", point_order(E, P).order}});
            json orders = json::array();
            for (auto const& P : pts) {
                json j = to_json(point_order(E, P));
                j["point"] = to_json(P);
                orders.push_back(std::move(j));
            }
            print({{"curve", to_json(E)}, {"torsion", std::move(tors)}, {"points", std::move(orders)}});
            return ok;
        }

        if (*hgt) {
            auto [E, pts] = curve_and_points(h_o);
            CanonicalHeight h(E, g.precision);
            json rows = json::array();
            for (auto const& P : pts) {
                json j = {{"point", to_json(P)}};
                j["naive"] = P.is_infinity() ? "0" : naive_height(P, g.precision).to_string(g.precision);
                j["canonical"] = h(P).value.to_string(g.precision);
                rows.push_back(std::move(j));
            }
            print({{"curve", to_json(E)}, {"precision", g.precision}, {"heights", std::move(rows)}});
            return ok;
        }

        if (*reg) {
            auto [E, pts] = curve_and_points(r_o);
            if (pts.empty())
                throw std::invalid_argument("no points given");
            Real eps = Real::from_string(g.epsilon, g.precision);
            print(to_json(regulator(E, pts, g.precision, eps)));
            return ok;
        }

        if (*rep) {
            ReproReport r;
            try {
                r = reproduce_paper_determinants(g.precision);
            } catch (std::runtime_error const& e) {
                std::cerr << "ptc: " << e.what() << '\n';
                return computation;
            }
            if (g.format == "csv")
                std::cout << to_csv(r);
            else
                print(to_json(r));
            return r.ok() ? ok : failed;
        }

        if (*sw) {
            SweepSpec spec;
            spec.family = parse_family(sw_family);
            spec.digits = g.precision;
            spec.epsilon = g.epsilon;
            spec.jobs = g.jobs;
            spec.step = parse_rational(sw_step);
            std::vector<std::pair<ParamKind, std::string>> given;
            for (auto [k, v] : {std::pair{ParamKind::t, &sw_t}, {ParamKind::alpha, &sw_alpha},
                                {ParamKind::T, &sw_T}, {ParamKind::m, &sw_m}, {ParamKind::u, &sw_u},
                                {ParamKind::triple, &sw_mn}})
                if (!v->empty())
                    given.emplace_back(k, *v);
            if (given.size() != 1)
                throw std::invalid_argument("exactly one of --t, --alpha, --T, --m, --u, --mn is required");
            spec.kind = given.front().first;
            auto [lo, hi] = parse_range(given.front().second);
            spec.lo = parse_rational(lo);
            spec.hi = parse_rational(hi);
            if (spec.hi < spec.lo)
                throw empty_sweep("empty range");

            SweepResult r = run_sweep(spec);
            if (g.format == "csv")
                std::cout << to_csv(r, g.precision);
            else
                print(to_json(r, g.precision));
            for (auto const& rec : r.records)
                if (rec.report && rec.report->verdict == Independence::indeterminate)
                    std::cerr << "ptc: indeterminate at " << rec.param << "; raise --precision\n";
            return r.errors == 0 ? ok : computation;
        }
    } catch (std::logic_error const& e) {
        std::cerr << "ptc: " << e.what() << '\n';
        return usage;
    } catch (std::exception const& e) {
        std::cerr << "ptc: " << e.what() << '\n';
        return computation;
    }
    return usage;
}
