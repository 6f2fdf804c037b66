#include "ptc/sweep.hpp"

#include <atomic>
#include <numeric>
#include <thread>

namespace ptc {

std::vector<ParamBinding> sweep_parameters(SweepSpec const& spec)
{
    std::vector<ParamBinding> out;
    if (spec.kind == ParamKind::triple) {
        if (!spec.lo.is_integral() || !spec.hi.is_integral())
            throw std::invalid_argument("triple sweep bounds must be integers");
        Integer lo = spec.lo.num(), hi = spec.hi.num();
        if (lo < 2)
            lo = 2;
        for (Integer m = lo; m <= hi; ++m)
            for (Integer n = 1; n < m; ++n) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
                if (g != 1 || ((m - n) % 2) == 0)
                    continue;
                ParamBinding p;
                p.kind = ParamKind::triple;
                p.triple = ppt_from_mn(m, n);
                out.push_back(std::move(p));
            }
        return out;
    }
    if (spec.step.sign() <= 0)
        throw std::invalid_argument("sweep step must be positive");
    for (Rational v = spec.lo; v <= spec.hi; v = v + spec.step)
        out.push_back({spec.kind, v, std::nullopt});
    return out;
}

namespace {

std::string param_label(ParamBinding const& p)
{
    if (p.kind == ParamKind::triple)
        return p.triple->a.get_str() + "," + p.triple->b.get_str() + "," + p.triple->c.get_str();
    return p.value.to_string();
}

FamilyInstance build(FamilyId f, ParamBinding const& p)
{
    if (p.kind == ParamKind::triple)
        return construct(f, *p.triple);
    return construct(f, p.kind, p.value);
}

}  // namespace

SweepResult run_sweep(SweepSpec const& spec)
{
    SweepResult res;
    Real epsilon = Real::from_string(spec.epsilon, spec.digits);

    for (auto const& p : sweep_parameters(spec)) {
        SweepRecord rec;
        rec.param = param_label(p);
        try {
            rec.instance = build(spec.family, p);
        } catch (degenerate_parameter const&) {
            ++res.skipped_degenerate;
            continue;
        } catch (singular_curve const&) {
            ++res.skipped_degenerate;
            continue;
        }
        rec.point_names = regulator_point_names(*rec.instance);
        res.records.push_back(std::move(rec));
    }
    if (res.records.empty())
        throw empty_sweep("sweep range contains no admissible parameter");

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < res.records.size();) {
            SweepRecord& rec = res.records[i];
            try {
                std::vector<CurvePoint> pts;
                for (auto const& name : rec.point_names)
                    pts.push_back(rec.instance->at(name));
                rec.report = regulator(rec.instance->curve, pts, spec.digits, epsilon);
            } catch (std::exception const& e) {
                rec.error = e.what();
            }
        }
    };
    int jobs = std::max(1, spec.jobs);
    std::vector<std::thread> pool;
    for (int k = 1; k < jobs; ++k)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    for (auto const& rec : res.records) {
        if (!rec.report) {
            ++res.errors;
            continue;
        }
        switch (rec.report->verdict) {
        case Independence::independent: ++res.independent; break;
        case Independence::not_independent: ++res.not_independent; break;
        case Independence::indeterminate: ++res.indeterminate; break;
        }
    }
    return res;
}

json to_json(SweepResult const& r, int digits)
{
    json records = json::array();
    for (auto const& rec : r.records) {
        json j = {{"param", rec.param}, {"points", rec.point_names}};
        if (rec.report) {
            j["det"] = rec.report->det.to_string(digits);
            j["verdict"] = std::string(independence_name(rec.report->verdict));
            j["rank_lower_bound"] = rec.report->rank_lower_bound;
        } else {
            j["error"] = rec.error;
        }
        j["curve"] = to_json(rec.instance->curve);
        records.push_back(std::move(j));
    }
    return {{"precision", digits},
            {"records", std::move(records)},
            {"summary",
             {{"evaluated", r.records.size()},
              {"skipped_degenerate", r.skipped_degenerate},
              {"independent", r.independent},
              {"not_independent", r.not_independent},
              {"indeterminate", r.indeterminate},
              {"errors", r.errors}}}};
}

std::string to_csv(SweepResult const& r, int digits)
{
    std::string out = "param,points,det,verdict,rank_lower_bound\n";
    for (auto const& rec : r.records) {
        std::string names;
        for (auto const& n : rec.point_names)
            names += (names.empty() ? "" : " ") + n;
        out += "\"" + rec.param + "\"," + names + ",";
        if (rec.report)
            out += rec.report->det.to_string(digits) + "," + std::string(independence_name(rec.report->verdict)) +
                   "," + std::to_string(rec.report->rank_lower_bound);
        else
            out += ",error,";
        out += "\n";
    }
    return out;
}

}  // namespace ptc
