#include "branchcut/jsonio.hpp"

namespace branchcut {

namespace {

unsigned out_digits() { return working_digits(); }

Json point_json(const SingularityReport& report, int index) {
    Json j;
    j["index"] = index;
    j["location"] = to_json(report.finite[index].location);
    return j;
}

}  // namespace

Json to_json(const Complex& z) {
    Json j;
    j["re"] = real_str(z.re, out_digits());
    j["im"] = real_str(z.im, out_digits());
    return j;
}

Json to_json(const SingularityReport& report) {
    Json j;
    j["finite"] = Json::array();
    for (const auto& p : report.finite) {
        Json e;
        e["location"] = to_json(p.location);
        if (p.exact) e["exact"] = p.exact->str();
        e["multiplicity"] = p.multiplicity;
        e["class"] = point_class_name(p.cls);
        e["factor"] = poly_str(p.factor);
        if (p.cls != PointClass::Irregular) {
            e["exponents"] = Json::array();
            for (const auto& x : p.exponents) e["exponents"].push_back(to_json(x));
            if (!p.exact_exponents.empty()) {
                e["exact_exponents"] = Json::array();
                for (const auto& x : p.exact_exponents) e["exact_exponents"].push_back(x.str());
            }
            e["has_log"] = p.has_log;
        }
        j["finite"].push_back(std::move(e));
    }
    j["infinity"] = infinity_class_name(report.infinity);
    j["infinity_apparent"] = report.infinity_apparent;
    return j;
}

Json to_json(const SymmetryProfile& profile) {
    Json j;
    j["conjugation"] = profile.conjugation;
    if (profile.infinite_order)
        j["rotation_order"] = "infinite";
    else
        j["rotation_order"] = profile.rotation_order;
    if (profile.affine) {
        Json a;
        a["lambda"] = to_json(profile.affine->lambda);
        a["mu"] = to_json(profile.affine->mu);
        j["affine"] = std::move(a);
    }
    return j;
}

Json to_json(const CutSystem& system, const SingularityReport& report) {
    Json j;
    j["base_point"] = to_json(system.base_point);
    j["rho0"] = real_str(system.rho0, out_digits());
    j["cuts"] = Json::array();
    for (size_t k = 0; k < system.cuts.size(); ++k) {
        const auto& c = system.cuts[k];
        Json e;
        e["kind"] = c.kind == CutKind::Ray ? "ray" : "chord";
        e["origin"] = point_json(report, c.origin);
        if (c.kind == CutKind::Ray) {
            e["direction"] = to_json(c.direction);
            e["angle"] = real_str(arg(c.direction), out_digits());
        } else {
            e["endpoint"] = point_json(report, c.endpoint);
        }
        e["adherence"] =
            system.adherence[k] == Adherence::CounterClockwise ? "counter_clockwise" : "clockwise";
        if (c.collinear_review) e["collinear_review"] = true;
        j["cuts"].push_back(std::move(e));
    }
    Json rules;
    const RuleCheck* checks[] = {&system.rule_report.r2, &system.rule_report.r3, &system.rule_report.r4,
                                 &system.rule_report.r5, &system.rule_report.r6, &system.rule_report.r7};
    for (int r = 0; r < 6; ++r) {
        Json e;
        e["pass"] = checks[r]->pass;
        e["detail"] = checks[r]->detail;
        rules[rule_name(r + 2)] = std::move(e);
    }
    j["rule_report"] = std::move(rules);
    j["all_rules_pass"] = system.rule_report.all_pass();

    j["germs"] = Json::array();
    for (size_t k : report.non_apparent()) {
        Json g;
        Germ germ = germ_at(system, report, static_cast<int>(k));
        g["singularity"] = point_json(report, static_cast<int>(k));
        g["angle"] = real_str(germ.approach_angle, out_digits());
        g["direction"] = to_json(germ.direction);
        g["adherence"] =
            germ.adherence == Adherence::CounterClockwise ? "counter_clockwise" : "clockwise";
        g["exponents"] = Json::array();
        for (const auto& x : germ.exponents) g["exponents"].push_back(to_json(x));
        g["has_log"] = germ.has_log;
        j["germs"].push_back(std::move(g));
    }
    return j;
}

Json to_json(const Jet& jet) {
    Json j;
    j["point"] = to_json(jet.point);
    j["values"] = Json::array();
    for (const auto& v : jet.values) j["values"].push_back(to_json(v));
    j["error_estimate"] = real_str(jet.error_estimate, 3);
    return j;
}

Json to_json(const MonodromyResult& m) {
    Json j;
    j["matrix"] = Json::array();
    for (const auto& row : m.matrix) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        j["matrix"].push_back(std::move(r));
    }
    j["deviation_from_identity"] = real_str(m.deviation_from_identity, 3);
    j["condition"] = real_str(m.condition, 3);
    j["error_estimate"] = real_str(m.error_estimate, 3);
    return j;
}

Json to_json(const ChordSearch& search, const SingularityReport& report) {
    Json j;
    j["offered"] = Json::array();
    for (const auto& sys : search.offered) {
        Json e;
        e["chords"] = Json::array();
        for (const auto& c : sys.chords) {
            Json ch;
            ch["from"] = point_json(report, c.origin);
            ch["to"] = point_json(report, c.endpoint);
            e["chords"].push_back(std::move(ch));
        }
        e["max_monodromy_deviation"] = real_str(sys.max_monodromy_deviation, 3);
        e["violates"] = sys.violates_r2 ? Json::array({"R2'", "R7'"}) : Json::array({"R7'"});
        j["offered"].push_back(std::move(e));
    }
    j["skipped"] = search.skipped;
    return j;
}

}  // namespace branchcut
