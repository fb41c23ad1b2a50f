#include "branchcut/evaluate.hpp"

#include <algorithm>

#include "branchcut/geometry.hpp"

namespace branchcut {

namespace {

struct CutGeometry {
    Complex origin;
    Complex dir;       // unit, pointing from origin along the cut
    bool is_ray;
    Complex far_end;   // chords
};

std::vector<CutGeometry> cut_geometry(const CutSystem& system, const SingularityReport& report) {
    std::vector<CutGeometry> out;
    for (const auto& c : system.cuts) {
        CutGeometry g;
        g.origin = report.finite[c.origin].location;
        g.is_ray = c.kind == CutKind::Ray;
        if (g.is_ray) {
            g.dir = c.direction;
        } else {
            g.far_end = report.finite[c.endpoint].location;
            g.dir = unit(g.far_end - g.origin);
        }
        out.push_back(g);
    }
    return out;
}

// first crossing of leg [a,b] with any cut, ignoring touches within `skip`
// of either leg end
std::optional<std::pair<size_t, Crossing>> first_crossing(const std::vector<CutGeometry>& cuts,
                                                          const Complex& a, const Complex& b,
                                                          const Real& skip) {
    std::optional<std::pair<size_t, Crossing>> best;
    for (size_t k = 0; k < cuts.size(); ++k) {
        std::optional<Crossing> hit;
        if (cuts[k].is_ray)
            hit = segment_crosses_ray(a, b, cuts[k].origin, cuts[k].dir);
        else
            hit = segment_crosses_segment(a, b, cuts[k].origin, cuts[k].far_end);
        if (!hit) continue;
        if (abs(hit->at - a) <= skip || abs(hit->at - b) <= skip) continue;
        if (!best || hit->s < best->second.s) best = std::make_pair(k, *hit);
    }
    return best;
}

}  // namespace

EvalResult evaluate(const Engine& engine, const Solution& solution, const CutSystem& system,
                    const SingularityReport& report, const Complex& z, const EvaluateOptions& opts) {
    for (const auto& s : engine.singular().blocking)
        if (abs(z - s) <= Real(engine.options().clearance))
            fail(ErrorKind::Numeric, "evaluation point coincides with a non-apparent singularity");

    if (opts.require_single_valued && !system.rule_report.r7.pass && !system.validated_chords)
        fail(ErrorKind::RuleFailure,
             "cut system does not guarantee single-valuedness: R7' fails and the chords are not validated");

    auto cuts = cut_geometry(system, report);
    Real zscale = std::max(Real(1), abs(z));

    // on-cut: adherence limit via one-sided displacement and extrapolation
    for (size_t k = 0; k < cuts.size(); ++k) {
        Real d = cuts[k].is_ray ? dist_point_ray(z, cuts[k].origin, cuts[k].dir)
                                : dist_point_segment(z, cuts[k].origin, cuts[k].far_end);
        if (d > Real(opts.on_cut_tol) * zscale) continue;

        Complex side = Complex(0) - Complex::i() * cuts[k].dir;  // counter-clockwise side
        if (system.adherence[k] == Adherence::Clockwise) side = Complex(0) - side;
        Real eta = Real(opts.on_cut_eta) * zscale;

        EvaluateOptions inner = opts;
        inner.on_cut_tol = 0;  // displaced points are off-cut by construction
        EvalResult v1 = evaluate(engine, solution, system, report, z + Complex(eta) * side, inner);
        EvalResult v2 = evaluate(engine, solution, system, report, z + Complex(eta / 2) * side, inner);

        EvalResult out;
        out.on_cut = true;
        out.jet.point = z;
        out.jet.values.resize(v1.jet.values.size());
        for (size_t r = 0; r < v1.jet.values.size(); ++r)
            out.jet.values[r] = Complex(2) * v2.jet.values[r] - v1.jet.values[r];
        out.value = out.jet.values[0];
        // the linear term cancels in the extrapolation; what remains is one
        // order of eta smaller than the sample difference
        out.error_estimate =
            abs(v2.value - v1.value) * Real(opts.on_cut_eta) + v1.error_estimate + v2.error_estimate;
        out.jet.error_estimate = out.error_estimate;
        out.route = v2.route;
        return out;
    }

    // off-cut: route around cut endpoints until the polyline is crossing-free
    std::vector<Complex> route = {solution.base.point, z};
    Real skip = pow10(-24) * zscale;
    Real r = system.rho0 / 4;
    if (r <= 0) r = Real(1);
    for (int pass = 0; pass < 64; ++pass) {
        bool changed = false;
        for (size_t leg = 0; leg + 1 < route.size();) {
            auto hit = first_crossing(cuts, route[leg], route[leg + 1], skip);
            if (!hit) {
                ++leg;
                continue;
            }
            const CutGeometry& g = cuts[hit->first];
            // circle the nearer endpoint of the crossed cut
            Complex pivot = g.origin;
            Complex dir = g.dir;
            if (!g.is_ray && abs(hit->second.at - g.far_end) < abs(hit->second.at - g.origin)) {
                pivot = g.far_end;
                dir = Complex(0) - g.dir;
            }
            Complex perp = Complex::i() * dir;
            Real side = cross(dir, route[leg] - pivot);
            Complex p_same = side >= 0 ? perp : Complex(0) - perp;
            Complex w1 = pivot + Complex(r) * unit(p_same - dir);
            Complex w2 = pivot + Complex(r) * unit((Complex(0) - p_same) - dir);
            route.insert(route.begin() + leg + 1, {w1, w2});
            changed = true;
            leg += 3;
        }
        if (!changed) break;
        if (pass == 63) fail(ErrorKind::Numeric, "cut-detour routing failed to converge");
    }
    // drop consecutive duplicates the insertion may have produced
    for (size_t k = 0; k + 1 < route.size();) {
        if (abs(route[k + 1] - route[k]) <= pow10(-28))
            route.erase(route.begin() + k + 1);
        else
            ++k;
    }

    EvalResult out;
    Path path;
    path.vertices = route;
    out.jet = continue_solution(engine, solution, path);
    out.value = out.jet.values[0];
    out.error_estimate = out.jet.error_estimate;
    out.route = std::move(route);
    return out;
}

}  // namespace branchcut
