#include "branchcut/cuts.hpp"

#include <algorithm>

#include "branchcut/geometry.hpp"

namespace branchcut {

namespace {

Real geom_eps(const Complex& ref) { return pow10(-20) * std::max(Real(1), abs(ref)); }

bool same_point(const Complex& a, const Complex& b) { return abs(a - b) <= geom_eps(a); }

}  // namespace

Complex cut_endpoint_location(const BranchCut& cut, const SingularityReport& report, bool far_end) {
    if (!far_end) return report.finite[cut.origin].location;
    if (cut.kind != CutKind::Chord) fail(ErrorKind::Internal, "ray has no far endpoint");
    return report.finite[cut.endpoint].location;
}

Real cut_distance(const CutSystem&, const BranchCut& cut, const SingularityReport& report,
                  const Complex& p) {
    Complex o = report.finite[cut.origin].location;
    if (cut.kind == CutKind::Ray) return dist_point_ray(p, o, cut.direction);
    return dist_point_segment(p, o, report.finite[cut.endpoint].location);
}

namespace {

// do two straight cuts share at least one point?
bool cuts_touch(const BranchCut& a, const BranchCut& b, const SingularityReport& rep) {
    Complex oa = rep.finite[a.origin].location;
    Complex ob = rep.finite[b.origin].location;
    Real eps = geom_eps(oa) + geom_eps(ob);

    auto ray_hits_point = [&](const BranchCut& r, const Complex& p) {
        return dist_point_ray(p, rep.finite[r.origin].location, r.direction) <= eps;
    };
    auto chord_hits_point = [&](const BranchCut& c, const Complex& p) {
        return dist_point_segment(p, rep.finite[c.origin].location, rep.finite[c.endpoint].location) <= eps;
    };

    if (a.kind == CutKind::Ray && b.kind == CutKind::Ray) {
        // endpoint-on-ray covers collinear overlaps; otherwise solve the crossing
        if (ray_hits_point(a, ob) || ray_hits_point(b, oa)) return true;
        Real den = cross(a.direction, b.direction);
        if (abs(den) <= pow10(-25)) return false;  // parallel, disjoint
        Complex rhs = ob - oa;
        Real t1 = cross(rhs, b.direction) / den;
        Real t2 = cross(rhs, a.direction) / den;
        return t1 >= -eps && t2 >= -eps;
    }
    const BranchCut& chord = a.kind == CutKind::Chord ? a : b;
    const BranchCut& other = a.kind == CutKind::Chord ? b : a;
    Complex ca = rep.finite[chord.origin].location;
    Complex cb = rep.finite[chord.endpoint].location;
    if (other.kind == CutKind::Ray) {
        if (ray_hits_point(other, ca) || ray_hits_point(other, cb)) return true;
        if (chord_hits_point(chord, rep.finite[other.origin].location)) return true;
        return segment_crosses_ray(ca, cb, rep.finite[other.origin].location, other.direction).has_value();
    }
    Complex da = rep.finite[other.origin].location;
    Complex db = rep.finite[other.endpoint].location;
    if (chord_hits_point(chord, da) || chord_hits_point(chord, db)) return true;
    if (chord_hits_point(other, ca) || chord_hits_point(other, cb)) return true;
    return segment_crosses_segment(ca, cb, da, db).has_value();
}

std::string cut_label(const BranchCut& c, const SingularityReport& rep) {
    std::string s = c.kind == CutKind::Ray ? "ray from " : "chord from ";
    s += rep.finite[c.origin].location.str(6);
    if (c.kind == CutKind::Ray)
        s += " toward angle " + arg(c.direction).str(6);
    else
        s += " to " + rep.finite[c.endpoint].location.str(6);
    return s;
}

}  // namespace

RuleReport check_rules(const CutSystem& system, const SingularityReport& report,
                       const SymmetryProfile& sym) {
    RuleReport out;
    const auto& cuts = system.cuts;

    // R2': cuts keep out of the convergence disk around the base point
    {
        Real rho0 = system.rho0;
        Real worst = pow10(30);
        int worst_idx = -1;
        for (size_t k = 0; k < cuts.size(); ++k) {
            Real d = cut_distance(system, cuts[k], report, system.base_point);
            if (d < worst) {
                worst = d;
                worst_idx = static_cast<int>(k);
            }
        }
        if (cuts.empty()) {
            out.r2 = {true, "no cuts"};
        } else if (worst >= rho0 * (1 - Real("1e-12"))) {
            out.r2 = {true, "minimum distance to the base point is " + worst.str(6)};
        } else {
            out.r2 = {false, cut_label(cuts[worst_idx], report) + " enters the convergence disk (distance " +
                                 worst.str(6) + " < " + rho0.str(6) + ")"};
        }
    }

    auto find_matching = [&](const BranchCut& image) {
        auto loc = [&](int idx) { return report.finite[idx].location; };
        for (const auto& c : cuts) {
            if (c.kind != image.kind) continue;
            if (c.kind == CutKind::Ray) {
                if (same_point(loc(c.origin), loc(image.origin)) &&
                    abs(c.direction - image.direction) <= Real("1e-18"))
                    return true;
            } else {
                bool direct = same_point(loc(c.origin), loc(image.origin)) &&
                              same_point(loc(c.endpoint), loc(image.endpoint));
                bool swapped = same_point(loc(c.origin), loc(image.endpoint)) &&
                               same_point(loc(c.endpoint), loc(image.origin));
                if (direct || swapped) return true;
            }
        }
        return false;
    };

    auto image_index = [&](const Complex& target) {
        for (size_t j = 0; j < report.finite.size(); ++j)
            if (same_point(report.finite[j].location, target)) return static_cast<int>(j);
        return -1;
    };

    // R3': conjugation closure when the solution respects conjugation
    if (!sym.conjugation) {
        out.r3 = {true, "not applicable: conjugation symmetry not detected"};
    } else {
        out.r3 = {true, "cut set is closed under conjugation"};
        for (const auto& c : cuts) {
            BranchCut img = c;
            int o = image_index(report.finite[c.origin].location.conj());
            int e = c.kind == CutKind::Chord ? image_index(report.finite[c.endpoint].location.conj()) : -1;
            if (o < 0 || (c.kind == CutKind::Chord && e < 0)) {
                out.r3 = {false, "singularity set is not closed under conjugation"};
                break;
            }
            img.origin = o;
            img.endpoint = e;
            img.direction = c.direction.conj();
            if (!find_matching(img)) {
                out.r3 = {false, "conjugate of " + cut_label(c, report) + " is missing"};
                break;
            }
        }
    }

    // R4': rotation closure for the detected rotation order
    if (sym.infinite_order) {
        out.r4 = {true, "vacuous: scaling-homogeneous operator, constraint applied at no finite order"};
    } else if (sym.rotation_order <= 1) {
        out.r4 = {true, "not applicable: no rotation symmetry detected"};
    } else {
        Complex w = root_of_unity(1, sym.rotation_order);
        out.r4 = {true, "cut set is closed under rotation by 2*pi/" + std::to_string(sym.rotation_order)};
        for (const auto& c : cuts) {
            BranchCut img = c;
            int o = image_index(w * report.finite[c.origin].location);
            int e = c.kind == CutKind::Chord ? image_index(w * report.finite[c.endpoint].location) : -1;
            if (o < 0 || (c.kind == CutKind::Chord && e < 0)) {
                out.r4 = {false, "singularity set is not closed under the rotation"};
                break;
            }
            img.origin = o;
            img.endpoint = e;
            img.direction = w * c.direction;
            if (!find_matching(img)) {
                out.r4 = {false, "rotation image of " + cut_label(c, report) + " is missing"};
                break;
            }
        }
    }

    // R5': endpoints are non-apparent singularities (rays run to infinity)
    {
        out.r5 = {true, "all cut endpoints are non-apparent singularities"};
        for (const auto& c : cuts) {
            bool ok = c.origin >= 0 && c.origin < static_cast<int>(report.finite.size()) &&
                      report.finite[c.origin].cls != PointClass::Apparent;
            if (c.kind == CutKind::Chord)
                ok = ok && c.endpoint >= 0 && c.endpoint < static_cast<int>(report.finite.size()) &&
                     report.finite[c.endpoint].cls != PointClass::Apparent;
            if (!ok) {
                out.r5 = {false, cut_label(c, report) + " does not end at a non-apparent singularity"};
                break;
            }
        }
    }

    // R6': straight by representation
    out.r6 = {true, "cuts are straight lines by construction"};

    // R7': every connected component of the cut set is unbounded, i.e. the
    // cut set plus the point at infinity is connected
    {
        size_t m = cuts.size();
        std::vector<size_t> comp(m);
        for (size_t k = 0; k < m; ++k) comp[k] = k;
        std::function<size_t(size_t)> find = [&](size_t k) {
            while (comp[k] != k) k = comp[k] = comp[comp[k]];
            return k;
        };
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (cuts_touch(cuts[a], cuts[b], report)) comp[find(a)] = find(b);
        std::vector<bool> unbounded(m, false);
        for (size_t k = 0; k < m; ++k)
            if (cuts[k].kind == CutKind::Ray) unbounded[find(k)] = true;
        out.r7 = {true, "every cut component reaches infinity"};
        for (size_t k = 0; k < m; ++k)
            if (!unbounded[find(k)]) {
                out.r7 = {false, "component containing " + cut_label(cuts[k], report) +
                                     " is bounded: the complement is not simply connected"};
                break;
            }
    }

    return out;
}

CutSystem propose_cuts(const SingularityReport& report, const SymmetryProfile& sym,
                       const InitialConditions& ics, Adherence default_adherence) {
    for (const auto& p : report.finite)
        if (p.cls == PointClass::Irregular)
            fail(ErrorKind::Irregular, "irregular singularity at " + p.location.str(8) +
                                           ": branch cut proposal handles regular problems only");
    // An irregular point at infinity does not block the proposal: no cut ends
    // in its neighbourhood, and entire functions (exp, sin) need no cuts.

    CutSystem system;
    system.base_point = ics.base_complex();

    auto idx = report.non_apparent();
    system.rho0 = pow10(30);
    for (size_t j : idx) system.rho0 = std::min(system.rho0, abs(report.finite[j].location - system.base_point));
    if (idx.empty()) {
        system.rho0 = Real(0);
        system.rule_report = check_rules(system, report, sym);
        return system;
    }
    for (size_t j : idx)
        if (same_point(report.finite[j].location, system.base_point))
            fail(ErrorKind::Usage, "base point coincides with a non-apparent singularity");

    for (size_t j : idx) {
        BranchCut cut;
        cut.origin = static_cast<int>(j);
        cut.kind = CutKind::Ray;
        cut.direction = unit(report.finite[j].location - system.base_point);
        system.cuts.push_back(cut);
    }

    // split rays that pass through another non-apparent singularity: the inner
    // ray becomes a chord to the intervening point, whose own outward ray
    // continues the line
    for (auto& cut : system.cuts) {
        if (cut.kind != CutKind::Ray) continue;
        Complex o = report.finite[cut.origin].location;
        int best = -1;
        Real best_t = pow10(30);
        for (size_t j : idx) {
            if (static_cast<int>(j) == cut.origin) continue;
            const Complex& s = report.finite[j].location;
            if (dist_point_ray(s, o, cut.direction) > geom_eps(s)) continue;
            Real t = dot(s - o, cut.direction);
            if (t > geom_eps(s) && t < best_t) {
                best_t = t;
                best = static_cast<int>(j);
            }
        }
        if (best >= 0) {
            cut.kind = CutKind::Chord;
            cut.endpoint = best;
            cut.collinear_review = true;
        }
    }

    system.adherence.assign(system.cuts.size(), default_adherence);
    system.rule_report = check_rules(system, report, sym);
    return system;
}

Germ germ_at(const CutSystem& system, const SingularityReport& report, int singularity_index) {
    for (const auto& cut : system.cuts) {
        Complex dir;
        if (cut.origin == singularity_index) {
            dir = cut.kind == CutKind::Ray
                      ? cut.direction
                      : unit(report.finite[cut.endpoint].location - report.finite[cut.origin].location);
        } else if (cut.kind == CutKind::Chord && cut.endpoint == singularity_index) {
            dir = unit(report.finite[cut.origin].location - report.finite[cut.endpoint].location);
        } else {
            continue;
        }
        Germ germ;
        germ.singularity = singularity_index;
        germ.direction = dir;
        germ.approach_angle = arg(dir);
        germ.adherence = system.adherence[&cut - system.cuts.data()];
        germ.exponents = report.finite[singularity_index].exponents;
        germ.has_log = report.finite[singularity_index].has_log;
        return germ;
    }
    fail(ErrorKind::Usage, "singularity is not an endpoint of any cut in the system");
}

const char* rule_name(int index) {
    switch (index) {
        case 2: return "R2'";
        case 3: return "R3'";
        case 4: return "R4'";
        case 5: return "R5'";
        case 6: return "R6'";
        case 7: return "R7'";
    }
    return "?";
}

}  // namespace branchcut
