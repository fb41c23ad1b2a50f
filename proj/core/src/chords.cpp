#include <algorithm>
#include <functional>

#include "branchcut/cuts.hpp"
#include "branchcut/geometry.hpp"

namespace branchcut {

namespace {

using Pairing = std::vector<std::pair<size_t, size_t>>;  // indices into report.finite

void enumerate_matchings(std::vector<size_t> todo, Pairing& current, std::vector<Pairing>& out) {
    if (todo.empty()) {
        out.push_back(current);
        return;
    }
    size_t first = todo.front();
    for (size_t k = 1; k < todo.size(); ++k) {
        Pairing next = current;
        next.emplace_back(first, todo[k]);
        std::vector<size_t> rest;
        for (size_t j = 1; j < todo.size(); ++j)
            if (j != k) rest.push_back(todo[j]);
        enumerate_matchings(std::move(rest), next, out);
    }
}

int conj_image(const SingularityReport& rep, size_t i) {
    Complex target = rep.finite[i].location.conj();
    for (size_t j = 0; j < rep.finite.size(); ++j)
        if (abs(rep.finite[j].location - target) <= pow10(-20) * std::max(Real(1), abs(target)))
            return static_cast<int>(j);
    return -1;
}

bool pairing_contains(const Pairing& p, size_t a, size_t b) {
    for (auto& [x, y] : p)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

}  // namespace

ChordSearch alternative_chords(const Engine& engine, const SingularityReport& report,
                               const SymmetryProfile& sym, const Solution& solution, double tol) {
    ChordSearch result;
    auto idx = report.non_apparent();
    if (idx.size() < 2) return result;
    if (idx.size() % 2 != 0) {
        result.skipped.push_back("odd number of singularities: no complete chord pairing exists");
        return result;
    }
    if (idx.size() > 10) {
        result.skipped.push_back("too many singularities for chord enumeration");
        return result;
    }

    std::vector<Pairing> candidates;
    Pairing current;
    enumerate_matchings(idx, current, candidates);

    Real delta(engine.options().clearance);

    for (const auto& pairing : candidates) {
        // conjugation closure filter
        if (sym.conjugation) {
            bool closed = true;
            for (auto& [a, b] : pairing) {
                int ca = conj_image(report, a);
                int cb = conj_image(report, b);
                if (ca < 0 || cb < 0 || !pairing_contains(pairing, ca, cb)) {
                    closed = false;
                    break;
                }
            }
            if (!closed) continue;
        }

        // chords must not run through other non-apparent singularities
        bool geometric_ok = true;
        std::string why;
        for (auto& [a, b] : pairing) {
            Complex A = report.finite[a].location, B = report.finite[b].location;
            for (size_t j : idx) {
                if (j == a || j == b) continue;
                if (dist_point_segment(report.finite[j].location, A, B) <= delta * 10) {
                    geometric_ok = false;
                    why = "chord " + A.str(6) + " -- " + B.str(6) + " passes through another singularity";
                    break;
                }
            }
            if (!geometric_ok) break;
        }
        if (!geometric_ok) {
            result.skipped.push_back(why);
            continue;
        }

        // trivial-monodromy test per chord: a rectangle loop enclosing exactly
        // its two endpoints, entered from the base point
        Real worst(0);
        bool all_trivial = true;
        std::string skip_reason;
        for (auto& [a, b] : pairing) {
            Complex A = report.finite[a].location, B = report.finite[b].location;
            Complex u = unit(B - A);
            Complex v = Complex::i() * u;
            Real margin = abs(B - A) / 4;
            for (size_t j : idx) {
                if (j == a || j == b) continue;
                margin = std::min(margin, dist_point_segment(report.finite[j].location, A, B) / 2);
            }
            if (margin <= delta * 10) {
                skip_reason = "no loop fits around chord " + A.str(6) + " -- " + B.str(6);
                break;
            }
            Complex mu_ = Complex(margin) * u;
            Complex mv = Complex(margin) * v;
            std::vector<Complex> rect = {A - mu_ + mv, B + mu_ + mv, B + mu_ - mv, A - mu_ - mv};

            // connect the base point to the first rectangle corner with a
            // clear straight leg
            int entry = -1;
            for (int c = 0; c < 4; ++c) {
                bool clear = true;
                for (const auto& s : engine.singular().blocking)
                    if (dist_point_segment(s, solution.base.point, rect[c]) <= delta) {
                        clear = false;
                        break;
                    }
                if (abs(rect[c] - solution.base.point) <= delta) clear = false;
                if (clear) {
                    entry = c;
                    break;
                }
            }
            if (entry < 0) {
                skip_reason = "no clear approach from the base point to a loop around chord " + A.str(6) +
                              " -- " + B.str(6);
                break;
            }

            Path approach;
            approach.vertices = {solution.base.point, rect[entry]};
            Jet at_corner = continue_solution(engine, solution, approach);

            Path loop;
            loop.vertices.push_back(rect[entry]);
            for (int c = 1; c <= 4; ++c) loop.vertices.push_back(rect[(entry + c) % 4]);
            Jet back = engine.continue_along(at_corner, loop);

            Real scale(1);
            for (const auto& val : at_corner.values) scale = std::max(scale, abs(val));
            Real dev(0);
            for (size_t r = 0; r < at_corner.values.size(); ++r)
                dev = std::max(dev, abs(back.values[r] - at_corner.values[r]));
            dev /= scale;
            worst = std::max(worst, dev);
            if (dev > Real(tol)) {
                all_trivial = false;
                break;
            }
        }
        if (!skip_reason.empty()) {
            result.skipped.push_back(skip_reason);
            continue;
        }
        if (!all_trivial) continue;

        ChordSystem sys;
        Real rho0 = pow10(30);
        for (size_t j : idx) rho0 = std::min(rho0, abs(report.finite[j].location - solution.base.point));
        for (auto& [a, b] : pairing) {
            BranchCut cut;
            cut.origin = static_cast<int>(a);
            cut.endpoint = static_cast<int>(b);
            cut.kind = CutKind::Chord;
            cut.direction = unit(report.finite[b].location - report.finite[a].location);
            if (dist_point_segment(solution.base.point, report.finite[a].location,
                                   report.finite[b].location) < rho0 * (1 - Real("1e-12")))
                sys.violates_r2 = true;
            sys.chords.push_back(cut);
        }
        sys.max_monodromy_deviation = worst;
        result.offered.push_back(std::move(sys));
    }
    return result;
}

}  // namespace branchcut
