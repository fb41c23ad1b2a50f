#pragma once

#include <string>
#include <vector>

#include "branchcut/continuation.hpp"
#include "branchcut/singularities.hpp"
#include "branchcut/symmetry.hpp"

namespace branchcut {

enum class CutKind { Ray, Chord };
enum class Adherence { CounterClockwise, Clockwise };

struct BranchCut {
    int origin;  // index into SingularityReport::finite
    CutKind kind = CutKind::Ray;
    Complex direction;  // unit vector, rays only
    int endpoint = -1;  // chords only
    bool collinear_review = false;  // ray was split at an intervening singularity
};

struct RuleCheck {
    bool pass = true;
    std::string detail;
};

struct RuleReport {
    RuleCheck r2, r3, r4, r5, r6, r7;
    bool all_pass() const { return r2.pass && r3.pass && r4.pass && r5.pass && r6.pass && r7.pass; }
};

struct CutSystem {
    std::vector<BranchCut> cuts;
    Complex base_point;
    std::vector<Adherence> adherence;  // per cut
    RuleReport rule_report;
    Real rho0 = Real(0);  // distance from the base point to the nearest non-apparent singularity
    bool validated_chords = false;  // chord system passed the trivial-monodromy check
};

// Local data of a cut at one of its endpoints: departure angle, adherence
// side, and the indicial exponents there.
struct Germ {
    int singularity;
    Real approach_angle;
    Complex direction;
    Adherence adherence = Adherence::CounterClockwise;
    std::vector<Complex> exponents;
    bool has_log = false;
};

// Default construction: one ray per non-apparent finite singularity, radially
// away from the base point; rays through an intervening singularity are split
// into a chord plus the outer ray and flagged for review. All rules are then
// verified into rule_report.
CutSystem propose_cuts(const SingularityReport& report, const SymmetryProfile& sym,
                       const InitialConditions& ics,
                       Adherence default_adherence = Adherence::CounterClockwise);

RuleReport check_rules(const CutSystem& system, const SingularityReport& report,
                       const SymmetryProfile& sym);

Germ germ_at(const CutSystem& system, const SingularityReport& report, int singularity_index);

// geometry shared with evaluation
Real cut_distance(const CutSystem& system, const BranchCut& cut, const SingularityReport& report,
                  const Complex& p);
Complex cut_endpoint_location(const BranchCut& cut, const SingularityReport& report, bool far_end);

struct ChordSystem {
    std::vector<BranchCut> chords;
    Real max_monodromy_deviation = Real(0);
    bool violates_r2 = false;  // some chord enters the base convergence disk
};

struct ChordSearch {
    std::vector<ChordSystem> offered;
    std::vector<std::string> skipped;  // candidates dropped with the reason
};

// Pairings of the non-apparent singularities by chords (conjugation-closed
// when conjugation is detected) whose enclosing loops all carry trivial
// monodromy of the solution. These systems violate the simple-connectivity
// rule as stated and are labeled as alternatives.
ChordSearch alternative_chords(const Engine& engine, const SingularityReport& report,
                               const SymmetryProfile& sym, const Solution& solution,
                               double tol = 1e-10);

const char* rule_name(int index);  // 2..7 -> "R2'".."R7'"

}  // namespace branchcut
