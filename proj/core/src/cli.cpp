#include "branchcut/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "branchcut/dsl.hpp"
#include "branchcut/evaluate.hpp"
#include "branchcut/jsonio.hpp"
#include "branchcut/roots.hpp"
#include "branchcut/svg.hpp"

namespace branchcut {

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Usage: return 2;
        case ErrorKind::Irregular: return 3;
        case ErrorKind::RuleFailure: return 4;
        case ErrorKind::Numeric:
        case ErrorKind::Internal: return 5;
    }
    return 5;
}

std::string load_ode_argument(const std::string& arg) {
    std::ifstream in(arg);
    if (in.good()) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

struct CommonArgs {
    std::string ode;
    unsigned precision = 0;
    bool json = false;
    std::string adherence = "ccw";
    bool allow_chords = false;
    double root_tol = kDefaultRootTol;
    double rho = 0.5;
    double clearance = 1e-8;
    long max_terms = 10000;
    std::string at;
    std::string path;
    std::string svg_file;
};

void apply_precision(const CommonArgs& args) {
    unsigned digits = args.precision;
    if (digits == 0) {
        if (const char* env = std::getenv("BRANCHCUT_PRECISION")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) digits = static_cast<unsigned>(v);
        }
    }
    if (digits == 0) digits = kDefaultWorkingDigits;
    set_working_digits(digits);
}

ContinuationOptions continuation_options(const CommonArgs& args) {
    ContinuationOptions opts;
    opts.step_ratio = args.rho;
    opts.clearance = args.clearance;
    opts.max_terms = args.max_terms;
    return opts;
}

struct Loaded {
    ProblemSpec spec;
    Analysis analysis;
};

Loaded load(const CommonArgs& args) {
    Loaded l;
    l.spec = parse_ode(load_ode_argument(args.ode));
    l.analysis = analyze(l.spec, Real(args.root_tol));
    return l;
}

Adherence adherence_of(const CommonArgs& args) {
    if (args.adherence == "ccw") return Adherence::CounterClockwise;
    if (args.adherence == "cw") return Adherence::Clockwise;
    fail(ErrorKind::Usage, "--adherence must be ccw or cw");
}

std::vector<std::string> failing_rules(const RuleReport& r) {
    std::vector<std::string> out;
    const RuleCheck* checks[] = {&r.r2, &r.r3, &r.r4, &r.r5, &r.r6, &r.r7};
    for (int k = 0; k < 6; ++k)
        if (!checks[k]->pass) out.push_back(rule_name(k + 2));
    return out;
}

// human-readable complex: suppress components drowned by the other one
std::string pretty(const Complex& z, unsigned digits = 6) {
    Real mag = std::max(abs(z.re), abs(z.im));
    Complex c = z;
    if (mag > 0) {
        Real cut = mag * pow10(-static_cast<long>(working_digits()) + 10);
        if (abs(c.re) < cut) c.re = Real(0);
        if (abs(c.im) < cut) c.im = Real(0);
    }
    if (c.im == 0) return real_str(c.re, digits);
    return c.str(digits);
}

int cmd_analyze(const CommonArgs& args, std::ostream& out) {
    Loaded l = load(args);
    Json j;
    j["operator_order"] = l.analysis.op.order();
    j["singularities"] = to_json(l.analysis.report);
    j["symmetries"] = to_json(l.analysis.profile);
    if (args.json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "operator order: " << l.analysis.op.order() << "\n";
    out << "finite singular points:\n";
    for (const auto& p : l.analysis.report.finite) {
        out << "  " << p.location.str(12) << "  [" << point_class_name(p.cls) << "]";
        if (p.exact) out << "  = " << p.exact->str();
        if (p.cls != PointClass::Irregular && p.has_log) out << "  (log germ)";
        out << "\n";
    }
    if (l.analysis.report.finite.empty()) out << "  none\n";
    out << "infinity: " << infinity_class_name(l.analysis.report.infinity);
    if (l.analysis.report.infinity_apparent) out << " (apparent)";
    out << "\n";
    out << "conjugation symmetry: " << (l.analysis.profile.conjugation ? "yes" : "no") << "\n";
    if (l.analysis.profile.infinite_order)
        out << "rotation order: infinite (scaling-homogeneous operator)\n";
    else
        out << "rotation order: " << l.analysis.profile.rotation_order << "\n";
    if (l.analysis.profile.affine)
        out << "affine symmetry: y(wx) = (" << pretty(l.analysis.profile.affine->lambda) << ") y(x) + ("
            << pretty(l.analysis.profile.affine->mu) << ")\n";
    return 0;
}

int cmd_cuts(const CommonArgs& args, std::ostream& out, std::ostream& err) {
    Loaded l = load(args);
    CutSystem system = propose_cuts(l.analysis.report, l.analysis.profile, l.analysis.ics, adherence_of(args));
    Json j = to_json(system, l.analysis.report);
    if (args.allow_chords) {
        Engine engine = make_engine(l.analysis, continuation_options(args));
        Solution sol = make_solution(engine, l.analysis.ics);
        j["alternative_chords"] = to_json(
            alternative_chords(engine, l.analysis.report, l.analysis.profile, sol), l.analysis.report);
    }
    if (args.json) {
        out << j.dump(2) << "\n";
    } else {
        for (size_t k = 0; k < system.cuts.size(); ++k) {
            const auto& c = system.cuts[k];
            const auto& o = l.analysis.report.finite[c.origin].location;
            if (c.kind == CutKind::Ray)
                out << "ray from " << o.str(12) << " at angle " << arg(c.direction).str(12) << "\n";
            else
                out << "chord from " << o.str(12) << " to "
                    << l.analysis.report.finite[c.endpoint].location.str(12) << "\n";
        }
        const RuleCheck* checks[] = {&system.rule_report.r2, &system.rule_report.r3,
                                     &system.rule_report.r4, &system.rule_report.r5,
                                     &system.rule_report.r6, &system.rule_report.r7};
        for (int k = 0; k < 6; ++k)
            out << rule_name(k + 2) << ": " << (checks[k]->pass ? "pass" : "FAIL") << " ("
                << checks[k]->detail << ")\n";
    }
    auto failures = failing_rules(system.rule_report);
    if (!failures.empty()) {
        err << "rule failures:";
        for (const auto& f : failures) err << " " << f;
        err << "\n";
        return 4;
    }
    return 0;
}

int cmd_eval(const CommonArgs& args, std::ostream& out, std::ostream& err) {
    if (args.at.empty()) fail(ErrorKind::Usage, "eval requires --at <complex>");
    Loaded l = load(args);
    Complex z = parse_complex_literal(args.at);
    CutSystem system = propose_cuts(l.analysis.report, l.analysis.profile, l.analysis.ics, adherence_of(args));
    auto failures = failing_rules(system.rule_report);
    if (!failures.empty()) {
        err << "warning: rule failures:";
        for (const auto& f : failures) err << " " << f;
        err << "\n";
    }
    Engine engine = make_engine(l.analysis, continuation_options(args));
    Solution sol = make_solution(engine, l.analysis.ics);
    EvalResult r = evaluate(engine, sol, system, l.analysis.report, z);
    if (args.json) {
        Json j = to_json(r.jet);
        j["value"] = to_json(r.value);
        j["on_cut"] = r.on_cut;
        out << j.dump(2) << "\n";
    } else {
        out << r.value.str() << "\n";
        out << "error estimate: " << r.error_estimate.str(3) << "\n";
    }
    return 0;
}

int cmd_continue(const CommonArgs& args, std::ostream& out) {
    if (args.path.empty()) fail(ErrorKind::Usage, "continue requires --path <list>");
    Loaded l = load(args);
    Path path = parse_path_literal(args.path);
    Engine engine = make_engine(l.analysis, continuation_options(args));
    Solution sol = make_solution(engine, l.analysis.ics);
    Jet jet = continue_solution(engine, sol, path);
    if (args.json) {
        out << to_json(jet).dump(2) << "\n";
    } else {
        out << "jet at " << jet.point.str() << ":\n";
        for (size_t k = 0; k < jet.values.size(); ++k)
            out << "  y" << std::string(k, '\'') << " = " << jet.values[k].str() << "\n";
        out << "error estimate: " << jet.error_estimate.str(3) << "\n";
    }
    return 0;
}

int cmd_monodromy(const CommonArgs& args, std::ostream& out) {
    if (args.path.empty()) fail(ErrorKind::Usage, "monodromy requires --path <list>");
    Loaded l = load(args);
    Path loop = parse_path_literal(args.path);
    Engine engine = make_engine(l.analysis, continuation_options(args));
    MonodromyResult m = engine.monodromy(loop);
    if (args.json) {
        out << to_json(m).dump(2) << "\n";
    } else {
        if (m.matrix.size() == 1) {
            out << m.matrix[0][0].str() << "\n";
        } else {
            for (const auto& row : m.matrix) {
                out << "[";
                for (size_t c = 0; c < row.size(); ++c) out << (c ? ", " : " ") << row[c].str(12);
                out << " ]\n";
            }
        }
        out << "deviation from identity: " << m.deviation_from_identity.str(3) << "\n";
    }
    return 0;
}

int cmd_plot(const CommonArgs& args, std::ostream& out) {
    Loaded l = load(args);
    CutSystem system = propose_cuts(l.analysis.report, l.analysis.profile, l.analysis.ics, adherence_of(args));
    std::string svg = render_svg(system, l.analysis.report);
    if (args.svg_file.empty()) {
        out << svg;
    } else {
        std::ofstream f(args.svg_file);
        if (!f.good()) fail(ErrorKind::Usage, "cannot open SVG output file " + args.svg_file);
        f << svg;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"branch cuts and analytic continuation for linear ODEs"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string active;
    for (const char* name : {"analyze", "cuts", "eval", "continue", "monodromy", "plot"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--ode", common.ode, "ODE with initial conditions, literal text or a file path")
            ->required();
        sub->add_option("--precision", common.precision, "working precision in decimal digits");
        sub->add_flag("--json", common.json, "emit JSON");
        sub->add_option("--adherence", common.adherence, "on-cut adherence side: ccw or cw");
        sub->add_option("--root-tol", common.root_tol, "root residual tolerance");
        sub->add_option("--rho", common.rho, "step ratio relative to the singularity distance");
        sub->add_option("--clearance", common.clearance, "minimum path clearance from singularities");
        sub->add_option("--max-terms", common.max_terms, "Taylor term budget per step");
        if (std::string(name) == "cuts") sub->add_flag("--allow-chords", common.allow_chords, "offer residue-cancelling chord systems");
        if (std::string(name) == "eval") sub->add_option("--at", common.at, "evaluation point, complex literal")->required();
        if (std::string(name) == "continue" || std::string(name) == "monodromy")
            sub->add_option("--path", common.path, "path literal [v1, v2, ...]")->required();
        if (std::string(name) == "plot") sub->add_option("--svg", common.svg_file, "SVG output file (stdout when absent)");
        sub->callback([&active, name]() { active = name; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        apply_precision(common);
        if (active == "analyze") return cmd_analyze(common, out);
        if (active == "cuts") return cmd_cuts(common, out, err);
        if (active == "eval") return cmd_eval(common, out, err);
        if (active == "continue") return cmd_continue(common, out);
        if (active == "monodromy") return cmd_monodromy(common, out);
        if (active == "plot") return cmd_plot(common, out);
        err << "error: no command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace branchcut
