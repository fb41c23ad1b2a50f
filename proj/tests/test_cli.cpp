#include <doctest.h>

#include <branchcut/cli.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = branchcut::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// minimal well-formedness scan: every opened tag is closed in order
bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    size_t k = 0;
    while ((k = text.find('<', k)) != std::string::npos) {
        size_t end = text.find('>', k);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(k + 1, end - k - 1);
        k = end + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        if (tag.back() == '/') continue;  // self-closing
        if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else {
            std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
            stack.push_back(name);
        }
    }
    return stack.empty();
}

const char* kArctan = "(1+x^2)*D = 1 ; y(0)=0";
const char* kSqrt = "x*D - 1/2 = 0 ; y(1)=1";
const char* kLog = "x*D = 1 ; y(1)=0";

}  // namespace

TEST_CASE("analyze produces valid JSON with the expected shape") {
    auto r = run({"analyze", "--ode", kArctan, "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["operator_order"] == 2);
    CHECK(j["singularities"]["finite"].size() == 2);
    CHECK(j["singularities"]["infinity"] == "ordinary");
    CHECK(j["symmetries"]["conjugation"] == true);
    CHECK(j["symmetries"]["rotation_order"] == 2);
    CHECK(j["symmetries"].contains("affine"));
    // complex numbers are encoded as string decimals
    CHECK(j["singularities"]["finite"][0]["location"]["re"].is_string());
}

TEST_CASE("cuts emits rays, rule report and germs") {
    auto r = run({"cuts", "--ode", kArctan, "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["cuts"].size() == 2);
    CHECK(j["cuts"][0]["kind"] == "ray");
    CHECK(j["all_rules_pass"] == true);
    CHECK(j["rule_report"]["R2'"]["pass"] == true);
    CHECK(j["rule_report"]["R7'"]["pass"] == true);
    CHECK(j["germs"].size() == 2);
}

TEST_CASE("eval matches ln(-1) = i pi in text mode") {
    auto r = run({"eval", "--ode", kLog, "--at", "-1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("3.14159265358979") != std::string::npos);
}

TEST_CASE("monodromy of sqrt around the unit diamond is -1") {
    auto r = run({"monodromy", "--ode", kSqrt, "--path", "[1, i, -1, -i, 1]", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    double re = std::stod(j["matrix"][0][0]["re"].get<std::string>());
    double im = std::stod(j["matrix"][0][0]["im"].get<std::string>());
    CHECK(re == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(im == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("continue walks a path and reports the jet") {
    auto r = run({"continue", "--ode", kLog, "--path", "[1, i, -1, -i, 1]", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::string im = j["values"][0]["im"].get<std::string>();
    CHECK(im.substr(0, 7) == "6.28318");
}

TEST_CASE("plot writes well-formed SVG") {
    auto r = run({"plot", "--ode", kArctan});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(well_formed_xml(r.out));
}

TEST_CASE("exit code 2 on parse errors") {
    auto r = run({"analyze", "--ode", "(1+x^2)*D = ; y(0)=0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("exit code 3 on irregular singularities for cuts") {
    auto r = run({"cuts", "--ode", "x^3*D^2 + D = 0 ; y(1)=1, y'(1)=1"});
    CHECK(r.code == 3);
}

TEST_CASE("exit code 4 when a rule fails") {
    // rotation-symmetric operator with an off-center base point: the radial
    // proposal cannot satisfy R4'
    auto r = run({"cuts", "--ode", "(1+x^2)*D = 1 ; y(1)=0"});
    CHECK(r.code == 4);
    CHECK(r.err.find("R4'") != std::string::npos);
}

TEST_CASE("exit code 5 on numeric failure") {
    auto r = run({"eval", "--ode", kArctan, "--at", "i"});
    CHECK(r.code == 5);
}

TEST_CASE("adherence flag flips the on-cut side") {
    auto ccw = run({"eval", "--ode", kLog, "--at", "-1", "--json"});
    auto cw = run({"eval", "--ode", kLog, "--at", "-1", "--adherence", "cw", "--json"});
    REQUIRE(ccw.code == 0);
    REQUIRE(cw.code == 0);
    auto jc = nlohmann::json::parse(ccw.out);
    auto jw = nlohmann::json::parse(cw.out);
    CHECK(jc["value"]["im"].get<std::string>().substr(0, 4) == "3.14");
    CHECK(jw["value"]["im"].get<std::string>().substr(0, 5) == "-3.14");
}

TEST_CASE("allow-chords lists the arctan segment alternative") {
    auto r = run({"cuts", "--ode", kArctan, "--json", "--allow-chords"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("alternative_chords"));
    CHECK(j["alternative_chords"]["offered"].size() == 1);
}

TEST_CASE("ode argument may be a file") {
    std::string path = "cli_test_ode.txt";
    {
        std::ofstream f(path);
        f << kArctan;
    }
    auto r = run({"analyze", "--ode", path, "--json"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["operator_order"] == 2);
}

TEST_CASE("precision flag reaches the output") {
    auto r = run({"eval", "--ode", kLog, "--at", "-1", "--precision", "36", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    // 36 significant digits requested; string carries them
    CHECK(j["value"]["im"].get<std::string>().size() >= 30);
}
