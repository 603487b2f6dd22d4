#include "doctest.h"

#include "sphereavoid/certificate.hpp"
#include "sphereavoid/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace sphereavoid;

namespace {

struct RunOutput {
    int code;
    std::string out;
    std::string err;
};

RunOutput run_cli(const RunConfig& cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// temp file helper; unique per test via the name hint
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "")
        : path("/tmp/sphereavoid_test_" + name) {
        if (!content.empty()) std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("verify-paper-certificate accepts and reports the exact numbers") {
    RunConfig cfg;
    cfg.command = "verify-paper-certificate";
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "objective: 4694899/15000000"));
    CHECK(contains(r.out, "claimed bound: 313/1000"));
    CHECK(contains(r.out, "verdict: ACCEPTED"));
    CHECK(contains(r.out, "margin exactly 0"));
}

TEST_CASE("verify-paper-certificate emits machine-readable json") {
    RunConfig cfg;
    cfg.command = "verify-paper-certificate";
    cfg.format = OutputFormat::json;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["accepted"] == true);
    CHECK(j["objective"].get<std::string>() == "4694899/15000000");
    CHECK(j["claimed_bound"].get<std::string>() == "313/1000");
    CHECK(j["margins"].is_array());
    CHECK(j["margins"].size() == 40);
    CHECK(j["margins"][0]["sign"] == 0);
    CHECK(j["margins"][1]["sign"] == 1);
    CHECK(j["tail"]["passed"] == true);
    // rationals in enclosures travel as exact strings
    CHECK(j["margins"][1]["enclosure"]["lo"].is_string());
}

TEST_CASE("verify reads a certificate file and rejects tampering") {
    const nlohmann::json good = certificate_to_json(builtin_certificate());

    TempFile ok("good.json", good.dump());
    RunConfig cfg;
    cfg.command = "verify";
    cfg.input_path = ok.path;
    CHECK(run_cli(cfg).code == 0);

    nlohmann::json bad = good;
    bad["b1"] = "118614/1000000";  // feasibility breaks
    TempFile rej("bad.json", bad.dump());
    cfg.input_path = rej.path;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "verdict: REJECTED"));

    nlohmann::json neg = good;
    neg["terms"][0]["multiplier"] = "-1/2";  // malformed, not just rejected
    TempFile mal("neg.json", neg.dump());
    cfg.input_path = mal.path;
    CHECK(run_cli(cfg).code == 2);

    cfg.input_path = "/tmp/sphereavoid_test_does_not_exist.json";
    CHECK(run_cli(cfg).code == 2);

    TempFile garbage("garbage.json", "not json at all {");
    cfg.input_path = garbage.path;
    CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("bound reports the weak LP value without cuts") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.degree = 6;
    cfg.q_max = 3;
    cfg.rounds = 4;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "bound: 1/3"));
    CHECK(contains(r.out, "no violated cut remains"));
}

TEST_CASE("bound emits a certificate that verifies on its own") {
    TempFile emitted("emitted.json");
    RunConfig cfg;
    cfg.command = "bound";
    cfg.degree = 40;
    cfg.q_max = 5;
    cfg.rounds = 10;
    cfg.output_path = emitted.path;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "round 0"));
    CHECK(contains(r.out, "t(2,5)"));

    std::ifstream in(emitted.path);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    const DualCertificate cert = certificate_from_json(j);
    CHECK(cert.cutoff == 40);
    CHECK(verify(cert).accepted);

    // and the CLI agrees with itself
    RunConfig vcfg;
    vcfg.command = "verify";
    vcfg.input_path = emitted.path;
    CHECK(run_cli(vcfg).code == 0);
}

TEST_CASE("bound json output carries the round trajectory") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.degree = 12;
    cfg.q_max = 5;
    cfg.rounds = 8;
    cfg.format = OutputFormat::json;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["rounds"].is_array());
    CHECK(j["rounds"][0]["objective"].get<std::string>() == "1/3");
    CHECK(j["exhausted"].is_boolean());
    CHECK(j["objective"].is_string());
}

TEST_CASE("construct prints caps and validates on request") {
    RunConfig cfg;
    cfg.command = "construct";
    cfg.t = "0";
    cfg.validate = true;
    cfg.samples = 50000;
    cfg.seed = 17;
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "caps: 2"));
    CHECK(contains(r.out, "measure"));
    CHECK(contains(r.out, "violations: 0"));

    cfg.t = "7/25";
    cfg.validate = false;
    const RunOutput exact = run_cli(cfg);
    CHECK(exact.code == 0);
    CHECK(contains(exact.out, "1/5"));  // rational measure printed exactly
}

TEST_CASE("construct rejects out-of-range or malformed t") {
    RunConfig cfg;
    cfg.command = "construct";
    cfg.t = "1/2";  // above the two-cap limit
    CHECK(run_cli(cfg).code == 2);
    cfg.t = "abc";
    CHECK(run_cli(cfg).code == 2);
    cfg.t = "-3/2";
    CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("circle answers the rational and irrational rotation cases") {
    RunConfig cfg;
    cfg.command = "circle";
    cfg.p = 1;
    cfg.q = 3;
    const RunOutput odd = run_cli(cfg);
    CHECK(odd.code == 0);
    CHECK(odd.out == "1/3 (attained)\n");

    cfg.p = 1;
    cfg.q = 4;
    const RunOutput even = run_cli(cfg);
    CHECK(even.code == 0);
    CHECK(even.out == "1/2 (attained)\n");

    RunConfig irr;
    irr.command = "circle";
    irr.irrational = true;
    const RunOutput ir = run_cli(irr);
    CHECK(ir.code == 0);
    CHECK(ir.out == "1/2 (not attained)\n");

    RunConfig missing;
    missing.command = "circle";
    CHECK(run_cli(missing).code == 2);  // neither fraction nor --irrational

    cfg.p = 2;
    cfg.q = 4;
    CHECK(run_cli(cfg).code == 2);  // not reduced
}

TEST_CASE("gegenbauer prints exact values at rational and node arguments") {
    RunConfig cfg;
    cfg.command = "gegenbauer";
    cfg.degree = 2;
    cfg.at = "1/2";
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "-1/8"));  // (3/4 - 1)/2

    cfg.degree = 3;
    cfg.at = "+t(1,3)";
    const RunOutput alg = run_cli(cfg);
    CHECK(alg.code == 0);
    // (5 t^3 - 3 t)/2 at t = sqrt(1/3): coordinates (0, -2/3)
    CHECK(contains(alg.out, "(0, -2/3) over Q(sqrt(1/3))"));

    cfg.degree = 2;
    cfg.at = "t(1,3)";  // sign optional
    const RunOutput zero = run_cli(cfg);
    CHECK(zero.code == 0);
    CHECK(contains(zero.out, "0"));

    cfg.at = "t(3,7)";  // no exact value: an enclosure is printed
    const RunOutput enc = run_cli(cfg);
    CHECK(enc.code == 0);
    CHECK(contains(enc.out, "["));

    cfg.nu = "0";
    cfg.at = "1/4";
    cfg.degree = 2;
    const RunOutput cheb = run_cli(cfg);
    CHECK(cheb.code == 0);
    CHECK(contains(cheb.out, "-7/8"));  // 2 (1/16) - 1

    cfg.at = "t(9,11)";  // invalid node
    CHECK(run_cli(cfg).code == 2);
    cfg.at = "";
    CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("graph-bound computes the octahedron ratio from a points file") {
    TempFile pts("octahedron.txt",
                 "3 6\n1 0 0\n-1 0 0\n0 1 0\n0 -1 0\n0 0 1\n0 0 -1\n");
    RunConfig cfg;
    cfg.command = "graph-bound";
    cfg.input_path = pts.path;
    cfg.forbid = "0";
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vertices: 6"));
    CHECK(contains(r.out, "edges: 12"));
    CHECK(contains(r.out, "independence number: 2"));
    CHECK(contains(r.out, "bound: 1/3"));

    cfg.format = OutputFormat::json;
    const RunOutput rj = run_cli(cfg);
    const nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j["bound"].get<std::string>() == "1/3");
    CHECK(j["independence_number"] == 2);

    cfg.format = OutputFormat::human;
    cfg.forbid = "0,1/2";
    CHECK(run_cli(cfg).code == 0);
    cfg.forbid = "1";
    CHECK(run_cli(cfg).code == 2);  // self-loops are malformed input
    cfg.forbid = "";                // empty forbidden set: edgeless graph
    const RunOutput edgeless = run_cli(cfg);
    CHECK(edgeless.code == 0);
    CHECK(contains(edgeless.out, "bound: 1"));
    cfg.forbid = "0";
    cfg.input_path = "/tmp/sphereavoid_test_missing_points.txt";
    CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("mu prints exact odd-dimension eigenvalues and even enclosures") {
    RunConfig cfg;
    cfg.command = "mu";
    cfg.n = 3;
    cfg.degree = 2;
    cfg.t = "1/2";
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "-1/8"));  // mu_2(1/2) = P_2(1/2)

    cfg.n = 4;
    const RunOutput enc = run_cli(cfg);
    CHECK(enc.code == 0);
    CHECK(contains(enc.out, "["));

    cfg.t = "2";
    CHECK(run_cli(cfg).code == 2);
    cfg.t = "1/2";
    cfg.n = 1;
    CHECK(run_cli(cfg).code == 2);
}

TEST_CASE("unknown commands exit with usage") {
    RunConfig cfg;
    cfg.command = "make-coffee";
    const RunOutput r = run_cli(cfg);
    CHECK(r.code == 2);
    CHECK(contains(r.err, "unknown command: make-coffee"));
    CHECK(contains(r.err, "commands:"));
}
