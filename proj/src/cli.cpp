#include "sphereavoid/cli.hpp"

#include "sphereavoid/certificate.hpp"
#include "sphereavoid/constructions.hpp"
#include "sphereavoid/gegenbauer.hpp"
#include "sphereavoid/graphs.hpp"
#include "sphereavoid/lp.hpp"

#include "json.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace sphereavoid {
namespace {

using nlohmann::json;

constexpr const char* kUsage =
    "commands: verify-paper-certificate | verify FILE | bound | construct |\n"
    "          circle | gegenbauer | graph-bound | mu\n";

std::string dec(const Rational& r) { return r.decimal_str(10); }

std::string scalar_dec(const ExactScalar& v) {
    return dec(enclose(v, Rational::pow10(-25)).lo());
}

int sign_int(Sign s) { return s == Sign::negative ? -1 : (s == Sign::positive ? 1 : 0); }

json interval_json(const RatInterval& iv) {
    return json{{"lo", iv.lo().str()}, {"hi", iv.hi().str()}};
}

json verdict_json(const DualCertificate& cert, const Verdict& v) {
    json margins = json::array();
    for (const auto& m : v.margins)
        margins.push_back({{"i", m.degree},
                           {"sign", sign_int(m.sign)},
                           {"enclosure", interval_json(m.enclosure)}});
    json checks = json::array();
    for (const auto& c : v.tail.checks)
        checks.push_back({{"angle", c.label},
                          {"sin_theta", interval_json(c.sin_theta)},
                          {"envelope", interval_json(c.envelope)},
                          {"ok", c.ok}});
    return json{{"accepted", v.accepted},
                {"objective", v.objective.str()},
                {"claimed_bound", cert.claimed_bound.str()},
                {"multipliers_nonnegative", v.multipliers_nonnegative},
                {"row0_ok", v.row0_ok},
                {"finite_ok", v.finite_ok},
                {"tail_ok", v.tail_ok},
                {"bound_ok", v.bound_ok},
                {"margins", std::move(margins)},
                {"tail", json{{"cutoff", v.tail.cutoff},
                              {"threshold", v.tail.threshold.str()},
                              {"grouping_ok", v.tail.grouping_ok},
                              {"ratios_ok", v.tail.ratios_ok},
                              {"passed", v.tail.passed},
                              {"checks", std::move(checks)}}}};
}

void verdict_human(std::ostream& out, const DualCertificate& cert, const Verdict& v) {
    out << "certificate: n = " << cert.n << ", cutoff = " << cert.cutoff << ", terms = "
        << cert.terms.size() << "\n";
    out << "objective: " << v.objective.str() << " (" << dec(v.objective) << ")\n";
    out << "claimed bound: " << cert.claimed_bound.str() << " (" << dec(cert.claimed_bound)
        << ")\n";
    out << "multipliers nonnegative: " << (v.multipliers_nonnegative ? "yes" : "NO") << "\n";
    if (v.margins.empty()) {
        out << "finite margins: UNDECIDABLE (certificate needs exact node values)\n";
    } else {
        out << "finite margins (i < " << cert.cutoff << "): "
            << (v.finite_ok ? "all nonnegative" : "NEGATIVE MARGIN FOUND") << "\n";
        for (const auto& m : v.margins) {
            if (m.sign == Sign::negative)
                out << "  i = " << m.degree << ": NEGATIVE, enclosure ["
                    << dec(m.enclosure.lo()) << ", " << dec(m.enclosure.hi()) << "]\n";
            else if (m.sign == Sign::zero)
                out << "  i = " << m.degree << ": tight (margin exactly 0)\n";
            else if (m.enclosure.hi() < Rational(1, 1000))
                out << "  i = " << m.degree << ": near-tight, margin in ["
                    << dec(m.enclosure.lo()) << ", " << dec(m.enclosure.hi()) << "]\n";
        }
    }
    out << "tail threshold b1/(b0 + sum b): " << v.tail.threshold.str() << " ("
        << dec(v.tail.threshold) << ")\n";
    for (const auto& c : v.tail.checks)
        out << "  envelope at " << c.label << ": <= " << dec(c.envelope.hi())
            << (c.ok ? " ok" : " FAIL") << "\n";
    out << "tail step-ratio audit: " << (v.tail.ratios_ok ? "ok" : "FAIL") << "\n";
    out << "tail: " << (v.tail_ok ? "pass" : "FAIL") << "\n";
    out << "objective <= claimed bound: " << (v.bound_ok ? "yes" : "NO") << "\n";
    out << "verdict: " << (v.accepted ? "ACCEPTED" : "REJECTED") << "\n";
}

int cmd_verify(const DualCertificate& cert, const RunConfig& cfg, std::ostream& out) {
    const Verdict v = verify(cert);
    if (cfg.format == OutputFormat::json)
        out << verdict_json(cert, v).dump(2) << "\n";
    else
        verdict_human(out, cert, v);
    return v.accepted ? 0 : 1;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    const CuttingPlaneResult res = cutting_plane_run(cfg.degree, cfg.q_max, cfg.rounds);
    if (cfg.format == OutputFormat::json) {
        json rounds = json::array();
        for (const auto& r : res.rounds) {
            json added = json::array();
            for (const auto& node : r.added) added.push_back(node.label());
            rounds.push_back(
                {{"round", r.round}, {"added", std::move(added)}, {"objective", r.objective.str()}});
        }
        json j{{"degree", cfg.degree},
               {"q_max", cfg.q_max},
               {"rounds", std::move(rounds)},
               {"objective", res.solution.objective.str()},
               {"exhausted", res.exhausted}};
        if (!cfg.output_path.empty()) j["certificate_written"] = cfg.output_path;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : res.rounds) {
            out << "round " << r.round << ":";
            if (!r.added.empty()) {
                out << " added";
                for (const auto& node : r.added) out << " " << node.label();
                out << ";";
            }
            out << " objective " << r.objective.str() << " (" << dec(r.objective) << ")\n";
        }
        if (res.exhausted) out << "no violated cut remains\n";
        out << "bound: " << res.solution.objective.str() << " (" << dec(res.solution.objective)
            << ")\n";
    }
    if (!cfg.output_path.empty()) {
        std::ofstream file(cfg.output_path);
        if (!file)
            throw std::invalid_argument("cannot write certificate to " + cfg.output_path);
        file << certificate_to_json(certificate_from_solution(res.lp, res.solution)).dump(2)
             << "\n";
        if (cfg.format == OutputFormat::human)
            out << "certificate written to " << cfg.output_path << "\n";
    }
    return 0;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    if (cfg.t.empty()) throw std::invalid_argument("construct: --t is required");
    const Rational t = Rational::parse(cfg.t);
    const LowerBoundResult res = single_t_lower_bound(t);

    std::optional<ValidationReport> report;
    if (cfg.validate)
        report = monte_carlo_validate(res.construction, t, cfg.samples, cfg.seed);

    if (cfg.format == OutputFormat::json) {
        json caps = json::array();
        for (size_t k = 0; k < res.construction.caps.size(); ++k) {
            const Cap& cap = res.construction.caps[k];
            caps.push_back({{"center", {cap.center[0], cap.center[1], cap.center[2]}},
                            {"height", cap.height},
                            {"height_exact", to_string(res.construction.exact_heights[k])}});
        }
        json j{{"t", t.str()},
               {"caps", std::move(caps)},
               {"measure", to_string(res.measure)},
               {"measure_enclosure", interval_json(enclose(res.measure, Rational::pow10(-25)))}};
        if (report)
            j["validation"] = json{{"samples", report->samples},
                                   {"seed", cfg.seed},
                                   {"violations", report->violations},
                                   {"measure_estimate", report->measure_estimate},
                                   {"std_error", report->std_error}};
        out << j.dump(2) << "\n";
    } else {
        out << "t = " << t.str() << " (" << dec(t) << ")\n";
        out << "caps: " << res.construction.caps.size() << " (open)\n";
        for (size_t k = 0; k < res.construction.caps.size(); ++k) {
            const Cap& cap = res.construction.caps[k];
            out << "  center (" << cap.center[0] << ", " << cap.center[1] << ", " << cap.center[2]
                << "), height " << to_string(res.construction.exact_heights[k]) << " ("
                << scalar_dec(res.construction.exact_heights[k]) << ")\n";
        }
        out << "measure: " << to_string(res.measure) << " (" << scalar_dec(res.measure) << ")\n";
        if (report) {
            out << "validation: samples = " << report->samples << ", seed = " << cfg.seed << "\n";
            out << "violations: " << report->violations << "\n";
            out << "measure estimate: " << report->measure_estimate << " +- " << report->std_error
                << "\n";
        }
    }
    return report && report->violations > 0 ? 1 : 0;
}

int cmd_circle(const RunConfig& cfg, std::ostream& out) {
    CircleInstance inst;
    if (cfg.irrational) {
        if (cfg.p || cfg.q)
            throw std::invalid_argument("circle: --irrational excludes --p/--q");
        inst = CircleInstance::irrational_rotation();
    } else {
        if (!cfg.p || !cfg.q)
            throw std::invalid_argument("circle: need --p and --q, or --irrational");
        inst = CircleInstance::fraction(*cfg.p, *cfg.q);
    }
    const CircleValue cv = circle_alpha(inst);
    if (cfg.format == OutputFormat::json)
        out << json{{"value", cv.value.str()}, {"attained", cv.attained}}.dump(2) << "\n";
    else
        out << cv.value.str() << (cv.attained ? " (attained)" : " (not attained)") << "\n";
    return 0;
}

std::optional<CycleNode> parse_node_label(const std::string& text) {
    std::string body = text;
    int sign = +1;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        sign = body[0] == '-' ? -1 : +1;
        body.erase(0, 1);
    }
    if (body.size() < 6 || body.compare(0, 2, "t(") != 0 || body.back() != ')')
        return std::nullopt;
    const auto comma = body.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        const long p = std::stol(body.substr(2, comma - 2));
        const long q = std::stol(body.substr(comma + 1, body.size() - comma - 2));
        return CycleNode::make(p, q, sign);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

int cmd_gegenbauer(const RunConfig& cfg, std::ostream& out) {
    if (cfg.at.empty()) throw std::invalid_argument("gegenbauer: --at is required");
    const Rational nu = Rational::parse(cfg.nu);
    const int i = cfg.degree;
    const GegenbauerTable table(nu, i);
    const std::string name = "C_" + std::to_string(i) + "^(" + nu.str() + ")";

    if (const auto node = parse_node_label(cfg.at)) {
        if (node->has_exact_value()) {
            const ExactScalar& exact = node->exact_value();
            if (const auto* r = std::get_if<Rational>(&exact)) {
                const Rational v = table.eval(i, *r * node->sign());
                if (cfg.format == OutputFormat::json)
                    out << json{{"value", v.str()}}.dump(2) << "\n";
                else
                    out << name << "(" << cfg.at << ") = " << v.str() << " (" << dec(v) << ")\n";
                return 0;
            }
            const auto& alg = std::get<AlgebraicReal>(exact);
            const AlgebraicReal v = table.eval(i, node->sign() > 0 ? alg : -alg);
            if (cfg.format == OutputFormat::json)
                out << json{{"value", v.str()},
                            {"enclosure", interval_json(v.enclosure(Rational::pow10(-25)))}}
                           .dump(2)
                    << "\n";
            else
                out << name << "(" << cfg.at << ") = " << v.str() << " ("
                    << dec(v.enclosure(Rational::pow10(-25)).lo()) << ")\n";
            return 0;
        }
        const RatInterval v = table.eval(i, node->signed_enclosure());
        if (cfg.format == OutputFormat::json)
            out << json{{"enclosure", interval_json(v)}}.dump(2) << "\n";
        else
            out << name << "(" << cfg.at << ") in [" << dec(v.lo()) << ", " << dec(v.hi())
                << "]\n";
        return 0;
    }

    const Rational t = Rational::parse(cfg.at);
    const Rational v = table.eval(i, t);
    if (cfg.format == OutputFormat::json)
        out << json{{"value", v.str()}}.dump(2) << "\n";
    else
        out << name << "(" << t.str() << ") = " << v.str() << " (" << dec(v) << ")\n";
    return 0;
}

int cmd_graph_bound(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input_path.empty()) throw std::invalid_argument("graph-bound: --points is required");
    std::ifstream in(cfg.input_path);
    if (!in) throw std::invalid_argument("graph-bound: cannot open " + cfg.input_path);
    const PointsFile pf = read_points(in);

    std::vector<Rational> forbidden;
    std::string item;
    for (std::istringstream items(cfg.forbid); std::getline(items, item, ',');)
        if (!item.empty()) forbidden.push_back(Rational::parse(item));

    const Rational tolerance = pf.any_decimal ? Rational::pow10(-9) : Rational(0);
    const UnitVectorGraph g = build_graph(pf.points, forbidden, tolerance);
    const int alpha = independence_number(g);
    const Rational bound = combinatorial_bound(g);

    if (cfg.format == OutputFormat::json) {
        out << json{{"vertices", g.vertex_count()},
                    {"dimension", g.dimension},
                    {"edges", g.edges.size()},
                    {"independence_number", alpha},
                    {"bound", bound.str()}}
                   .dump(2)
            << "\n";
    } else {
        out << "vertices: " << g.vertex_count() << " (dimension " << g.dimension << ")\n";
        out << "edges: " << g.edges.size() << "\n";
        out << "independence number: " << alpha << "\n";
        out << "bound: " << bound.str() << " (" << dec(bound) << ")\n";
    }
    return 0;
}

int cmd_mu(const RunConfig& cfg, std::ostream& out) {
    if (cfg.t.empty()) throw std::invalid_argument("mu: --t is required");
    const Rational t = Rational::parse(cfg.t);
    const MuValue mu = eigenvalue_mu(cfg.n, cfg.degree, t);
    const std::string name = "mu_" + std::to_string(cfg.degree);
    if (cfg.format == OutputFormat::json) {
        json j{{"n", cfg.n},
               {"degree", cfg.degree},
               {"t", t.str()},
               {"exact", mu.exact},
               {"enclosure", interval_json(mu.enclosure)}};
        if (mu.exact) j["value"] = mu.value.str();
        out << j.dump(2) << "\n";
    } else if (mu.exact) {
        out << name << "(" << t.str() << ") = " << mu.value.str() << " (" << dec(mu.value)
            << ")\n";
    } else {
        out << name << "(" << t.str() << ") in [" << dec(mu.enclosure.lo()) << ", "
            << dec(mu.enclosure.hi()) << "]\n";
    }
    return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "verify-paper-certificate")
            return cmd_verify(builtin_certificate(), cfg, out);
        if (cfg.command == "verify") {
            if (cfg.input_path.empty()) throw std::invalid_argument("verify: FILE is required");
            std::ifstream in(cfg.input_path);
            if (!in) throw std::invalid_argument("verify: cannot open " + cfg.input_path);
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw std::invalid_argument(std::string("verify: bad JSON: ") + e.what());
            }
            return cmd_verify(certificate_from_json(j), cfg, out);
        }
        if (cfg.command == "bound") return cmd_bound(cfg, out);
        if (cfg.command == "construct") return cmd_construct(cfg, out);
        if (cfg.command == "circle") return cmd_circle(cfg, out);
        if (cfg.command == "gegenbauer") return cmd_gegenbauer(cfg, out);
        if (cfg.command == "graph-bound") return cmd_graph_bound(cfg, out);
        if (cfg.command == "mu") return cmd_mu(cfg, out);
        err << "unknown command: " << cfg.command << "\n" << kUsage;
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sphereavoid
