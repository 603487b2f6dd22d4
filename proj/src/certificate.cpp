#include "sphereavoid/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace sphereavoid {

DualCertificate builtin_certificate() {
    const Rational scale = Rational::pow10(6);
    DualCertificate cert;
    cert.n = 3;
    cert.claimed_bound = Rational(313, 1000);
    cert.cutoff = 40;
    cert.b1 = Rational(128614) / scale;
    cert.b0 = Rational(404413) / scale;
    const auto term = [&scale](long p, long q, int sign, long numerator) {
        const CycleNode node = CycleNode::make(p, q, sign);
        return CertificateTerm{node, Rational(numerator) / scale, node.rhs()};
    };
    cert.terms = {term(1, 3, +1, 36149), term(2, 5, +1, 103647), term(2, 5, -1, 327177)};
    return cert;
}

Rational certificate_objective(const DualCertificate& cert) {
    Rational obj = cert.b1;
    for (const auto& term : cert.terms) obj += term.rhs * term.multiplier;
    return obj;
}

std::vector<MarginReport> verify_finite(const DualCertificate& cert, const GegenbauerTable& table) {
    if (cert.cutoff - 1 > table.max_degree())
        throw std::invalid_argument("verify_finite: table degree is below cutoff - 1");
    for (const auto& term : cert.terms)
        if (!term.node.has_exact_value())
            throw std::domain_error("verify_finite: " + term.node.label() +
                                    " carries only an enclosure; exact margins need exact values");

    const FieldSpec comp = FieldSpec::compositum();
    const Rational report_width = default_enclosure_width();
    std::vector<MarginReport> out;
    out.reserve(static_cast<size_t>(std::max(cert.cutoff, 0)));
    for (int i = 0; i < cert.cutoff; ++i) {
        Rational rational_part = cert.b1 + table.eval(i, Rational(0)) * cert.b0;
        if (i == 0) rational_part -= Rational(1);
        AlgebraicReal margin = AlgebraicReal::constant(comp, rational_part);
        for (const auto& term : cert.terms) {
            const ExactScalar& value = term.node.exact_value();
            if (const auto* r = std::get_if<Rational>(&value)) {
                margin = margin.shifted(term.multiplier * table.eval(i, *r * term.node.sign()));
            } else {
                const auto& alg = std::get<AlgebraicReal>(value);
                const AlgebraicReal at = term.node.sign() > 0 ? alg : -alg;
                margin += table.eval(i, at).scaled(term.multiplier).to_compositum();
            }
        }
        out.push_back({i, margin.sign(), margin.enclosure(report_width)});
    }
    return out;
}

namespace {

// Enclosure of sin(theta) = sqrt(1 - t^2) for the node's evaluation
// point; the sign does not matter. Exact nodes go through the exact
// square, others through interval arithmetic.
RatInterval sin_theta_enclosure(const CycleNode& node, const Rational& max_width) {
    if (node.has_exact_value()) {
        const ExactScalar& value = node.exact_value();
        if (const auto* r = std::get_if<Rational>(&value))
            return enclose_sqrt(Rational(1) - *r * *r, max_width);
        const auto& alg = std::get<AlgebraicReal>(value);
        const AlgebraicReal sin_sq = (-(alg * alg)).shifted(Rational(1));
        if (sin_sq.is_rational()) return enclose_sqrt(sin_sq.as_rational(), max_width);
        return enclose_sqrt(sin_sq.enclosure(max_width / 8), max_width);
    }
    Rational w = max_width / 8;
    for (int round = 0; round < 48; ++round) {
        const RatInterval t = node.value_enclosure(w);
        const RatInterval sin_sq = RatInterval(Rational(1)) - t * t;
        if (sin_sq.lo().sign() > 0) {
            const RatInterval clamped(sin_sq.lo(), std::min(sin_sq.hi(), Rational(1)));
            return enclose_sqrt(clamped, max_width);
        }
        w /= 4096;
    }
    throw std::runtime_error("sin_theta_enclosure: could not separate sin(theta) from 0");
}

}  // namespace

TailReport verify_tail(const DualCertificate& cert) {
    if (cert.cutoff < 1) throw std::invalid_argument("verify_tail: cutoff must be >= 1");

    TailReport rep;
    rep.cutoff = cert.cutoff;
    rep.grouping_ok = cert.b0.sign() >= 0;

    Rational denom = cert.b0;
    for (const auto& term : cert.terms) denom += term.multiplier;

    // each envelope step i -> i+1 multiplies the two terms by factors
    // that must both be < 1; audited explicitly over a generous range
    rep.ratios_ok = true;
    const int audit_hi = std::max(200, cert.cutoff + 160);
    for (int i = cert.cutoff; i <= audit_hi; ++i) {
        const auto [r1, r2] = szego_step_ratio(i);
        if (r1 >= Rational(1) || r2 >= Rational(1)) rep.ratios_ok = false;
    }

    if (denom.is_zero()) {
        // no weighted rows beyond b1 itself: the tail margins all equal b1
        rep.threshold = Rational(0);
        rep.passed = rep.grouping_ok && rep.ratios_ok && cert.b1.sign() >= 0;
        return rep;
    }

    rep.threshold = cert.b1 / denom;

    // rows with zero weight contribute nothing to the tail margins, so
    // only positively weighted angles gate the verdict
    struct Row {
        std::string label;
        const CycleNode* node;  // null for the equator
    };
    std::vector<Row> rows;
    if (cert.b0.sign() > 0) rows.push_back({"equator", nullptr});
    for (const auto& term : cert.terms)
        if (term.multiplier.sign() > 0) rows.push_back({term.node.label(), &term.node});

    bool all_ok = true;
    const Rational width_floor = Rational::parse("1e-40");
    for (const auto& row : rows) {
        Rational sin_width = Rational::parse("1e-10");
        Rational env_width = Rational::parse("1e-7");
        TailAngleCheck check;
        check.label = row.label;
        for (;;) {
            check.sin_theta = row.node ? sin_theta_enclosure(*row.node, sin_width)
                                       : RatInterval(Rational(1));
            check.envelope = szego_bound(cert.cutoff, check.sin_theta, env_width);
            if (check.envelope.hi() <= rep.threshold) {
                check.ok = true;
                break;
            }
            if (check.envelope.lo() > rep.threshold) {
                check.ok = false;
                break;
            }
            if (env_width <= width_floor)
                throw std::runtime_error("verify_tail: enclosure too wide to decide row " + row.label);
            sin_width /= Rational(1000000);
            env_width /= Rational(1000000);
        }
        all_ok = all_ok && check.ok;
        rep.checks.push_back(std::move(check));
    }

    rep.passed = rep.grouping_ok && rep.ratios_ok && all_ok;
    return rep;
}

Verdict verify(const DualCertificate& cert) {
    Verdict v;
    v.objective = certificate_objective(cert);
    v.multipliers_nonnegative =
        std::all_of(cert.terms.begin(), cert.terms.end(),
                    [](const CertificateTerm& t) { return t.multiplier.sign() >= 0; });
    v.bound_ok = v.objective <= cert.claimed_bound;

    try {
        v.margins = verify_finite(cert);
        v.finite_ok = std::none_of(v.margins.begin(), v.margins.end(),
                                   [](const MarginReport& m) { return m.sign == Sign::negative; });
    } catch (const std::exception&) {
        v.finite_ok = false;  // margins undecidable exactly: cannot certify
    }
    v.row0_ok = !v.margins.empty() && v.margins.front().sign != Sign::negative;

    try {
        v.tail = verify_tail(cert);
        v.tail_ok = v.tail.passed;
    } catch (const std::exception&) {
        v.tail_ok = false;
    }

    v.accepted = v.multipliers_nonnegative && v.row0_ok && v.finite_ok && v.tail_ok && v.bound_ok;
    return v;
}

nlohmann::json certificate_to_json(const DualCertificate& cert) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : cert.terms)
        terms.push_back({{"p", term.node.p()},
                         {"q", term.node.q()},
                         {"sign", term.node.sign() > 0 ? "+" : "-"},
                         {"multiplier", term.multiplier.str()},
                         {"rhs", term.rhs.str()}});
    return nlohmann::json{{"n", cert.n},
                          {"claimed_bound", cert.claimed_bound.str()},
                          {"cutoff", cert.cutoff},
                          {"b1", cert.b1.str()},
                          {"b0", cert.b0.str()},
                          {"terms", std::move(terms)}};
}

DualCertificate certificate_from_json(const nlohmann::json& j) {
    try {
        DualCertificate cert;
        cert.n = j.at("n").get<int>();
        if (cert.n != 3) throw std::invalid_argument("certificate: only n = 3 is supported");
        cert.cutoff = j.at("cutoff").get<int>();
        if (cert.cutoff < 1) throw std::invalid_argument("certificate: cutoff must be >= 1");
        cert.claimed_bound = Rational::parse(j.at("claimed_bound").get<std::string>());
        cert.b1 = Rational::parse(j.at("b1").get<std::string>());
        cert.b0 = Rational::parse(j.at("b0").get<std::string>());
        for (const auto& entry : j.at("terms")) {
            CertificateTerm term{
                CycleNode::make(entry.at("p").get<long>(), entry.at("q").get<long>(),
                                entry.at("sign").get<std::string>() == "-" ? -1 : +1),
                Rational::parse(entry.at("multiplier").get<std::string>()),
                Rational::parse(entry.at("rhs").get<std::string>())};
            const std::string sign = entry.at("sign").get<std::string>();
            if (sign != "+" && sign != "-")
                throw std::invalid_argument("certificate: sign must be \"+\" or \"-\"");
            if (term.multiplier.sign() < 0)
                throw std::invalid_argument("certificate: negative multiplier");
            if (term.rhs != term.node.rhs())
                throw std::invalid_argument("certificate: rhs of " + term.node.label() +
                                            " must be " + term.node.rhs().str());
            cert.terms.push_back(std::move(term));
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: malformed JSON: ") + e.what());
    }
}

DualCertificate certificate_from_solution(const TruncatedLP& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::optimal)
        throw std::invalid_argument("certificate_from_solution: solution is not OPTIMAL");
    if (sol.dual_nodes.size() != lp.nodes.size())
        throw std::invalid_argument("certificate_from_solution: solution does not match the LP");
    DualCertificate cert;
    cert.n = lp.dimension;
    cert.cutoff = lp.degree;
    cert.claimed_bound = sol.objective;
    cert.b1 = sol.dual_b1;
    cert.b0 = sol.dual_b0;
    cert.terms.reserve(lp.nodes.size());
    for (size_t k = 0; k < lp.nodes.size(); ++k)
        cert.terms.push_back({lp.nodes[k], sol.dual_nodes[k], lp.nodes[k].rhs()});
    return cert;
}

}  // namespace sphereavoid
