#pragma once

// Dual certificates and their rigorous verifier. A certificate is a list
// of nonnegative multipliers (b1 for the mass row, b0 for the equator
// row, one per cycle node) whose verified feasibility proves, by weak
// duality against the infinite primal, that every t-avoiding measurable
// subset of the 2-sphere has measure at most b1 + sum_k rhs_k * b_k.
//
// Verification splits at the cutoff degree:
//   i < cutoff   exact margin signs in the degree-8 field Q(sqrt(1/3), (1/5)^(1/4));
//                interval refinement alone cannot terminate on the
//                exactly-tight rows an optimal dual always has
//   i >= cutoff  envelope argument: |C_i(cos theta)| is below
//                b1 / (b0 + sum b_k) at every row's angle for i = cutoff
//                and the envelope only decreases beyond it
//
// Certificates are rejected, never repaired.

#include "sphereavoid/algebraic.hpp"
#include "sphereavoid/gegenbauer.hpp"
#include "sphereavoid/interval.hpp"
#include "sphereavoid/lp.hpp"
#include "sphereavoid/rational.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace sphereavoid {

struct CertificateTerm {
    CycleNode node;
    Rational multiplier;  // >= 0
    Rational rhs;         // must equal node.rhs()
};

struct DualCertificate {
    int n = 3;
    Rational claimed_bound;
    int cutoff = 0;  // finite checks cover i < cutoff, the envelope i >= cutoff
    Rational b1, b0;
    std::vector<CertificateTerm> terms;
};

// The built-in certificate proving measure < 313/1000 for t = 0 on the
// 2-sphere: b1, b0 and the multipliers for +t(1,3), +t(2,5), -t(2,5)
// are 128614, 404413, 36149, 103647, 327177 over 10^6; cutoff 40.
DualCertificate builtin_certificate();

// b1 + sum_k rhs_k * multiplier_k, exactly.
Rational certificate_objective(const DualCertificate& cert);

struct MarginReport {
    int degree;              // row index i
    Sign sign;               // exact sign of the margin
    RatInterval enclosure;   // certified enclosure, [0, 0] when exactly tight
};

// Exact margins b1 + C_i(0) b0 + sum_k mult_k C_i(sign_k t_k) - [i = 0]
// for i = 0..cutoff-1, assembled in the compositum field. Requires every
// node value exact and table.max_degree() >= cutoff - 1; throws
// std::domain_error when a node carries only an enclosure and
// std::invalid_argument when the table is too short.
std::vector<MarginReport> verify_finite(const DualCertificate& cert,
                                        const GegenbauerTable& table = legendre_table());

struct TailAngleCheck {
    std::string label;      // "equator" for the b0 row, else the node label
    RatInterval sin_theta;
    RatInterval envelope;   // certified bound on |C_i(cos theta)| at i = cutoff
    bool ok;                // envelope.hi() <= threshold
};

struct TailReport {
    int cutoff = 0;
    Rational threshold;  // b1 / (b0 + sum multipliers)
    std::vector<TailAngleCheck> checks;
    bool grouping_ok = false;  // b0 >= 0, so the rows may be bounded in absolute value
    bool ratios_ok = false;    // per-step envelope decrease certified for i >= cutoff
    bool passed = false;
};

// Envelope check at i = cutoff for every row angle (the equator for b0
// plus each term's angle) together with the step-ratio audit. Requires
// cutoff >= 1; throws std::runtime_error if an enclosure refinement
// floor is reached before a comparison is decided.
TailReport verify_tail(const DualCertificate& cert);

struct Verdict {
    bool accepted = false;
    Rational objective;
    bool multipliers_nonnegative = false;
    bool row0_ok = false;      // i = 0 margin >= 0
    bool finite_ok = false;    // no exact margin NEGATIVE below the cutoff
    bool tail_ok = false;
    bool bound_ok = false;     // objective <= claimed_bound
    std::vector<MarginReport> margins;
    TailReport tail;
};

// Full verification; failures are reported in the Verdict, not thrown.
// accepted = multipliers_nonnegative && row0_ok && finite_ok && tail_ok
// && bound_ok. A certificate whose margins cannot be decided exactly
// (nodes outside the compositum) reports finite_ok = false.
Verdict verify(const DualCertificate& cert);

// JSON wire format, rationals as exact "num/den" strings:
//   {"n":3, "claimed_bound":"313/1000", "cutoff":40, "b1":"...",
//    "b0":"...", "terms":[{"p":1,"q":3,"sign":"+","multiplier":"...",
//    "rhs":"1/3"}, ...]}
// from_json throws std::invalid_argument on schema violations, n != 3,
// cutoff < 1, a negative multiplier, or an rhs differing from (q-1)/(2q).
nlohmann::json certificate_to_json(const DualCertificate& cert);
DualCertificate certificate_from_json(const nlohmann::json& j);

// Package an optimal dual as a certificate: cutoff = lp.degree, claimed
// bound = the objective itself. Verification of the result additionally
// needs the tail condition, which no finite LP implies by itself.
DualCertificate certificate_from_solution(const TruncatedLP& lp, const LpSolution& sol);

}  // namespace sphereavoid
