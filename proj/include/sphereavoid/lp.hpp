#pragma once

// Truncated linear programs whose optimum upper-bounds the measure of an
// orthogonality-avoiding set on the 2-sphere, an exact rational simplex
// (Bland's rule, two phases), and the cutting-plane loop that discovers
// violated odd-cycle constraints.
//
// Primal, over variables x_0..x_D >= 0:
//   maximize x_0
//   sum_i x_i = 1
//   sum_i x_i C_i(0) = 0
//   sum_i x_i C_i(sign * t_{p,q}) <= (q-1)/(2q)   one row per cycle node
//
// Irrational node coefficients never enter the simplex: the solver runs
// on a rational outer relaxation where each <=-row coefficient is
// replaced by a rational lower bound of its certified enclosure. That
// weakens the rows, so the relaxed optimum is a valid upper bound for
// the true truncated LP; exact certification of bounds is the
// certificate module's job.

#include "sphereavoid/algebraic.hpp"
#include "sphereavoid/gegenbauer.hpp"
#include "sphereavoid/interval.hpp"
#include "sphereavoid/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphereavoid {

// One odd-cycle constraint: q points on a circle section of the sphere
// with step angle 2*pi*p/q pairwise realize the inner product
//   t_{p,q} = sqrt(-cos(2 pi p/q) / (1 - cos(2 pi p/q))),
// giving the valid inequality with right side (q-1)/(2q). The sign picks
// the evaluation point +t or -t.
class CycleNode {
public:
    // Requires gcd(p, q) = 1, q >= 3, 1/4 <= p/q <= 1/2, sign in {+1, -1}.
    // The value is exact for (1,3) (sqrt(1/3)), (2,5) ((1/5)^(1/4)) and
    // (1,4) (zero); other nodes carry certified enclosures only.
    static CycleNode make(long p, long q, int sign);

    long p() const { return p_; }
    long q() const { return q_; }
    int sign() const { return sign_; }
    Rational rhs() const { return Rational(q_ - 1, 2 * q_); }

    bool has_exact_value() const { return exact_.has_value(); }
    const ExactScalar& exact_value() const;  // t_{p,q} itself, positive

    // Enclosure of t_{p,q} (positive root), or of sign * t_{p,q}.
    RatInterval value_enclosure(const Rational& max_width = default_enclosure_width()) const;
    RatInterval signed_enclosure(const Rational& max_width = default_enclosure_width()) const;

    std::string label() const;  // e.g. "+t(2,5)"

    friend bool operator==(const CycleNode& a, const CycleNode& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.sign_ == b.sign_;
    }
    friend bool operator!=(const CycleNode& a, const CycleNode& b) { return !(a == b); }

    // Canonical enumeration order: ascending q, then p, then + before -.
    friend bool operator<(const CycleNode& a, const CycleNode& b);

private:
    CycleNode() = default;
    long p_ = 0, q_ = 0;
    int sign_ = 1;
    std::optional<ExactScalar> exact_;
};

struct TruncatedLP {
    int dimension = 3;
    int degree = 0;  // variables x_0..x_degree
    std::vector<CycleNode> nodes;

    std::vector<std::vector<Rational>> eq_rows;  // always exact
    std::vector<Rational> eq_rhs;
    // One row per node; each entry is a certified enclosure of the true
    // coefficient C_i(sign * t), degenerate when the coefficient is rational.
    std::vector<std::vector<RatInterval>> node_rows;
    std::vector<Rational> node_rhs;
    bool relaxed = false;

    int variable_count() const { return degree + 1; }
    bool all_coeffs_rational() const;
};

// Requires n = 3 (the formulation is specific to the 2-sphere) and
// degree >= 2. coeff_width bounds the enclosure width of irrational
// coefficients.
TruncatedLP build_primal(int n, int degree, std::vector<CycleNode> nodes,
                         const Rational& coeff_width = default_enclosure_width());

// Replace every non-degenerate coefficient by its lower endpoint rounded
// down to the 2^-bits grid. The result solves exactly and its optimum
// upper-bounds the original.
TruncatedLP rational_relaxation(const TruncatedLP& lp, unsigned bits = 120);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;           // optimum of x_0
    std::vector<Rational> x;
    // Dual in the certificate orientation: b1/b0 for the two equalities,
    // one multiplier >= 0 per node row. At optimum,
    // b1 + sum_k rhs_k * dual_nodes[k] = objective exactly.
    Rational dual_b1, dual_b0;
    std::vector<Rational> dual_nodes;
};

// Requires an all-rational coefficient matrix (use rational_relaxation
// first when nodes are irrational; throws std::invalid_argument
// otherwise). On OPTIMAL, asserts exact primal feasibility, dual
// feasibility and complementary slackness before returning.
LpSolution solve_exact(const TruncatedLP& lp);

// All nodes with odd q <= q_max (both signs) whose constraint is violated
// by sol.x, in canonical order. Violation is decided exactly for nodes
// with exact values and by certified enclosure refinement otherwise
// (an undecidable near-tie at width 1e-60 counts as not violated).
std::vector<CycleNode> generate_cuts(const LpSolution& sol, long q_max);

struct CutRound {
    int round;
    std::vector<CycleNode> added;  // empty for round 0
    Rational objective;
};

struct CuttingPlaneResult {
    std::vector<CutRound> rounds;  // objectives are nonincreasing
    TruncatedLP lp;                // the LP that produced the final objective
    LpSolution solution;
    bool exhausted = false;  // no violated cut remained
};

// Round 0 solves the equality-only LP; each later round adds every newly
// violated cut with q <= q_max and re-solves. Stops after max_rounds or
// when no new cut is violated. The final objective is a rigorous upper
// bound for the truncated LP value.
CuttingPlaneResult cutting_plane_run(int degree, long q_max, int max_rounds);

// Low-level exact simplex: minimize c.x subject to a_eq x = b_eq,
// a_le x <= b_le, x >= 0. Bland's rule; two phases. y_eq/y_le are the
// row multipliers y = c_B B^-1 (zero for redundant rows dropped in
// phase 1), satisfying c - y A >= 0 at optimality.
struct SimplexResult {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    std::vector<Rational> x;
    std::vector<Rational> y_eq;
    std::vector<Rational> y_le;
};

SimplexResult simplex_min(const std::vector<Rational>& c,
                          const std::vector<std::vector<Rational>>& a_eq,
                          const std::vector<Rational>& b_eq,
                          const std::vector<std::vector<Rational>>& a_le,
                          const std::vector<Rational>& b_le);

}  // namespace sphereavoid
