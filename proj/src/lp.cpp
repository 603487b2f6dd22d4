#include "sphereavoid/lp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sphereavoid {

CycleNode CycleNode::make(long p, long q, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("CycleNode: sign must be +1 or -1");
    if (q < 3 || p < 1) throw std::invalid_argument("CycleNode: need q >= 3 and p >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("CycleNode: p/q must be reduced");
    if (4 * p < q || 2 * p > q) throw std::invalid_argument("CycleNode: need 1/4 <= p/q <= 1/2");
    CycleNode node;
    node.p_ = p;
    node.q_ = q;
    node.sign_ = sign;
    if (p == 1 && q == 3)
        node.exact_ = ExactScalar(AlgebraicReal::generator(FieldSpec::quad(Rational(1, 3))));
    else if (p == 2 && q == 5)
        node.exact_ = ExactScalar(AlgebraicReal::generator(FieldSpec::quart(Rational(1, 5))));
    else if (p == 1 && q == 4)
        node.exact_ = ExactScalar(Rational(0));
    return node;
}

const ExactScalar& CycleNode::exact_value() const {
    if (!exact_) throw std::domain_error("CycleNode: " + label() + " has no exact value");
    return *exact_;
}

RatInterval CycleNode::value_enclosure(const Rational& max_width) const {
    if (exact_) return enclose(*exact_, max_width);
    Rational w = max_width / 16;
    for (int round = 0; round < 64; ++round) {
        const RatInterval pi = enclose_pi(w);
        const RatInterval angle = pi.scaled(Rational(2 * p_, q_));
        const RatInterval c = enclose_cos(angle, w);
        // t^2 = -c/(1-c); cos is in [-1, 0] on the valid p/q range, so the
        // true ratio is nonnegative and we may clamp enclosure slop at 0
        const RatInterval ratio = (-c) / (RatInterval(Rational(1)) - c);
        const RatInterval clamped(std::max(ratio.lo(), Rational(0)),
                                  std::max(ratio.hi(), Rational(0)));
        const RatInterval t = enclose_sqrt(clamped, w);
        if (t.width() <= max_width) return t;
        w /= 4096;
    }
    throw std::runtime_error("CycleNode: failed to reach requested enclosure width");
}

RatInterval CycleNode::signed_enclosure(const Rational& max_width) const {
    const RatInterval v = value_enclosure(max_width);
    return sign_ > 0 ? v : -v;
}

std::string CycleNode::label() const {
    return std::string(sign_ > 0 ? "+" : "-") + "t(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool operator<(const CycleNode& a, const CycleNode& b) {
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.p_ != b.p_) return a.p_ < b.p_;
    return a.sign_ > b.sign_;  // + before -
}

bool TruncatedLP::all_coeffs_rational() const {
    for (const auto& row : node_rows)
        for (const auto& iv : row)
            if (!iv.is_point()) return false;
    return true;
}

TruncatedLP build_primal(int n, int degree, std::vector<CycleNode> nodes, const Rational& coeff_width) {
    if (n != 3) throw std::invalid_argument("build_primal: only n = 3 is supported");
    if (degree < 2) throw std::invalid_argument("build_primal: degree must be at least 2");
    const GegenbauerTable& table = legendre_table();
    if (degree > table.max_degree())
        throw std::invalid_argument("build_primal: degree exceeds the cached table");

    TruncatedLP lp;
    lp.degree = degree;
    const size_t nv = static_cast<size_t>(degree) + 1;

    lp.eq_rows.assign(2, std::vector<Rational>(nv));
    for (size_t i = 0; i < nv; ++i) {
        lp.eq_rows[0][i] = Rational(1);
        lp.eq_rows[1][i] = table.eval(static_cast<int>(i), Rational(0));
    }
    lp.eq_rhs = {Rational(1), Rational(0)};

    for (const CycleNode& node : nodes) {
        std::vector<RatInterval> row(nv);
        if (node.has_exact_value() && std::holds_alternative<Rational>(node.exact_value())) {
            const Rational t = std::get<Rational>(node.exact_value()) * node.sign();
            for (size_t i = 0; i < nv; ++i)
                row[i] = RatInterval(table.eval(static_cast<int>(i), t));
        } else if (node.has_exact_value()) {
            const auto& alg = std::get<AlgebraicReal>(node.exact_value());
            const AlgebraicReal t = node.sign() > 0 ? alg : -alg;
            for (size_t i = 0; i < nv; ++i) {
                const AlgebraicReal v = table.eval(static_cast<int>(i), t);
                row[i] = v.is_rational() ? RatInterval(v.as_rational()) : v.enclosure(coeff_width);
            }
        } else {
            Rational w = coeff_width / 4096;
            for (int attempt = 0; attempt < 8; ++attempt) {
                const RatInterval t = node.signed_enclosure(w);
                bool ok = true;
                for (size_t i = 0; i < nv; ++i) {
                    row[i] = table.eval(static_cast<int>(i), t);
                    if (row[i].width() > coeff_width) ok = false;
                }
                if (ok) break;
                w /= 4096;
            }
        }
        lp.node_rows.push_back(std::move(row));
        lp.node_rhs.push_back(node.rhs());
    }
    lp.nodes = std::move(nodes);
    return lp;
}

namespace {

Rational floor_to_grid(const Rational& r, unsigned bits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    return Rational((r * Rational(scale, mpz_class(1))).floor(), scale);
}

}  // namespace

TruncatedLP rational_relaxation(const TruncatedLP& lp, unsigned bits) {
    TruncatedLP out = lp;
    out.relaxed = true;
    for (auto& row : out.node_rows)
        for (auto& iv : row)
            if (!iv.is_point()) iv = RatInterval(floor_to_grid(iv.lo(), bits));
    return out;
}

// ---------------------------------------------------------------------------
// Exact simplex, dense tableau. Rows are converted to equalities with
// slacks; rows lacking a unit column receive an artificial. Bland's rule
// (lowest eligible column in, lowest basic index on ratio ties) prevents
// cycling in both phases.

namespace {

struct Tableau {
    size_t n_struct = 0, n_cols = 0;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> rhs;
    std::vector<size_t> basis;
    std::vector<size_t> unit_col;   // per row: its initial identity column
    std::vector<int> flip;          // per row: +-1 vs the caller's row
    std::vector<size_t> orig_row;   // per row: index into eq rows then le rows
    std::vector<bool> is_artificial;

    void pivot(size_t pr, size_t pc, std::vector<Rational>& reduced) {
        const Rational inv = a[pr][pc].reciprocal();
        for (auto& v : a[pr]) v *= inv;
        rhs[pr] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == pr || a[i][pc].is_zero()) continue;
            const Rational f = a[i][pc];
            for (size_t j = 0; j < n_cols; ++j)
                if (!a[pr][j].is_zero()) a[i][j] -= f * a[pr][j];
            a[i][pc] = Rational(0);
            rhs[i] -= f * rhs[pr];
        }
        if (!reduced[pc].is_zero()) {
            const Rational f = reduced[pc];
            for (size_t j = 0; j < n_cols; ++j)
                if (!a[pr][j].is_zero()) reduced[j] -= f * a[pr][j];
            reduced[pc] = Rational(0);
        }
        basis[pr] = pc;
    }

    // Minimize cost over the current basis. blocked columns never enter.
    LpStatus optimize(const std::vector<Rational>& cost, const std::vector<bool>& blocked,
                      std::vector<Rational>& reduced) {
        reduced = cost;
        for (size_t i = 0; i < a.size(); ++i) {
            const Rational cb = cost[basis[i]];
            if (cb.is_zero()) continue;
            for (size_t j = 0; j < n_cols; ++j)
                if (!a[i][j].is_zero()) reduced[j] -= cb * a[i][j];
        }
        for (;;) {
            size_t pc = n_cols;
            for (size_t j = 0; j < n_cols; ++j)
                if (!blocked[j] && reduced[j].sign() < 0) {
                    pc = j;
                    break;
                }
            if (pc == n_cols) return LpStatus::optimal;
            size_t pr = a.size();
            Rational best;
            for (size_t i = 0; i < a.size(); ++i) {
                if (a[i][pc].sign() <= 0) continue;
                const Rational ratio = rhs[i] / a[i][pc];
                if (pr == a.size() || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr == a.size()) return LpStatus::unbounded;
            pivot(pr, pc, reduced);
        }
    }
};

}  // namespace

SimplexResult simplex_min(const std::vector<Rational>& c,
                          const std::vector<std::vector<Rational>>& a_eq,
                          const std::vector<Rational>& b_eq,
                          const std::vector<std::vector<Rational>>& a_le,
                          const std::vector<Rational>& b_le) {
    const size_t n = c.size();
    const size_t m_eq = a_eq.size(), m_le = a_le.size(), m = m_eq + m_le;
    if (b_eq.size() != m_eq || b_le.size() != m_le)
        throw std::invalid_argument("simplex_min: row/rhs count mismatch");
    for (const auto& row : a_eq)
        if (row.size() != n) throw std::invalid_argument("simplex_min: eq row width mismatch");
    for (const auto& row : a_le)
        if (row.size() != n) throw std::invalid_argument("simplex_min: le row width mismatch");

    Tableau t;
    t.n_struct = n;
    const size_t slack_base = n;
    size_t next_col = n + m_le;  // artificials appended past the slacks

    t.a.assign(m, {});
    t.rhs.assign(m, Rational(0));
    t.basis.assign(m, 0);
    t.unit_col.assign(m, 0);
    t.flip.assign(m, 1);
    t.orig_row.assign(m, 0);

    std::vector<size_t> art_rows;
    for (size_t i = 0; i < m; ++i) {
        const bool is_eq = i < m_eq;
        const auto& src = is_eq ? a_eq[i] : a_le[i - m_eq];
        const Rational& b = is_eq ? b_eq[i] : b_le[i - m_eq];
        t.orig_row[i] = i;
        std::vector<Rational> row(n + m_le, Rational(0));
        for (size_t j = 0; j < n; ++j) row[j] = src[j];
        if (!is_eq) row[slack_base + (i - m_eq)] = Rational(1);
        Rational rb = b;
        if (rb.sign() < 0) {
            t.flip[i] = -1;
            for (auto& v : row) v = -v;
            rb = -rb;
        }
        t.a[i] = std::move(row);
        t.rhs[i] = rb;
        const bool slack_usable = !is_eq && t.flip[i] == 1;
        if (slack_usable) {
            t.basis[i] = t.unit_col[i] = slack_base + (i - m_eq);
        } else {
            art_rows.push_back(i);
        }
    }
    for (size_t i : art_rows) {
        t.basis[i] = t.unit_col[i] = next_col++;
    }
    t.n_cols = next_col;
    t.is_artificial.assign(t.n_cols, false);
    for (size_t j = n + m_le; j < t.n_cols; ++j) t.is_artificial[j] = true;
    for (auto& row : t.a) row.resize(t.n_cols, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (t.is_artificial[t.basis[i]]) t.a[i][t.basis[i]] = Rational(1);

    SimplexResult result;

    if (!art_rows.empty()) {
        std::vector<Rational> phase1(t.n_cols, Rational(0));
        for (size_t j = 0; j < t.n_cols; ++j)
            if (t.is_artificial[j]) phase1[j] = Rational(1);
        std::vector<bool> blocked(t.n_cols, false);
        std::vector<Rational> reduced;
        const LpStatus st = t.optimize(phase1, blocked, reduced);
        if (st != LpStatus::optimal)
            throw std::logic_error("simplex_min: phase 1 cannot be unbounded");
        Rational art_sum(0);
        for (size_t i = 0; i < t.a.size(); ++i)
            if (t.is_artificial[t.basis[i]]) art_sum += t.rhs[i];
        if (art_sum.sign() > 0) {
            result.status = LpStatus::infeasible;
            return result;
        }
        // drive basic artificials (all at zero) out; a row with no
        // non-artificial pivot candidate is redundant and dropped
        for (size_t i = t.a.size(); i-- > 0;) {
            if (!t.is_artificial[t.basis[i]]) continue;
            size_t pc = t.n_cols;
            for (size_t j = 0; j < n + m_le; ++j)
                if (!t.a[i][j].is_zero()) {
                    pc = j;
                    break;
                }
            if (pc != t.n_cols) {
                t.pivot(i, pc, reduced);
            } else {
                t.a.erase(t.a.begin() + static_cast<long>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<long>(i));
                t.basis.erase(t.basis.begin() + static_cast<long>(i));
                t.unit_col.erase(t.unit_col.begin() + static_cast<long>(i));
                t.flip.erase(t.flip.begin() + static_cast<long>(i));
                t.orig_row.erase(t.orig_row.begin() + static_cast<long>(i));
            }
        }
    }

    std::vector<Rational> phase2(t.n_cols, Rational(0));
    for (size_t j = 0; j < n; ++j) phase2[j] = c[j];
    std::vector<bool> blocked = t.is_artificial;
    std::vector<Rational> reduced;
    const LpStatus st = t.optimize(phase2, blocked, reduced);
    if (st == LpStatus::unbounded) {
        result.status = LpStatus::unbounded;
        return result;
    }

    result.status = LpStatus::optimal;
    result.x.assign(n, Rational(0));
    for (size_t i = 0; i < t.a.size(); ++i)
        if (t.basis[i] < n) result.x[t.basis[i]] = t.rhs[i];
    result.objective = Rational(0);
    for (size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];

    result.y_eq.assign(m_eq, Rational(0));
    result.y_le.assign(m_le, Rational(0));
    for (size_t i = 0; i < t.a.size(); ++i) {
        const Rational y = -reduced[t.unit_col[i]] * Rational(t.flip[i]);
        const size_t orig = t.orig_row[i];
        if (orig < m_eq)
            result.y_eq[orig] = y;
        else
            result.y_le[orig - m_eq] = y;
    }
    return result;
}

namespace {

// Optimality certificates are re-checked from scratch: the simplex is the
// one component where a silent bug would poison every bound downstream.
void check_optimality(const TruncatedLP& lp, const LpSolution& sol,
                      const std::vector<std::vector<Rational>>& a_le) {
    const size_t nv = static_cast<size_t>(lp.variable_count());
    for (const auto& xi : sol.x)
        if (xi.sign() < 0) throw std::logic_error("solve_exact: negative primal variable");
    for (size_t r = 0; r < lp.eq_rows.size(); ++r) {
        Rational dot(0);
        for (size_t i = 0; i < nv; ++i) dot += lp.eq_rows[r][i] * sol.x[i];
        if (dot != lp.eq_rhs[r]) throw std::logic_error("solve_exact: equality row violated");
    }
    std::vector<Rational> slack(a_le.size());
    for (size_t k = 0; k < a_le.size(); ++k) {
        Rational dot(0);
        for (size_t i = 0; i < nv; ++i) dot += a_le[k][i] * sol.x[i];
        slack[k] = lp.node_rhs[k] - dot;
        if (slack[k].sign() < 0) throw std::logic_error("solve_exact: inequality row violated");
        if (sol.dual_nodes[k].sign() < 0) throw std::logic_error("solve_exact: negative dual multiplier");
        if (!(sol.dual_nodes[k] * slack[k]).is_zero())
            throw std::logic_error("solve_exact: complementary slackness (rows) violated");
    }
    for (size_t i = 0; i < nv; ++i) {
        Rational margin = lp.eq_rows[0][i] * sol.dual_b1 + lp.eq_rows[1][i] * sol.dual_b0;
        for (size_t k = 0; k < a_le.size(); ++k) margin += a_le[k][i] * sol.dual_nodes[k];
        if (i == 0) margin -= Rational(1);
        if (margin.sign() < 0) throw std::logic_error("solve_exact: dual infeasible");
        if (!(margin * sol.x[i]).is_zero())
            throw std::logic_error("solve_exact: complementary slackness (columns) violated");
    }
    Rational dual_obj = sol.dual_b1 * lp.eq_rhs[0] + sol.dual_b0 * lp.eq_rhs[1];
    for (size_t k = 0; k < a_le.size(); ++k) dual_obj += sol.dual_nodes[k] * lp.node_rhs[k];
    if (dual_obj != sol.objective) throw std::logic_error("solve_exact: strong duality violated");
}

}  // namespace

LpSolution solve_exact(const TruncatedLP& lp) {
    if (!lp.all_coeffs_rational())
        throw std::invalid_argument(
            "solve_exact: LP has irrational coefficients; apply rational_relaxation first");
    const size_t nv = static_cast<size_t>(lp.variable_count());
    std::vector<Rational> c(nv, Rational(0));
    c[0] = Rational(-1);  // maximize x_0

    std::vector<std::vector<Rational>> a_le(lp.node_rows.size(), std::vector<Rational>(nv));
    for (size_t k = 0; k < lp.node_rows.size(); ++k)
        for (size_t i = 0; i < nv; ++i) a_le[k][i] = lp.node_rows[k][i].lo();

    const SimplexResult res = simplex_min(c, lp.eq_rows, lp.eq_rhs, a_le, lp.node_rhs);
    LpSolution sol;
    sol.status = res.status;
    if (res.status != LpStatus::optimal) return sol;

    sol.objective = -res.objective;
    sol.x = res.x;
    sol.dual_b1 = -res.y_eq[0];
    sol.dual_b0 = -res.y_eq[1];
    sol.dual_nodes.reserve(res.y_le.size());
    for (const auto& y : res.y_le) sol.dual_nodes.push_back(-y);

    check_optimality(lp, sol, a_le);
    return sol;
}

namespace {

bool cut_violated(const CycleNode& node, const std::vector<Rational>& combined) {
    const Rational rhs = node.rhs();
    if (node.has_exact_value()) {
        if (const auto* r = std::get_if<Rational>(&node.exact_value())) {
            return eval_poly(combined, *r * node.sign()) > rhs;
        }
        const auto& alg = std::get<AlgebraicReal>(node.exact_value());
        const AlgebraicReal t = node.sign() > 0 ? alg : -alg;
        const AlgebraicReal diff = eval_poly(combined, t).shifted(-rhs);
        return diff.sign() == Sign::positive;
    }
    const Rational floor_width = Rational::parse("1e-60");
    Rational w = default_enclosure_width();
    for (;;) {
        const RatInterval value = eval_poly(combined, node.signed_enclosure(w));
        if (value.lo() > rhs) return true;
        if (value.hi() <= rhs) return false;
        if (w <= floor_width) return false;  // undecidable near-tie: not a cut
        w *= Rational::parse("1e-15");
    }
}

}  // namespace

std::vector<CycleNode> generate_cuts(const LpSolution& sol, long q_max) {
    if (sol.status != LpStatus::optimal)
        throw std::invalid_argument("generate_cuts: requires an OPTIMAL solution");
    const GegenbauerTable& table = legendre_table();
    std::vector<Rational> combined(sol.x.size(), Rational(0));
    for (size_t i = 0; i < sol.x.size(); ++i) {
        if (sol.x[i].is_zero()) continue;
        const auto& coeffs = table.coefficients(static_cast<int>(i));
        for (size_t k = 0; k < coeffs.size(); ++k) combined[k] += sol.x[i] * coeffs[k];
    }
    std::vector<CycleNode> out;
    for (long q = 3; q <= q_max; q += 2)
        for (long p = (q + 3) / 4; 2 * p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            for (int sign : {+1, -1}) {
                const CycleNode node = CycleNode::make(p, q, sign);
                if (cut_violated(node, combined)) out.push_back(node);
            }
        }
    return out;
}

CuttingPlaneResult cutting_plane_run(int degree, long q_max, int max_rounds) {
    if (max_rounds < 0) throw std::invalid_argument("cutting_plane_run: max_rounds must be nonnegative");
    CuttingPlaneResult result;

    std::vector<CycleNode> nodes;
    TruncatedLP solved = build_primal(3, degree, nodes);
    LpSolution sol = solve_exact(solved);
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("cutting_plane_run: the equality-only LP must solve");
    result.rounds.push_back({0, {}, sol.objective});

    for (int round = 1; round <= max_rounds; ++round) {
        const std::vector<CycleNode> cuts = generate_cuts(sol, q_max);
        // rows already present can stay violated by the relaxation slack
        // (~1e-30) forever; only genuinely new nodes make progress
        std::vector<CycleNode> fresh;
        for (const auto& cut : cuts)
            if (std::find(nodes.begin(), nodes.end(), cut) == nodes.end()) fresh.push_back(cut);
        if (fresh.empty()) {
            result.exhausted = true;
            break;
        }
        nodes.insert(nodes.end(), fresh.begin(), fresh.end());
        const TruncatedLP lp = build_primal(3, degree, nodes);
        solved = lp.all_coeffs_rational() ? lp : rational_relaxation(lp);
        const LpSolution next = solve_exact(solved);
        if (next.status != LpStatus::optimal)
            throw std::runtime_error("cutting_plane_run: LP became unsolvable after cuts");
        if (next.objective > sol.objective)
            throw std::logic_error("cutting_plane_run: objective increased across a round");
        sol = next;
        result.rounds.push_back({round, fresh, sol.objective});
    }

    result.lp = std::move(solved);
    result.solution = std::move(sol);
    return result;
}

}  // namespace sphereavoid
