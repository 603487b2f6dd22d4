#include "sphereavoid/gegenbauer.hpp"

#include <stdexcept>

namespace sphereavoid {

GegenbauerTable::GegenbauerTable(const Rational& nu, int max_degree) : nu_(nu), max_degree_(max_degree) {
    if (nu <= Rational(-1, 2)) throw std::invalid_argument("GegenbauerTable: nu must exceed -1/2");
    if (max_degree < 0) throw std::invalid_argument("GegenbauerTable: max_degree must be nonnegative");

    coeffs_.reserve(static_cast<size_t>(max_degree) + 1);
    const bool chebyshev = nu.is_zero();

    std::vector<Rational> prev{Rational(1)};  // degree 0
    coeffs_.push_back(prev);
    if (max_degree == 0) return;

    std::vector<Rational> cur{Rational(0), chebyshev ? Rational(1) : nu * 2};  // degree 1
    coeffs_.push_back(cur);

    for (int i = 1; i < max_degree; ++i) {
        // (i+1) P_{i+1} = 2(i+nu) x P_i - (i+2nu-1) P_{i-1};
        // the Chebyshev limit uses T_{i+1} = 2x T_i - T_{i-1}
        Rational a, b;
        if (chebyshev) {
            a = Rational(2);
            b = Rational(1);
        } else {
            const Rational inv(1, i + 1);
            a = (nu + i) * 2 * inv;
            b = (nu * 2 + (i - 1)) * inv;
        }
        std::vector<Rational> next(static_cast<size_t>(i) + 2, Rational(0));
        for (size_t k = 0; k < cur.size(); ++k) next[k + 1] += a * cur[k];
        for (size_t k = 0; k < prev.size(); ++k) next[k] -= b * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
        coeffs_.push_back(cur);
    }

    // rescale so every row evaluates to 1 at t = 1
    for (auto& row : coeffs_) {
        Rational at_one(0);
        for (const auto& c : row) at_one += c;
        if (at_one.is_zero()) throw std::logic_error("GegenbauerTable: degenerate normalization");
        const Rational inv = at_one.reciprocal();
        for (auto& c : row) c *= inv;
    }
}

const std::vector<Rational>& GegenbauerTable::coefficients(int i) const {
    if (i < 0 || i > max_degree_) throw std::out_of_range("GegenbauerTable: degree out of range");
    return coeffs_[static_cast<size_t>(i)];
}

Rational GegenbauerTable::eval(int i, const Rational& t) const {
    return eval_poly(coefficients(i), t);
}

AlgebraicReal GegenbauerTable::eval(int i, const AlgebraicReal& t) const {
    return eval_poly(coefficients(i), t);
}

RatInterval GegenbauerTable::eval(int i, const RatInterval& t) const {
    return eval_poly(coefficients(i), t);
}

const GegenbauerTable& legendre_table() {
    static const GegenbauerTable table(Rational(1, 2), 120);
    return table;
}

RatInterval WeightConstants::enclosure(const Rational& max_width) const {
    Rational w = max_width / 64;
    for (int round = 0; round < 64; ++round) {
        const RatInterval pi = enclose_pi(w);
        const RatInterval out = pi.pow(static_cast<unsigned>(pi_power)).scaled(coefficient);
        if (out.width() <= max_width) return out;
        w /= 1024;
    }
    throw std::runtime_error("WeightConstants::enclosure: failed to reach requested width");
}

WeightConstants omega_constants(int n) {
    if (n < 2) throw std::invalid_argument("omega_constants: n must be at least 2");
    // 2 pi^(n/2) / Gamma(n/2)
    if (n % 2 == 0) {
        const int m = n / 2;
        Rational fact(1);
        for (int k = 2; k < m; ++k) fact *= k;  // (m-1)!
        return WeightConstants{n, Rational(2) / fact, m};
    }
    const int m = (n - 1) / 2;  // Gamma(m + 1/2) = (2m-1)!! / 2^m * sqrt(pi)
    Rational dfact(1);
    for (int k = 3; k <= 2 * m - 1; k += 2) dfact *= k;
    Rational two_pow(1);
    for (int k = 0; k <= m; ++k) two_pow *= 2;  // 2^(m+1)
    return WeightConstants{n, two_pow / dfact, m};
}

MuValue eigenvalue_mu(int n, int d, const Rational& t, const Rational& max_width) {
    if (n < 3) throw std::invalid_argument("eigenvalue_mu: n must be at least 3");
    if (d < 0) throw std::invalid_argument("eigenvalue_mu: d must be nonnegative");
    if (!(t > Rational(-1) && t < Rational(1)))
        throw std::domain_error("eigenvalue_mu: t must lie in (-1, 1)");

    const Rational nu(n - 2, 2);
    Rational c;
    if (n == 3 && d <= legendre_table().max_degree()) {
        c = legendre_table().eval(d, t);
    } else {
        c = GegenbauerTable(nu, d).eval(d, t);
    }

    const Rational one_minus_t2 = Rational(1) - t * t;
    if (n % 2 == 1) {
        const Rational value = c * one_minus_t2.pow(static_cast<unsigned long>((n - 3) / 2));
        return MuValue{true, value, RatInterval(value)};
    }
    // (1-t^2)^((n-3)/2) = (1-t^2)^((n-4)/2) * sqrt(1-t^2)
    const Rational head = c * one_minus_t2.pow(static_cast<unsigned long>((n - 4) / 2));
    Rational w = max_width / 4;
    for (int round = 0; round < 64; ++round) {
        const RatInterval enc = enclose_sqrt(one_minus_t2, w).scaled(head);
        if (enc.width() <= max_width) return MuValue{false, Rational(0), enc};
        w /= 1024;
    }
    throw std::runtime_error("eigenvalue_mu: failed to reach requested width");
}

RatInterval szego_bound(int i, const RatInterval& sin_theta, const Rational& max_width) {
    if (i < 0) throw std::invalid_argument("szego_bound: i must be nonnegative");
    if (!(sin_theta.lo() > 0) || sin_theta.hi() > Rational(1))
        throw std::domain_error("szego_bound: sin_theta must lie within (0, 1]");

    // Gamma(i+1)/Gamma(i+3/2) = q1 / sqrt(pi), q1 = i! 2^(i+1) / (2i+1)!!
    // Gamma(i+1)/Gamma(i+5/2) = q2 / sqrt(pi), q2 = q1 * 2 / (2i+3)
    Rational q1(2);
    for (int k = 1; k <= i; ++k) q1 *= Rational(2 * k, 2 * k + 1);
    const Rational q2 = q1 * Rational(2, 2 * i + 3);

    // rhs = sqrt(2)/pi * (q1 / sqrt(s) + q2 / (4 s^(3/2)))
    Rational w = max_width / 64;
    for (int round = 0; round < 64; ++round) {
        const RatInterval sqrt2 = enclose_sqrt(Rational(2), w);
        const RatInterval pi = enclose_pi(w);
        const RatInterval root_s = enclose_sqrt(sin_theta, w);
        const RatInterval s32 = sin_theta * root_s;
        const RatInterval sum = RatInterval(q1) / root_s + (RatInterval(q2) / s32).scaled(Rational(1, 4));
        const RatInterval out = (sqrt2 * sum / pi).rounded_out(256);
        if (out.width() <= max_width + sin_theta.width() * 8) return out;
        w /= 1024;
    }
    throw std::runtime_error("szego_bound: failed to reach requested width");
}

std::pair<Rational, Rational> szego_step_ratio(int i) {
    if (i < 0) throw std::invalid_argument("szego_step_ratio: i must be nonnegative");
    return {Rational(2 * i + 2, 2 * i + 3), Rational(2 * i + 2, 2 * i + 5)};
}

}  // namespace sphereavoid
