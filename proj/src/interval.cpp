#include "sphereavoid/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace sphereavoid {

RatInterval::RatInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
    Rational nlo = lo_ - o.hi_;
    hi_ -= o.lo_;
    lo_ = std::move(nlo);
    return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
    const Rational p1 = lo_ * o.lo_, p2 = lo_ * o.hi_, p3 = hi_ * o.lo_, p4 = hi_ * o.hi_;
    lo_ = std::min(std::min(p1, p2), std::min(p3, p4));
    hi_ = std::max(std::max(p1, p2), std::max(p3, p4));
    return *this;
}

RatInterval RatInterval::scaled(const Rational& c) const {
    if (c.sign() >= 0) return RatInterval(lo_ * c, hi_ * c);
    return RatInterval(hi_ * c, lo_ * c);
}

RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (!b.excludes_zero()) throw std::domain_error("RatInterval: division by interval containing zero");
    const RatInterval inv(b.hi().reciprocal(), b.lo().reciprocal());
    return a * inv;
}

RatInterval RatInterval::pow(unsigned e) const {
    if (e == 0) return RatInterval(Rational(1));
    const Rational plo = lo_.pow(e), phi = hi_.pow(e);
    if (e % 2 == 1) return RatInterval(plo, phi);
    if (lo_.sign() >= 0) return RatInterval(plo, phi);
    if (hi_.sign() <= 0) return RatInterval(phi, plo);
    return RatInterval(Rational(0), std::max(plo, phi));
}

RatInterval RatInterval::rounded_out(unsigned bits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    const Rational s{Rational(scale, mpz_class(1))};
    return RatInterval(Rational((lo_ * s).floor(), scale), Rational((hi_ * s).ceil(), scale));
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b) {
    return RatInterval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::string RatInterval::str() const {
    return "[" + lo_.str() + ", " + hi_.str() + "]";
}

std::ostream& operator<<(std::ostream& os, const RatInterval& iv) {
    return os << iv.str();
}

namespace {

void check_width(const Rational& w) {
    if (w.sign() <= 0) throw std::invalid_argument("enclosure width must be positive");
}

}  // namespace

RatInterval enclose_sqrt(const Rational& x, const Rational& max_width) {
    check_width(max_width);
    if (x.sign() < 0) throw std::domain_error("enclose_sqrt: negative radicand");
    if (x.is_zero()) return RatInterval(Rational(0));

    const mpz_class a = x.numerator(), b = x.denominator();
    const mpz_class n = a * b;  // sqrt(a/b) = sqrt(a*b)/b
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        return RatInterval(Rational(root, b));
    }

    // scale so the result grid 1/(2^k * b) is finer than max_width
    unsigned k = 0;
    {
        Rational grid = Rational(mpz_class(1), b);
        while (grid > max_width) {
            grid /= 2;
            ++k;
        }
    }
    mpz_class m = n;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), 2 * k);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());  // s^2 <= m < (s+1)^2
    mpz_class den = b;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return RatInterval(Rational(s, den), Rational(s + 1, den));
}

RatInterval enclose_sqrt(const RatInterval& x, const Rational& max_width) {
    if (x.lo().sign() < 0) throw std::domain_error("enclose_sqrt: interval has negative lower endpoint");
    const Rational half = max_width / 2;
    return RatInterval(enclose_sqrt(x.lo(), half).lo(), enclose_sqrt(x.hi(), half).hi());
}

namespace {

// Alternating-series enclosure of arctan(1/u) for integer u >= 2:
// partial sums bracket the limit, consecutive ones from opposite sides.
RatInterval atan_reciprocal(unsigned long u, const Rational& term_bound) {
    const Rational inv_u2 = Rational(1, static_cast<long>(u * u));
    Rational power(1, static_cast<long>(u));  // u^-(2j+1)
    Rational below(0), above(0);
    Rational sum(0);
    bool add = true;
    for (unsigned long j = 0;; ++j) {
        const Rational term = power / Rational(static_cast<long>(2 * j + 1));
        if (add)
            sum += term;
        else
            sum -= term;
        if (add)
            above = sum;
        else
            below = sum;
        if (term <= term_bound && j >= 1) break;
        power *= inv_u2;
        add = !add;
    }
    return RatInterval(std::min(below, above), std::max(below, above));
}

RatInterval compute_pi(const Rational& max_width) {
    // pi = 16*atan(1/5) - 4*atan(1/239)
    const Rational tb = max_width / 64;
    const RatInterval a5 = atan_reciprocal(5, tb);
    const RatInterval a239 = atan_reciprocal(239, tb);
    return (a5.scaled(16) - a239.scaled(4)).rounded_out(192);
}

}  // namespace

RatInterval enclose_pi(const Rational& max_width) {
    check_width(max_width);
    static const RatInterval cached = compute_pi(Rational::parse("1e-30"));
    if (cached.width() <= max_width) return cached;
    return compute_pi(max_width);
}

RatInterval enclose_cos(const RatInterval& x, const Rational& max_width) {
    check_width(max_width);
    // cos is even; Horner in u = x^2 over the Taylor series with an explicit
    // remainder bound |x|^(2J) / (2J)! * (1 - x^2/((2J+1)(2J+2)))^-1.
    const RatInterval u = x.pow(2);
    const Rational umax = u.hi();

    unsigned terms = 8;
    Rational rem_bound;
    for (;; ++terms) {
        // |x|^(2J) / (2J)!
        Rational t(1);
        for (unsigned j = 1; j <= terms; ++j)
            t *= umax / Rational(static_cast<long>(2 * j - 1) * static_cast<long>(2 * j));
        const Rational ratio = umax / Rational(static_cast<long>(2 * terms + 1) * static_cast<long>(2 * terms + 2));
        if (ratio < Rational(1, 2)) {
            rem_bound = t * (Rational(1) / (Rational(1) - ratio));
            if (rem_bound * 4 <= max_width) break;
        }
        if (terms > 2048) throw std::runtime_error("enclose_cos: series did not converge");
    }

    // sum_{j<J} (-1)^j u^j / (2j)! by Horner
    RatInterval acc(Rational(0));
    for (unsigned j = terms; j-- > 0;) {
        Rational coef(1);
        for (unsigned m = 1; m <= j; ++m)
            coef /= Rational(static_cast<long>(2 * m - 1) * static_cast<long>(2 * m));
        if (j % 2 == 1) coef = -coef;
        acc = acc * u + RatInterval(coef);
        acc = acc.rounded_out(256);
    }
    RatInterval out = acc + RatInterval(-rem_bound, rem_bound);
    // cos never leaves [-1, 1]
    return RatInterval(std::max(out.lo(), Rational(-1)), std::min(out.hi(), Rational(1)));
}

const Rational& default_enclosure_width() {
    static const Rational width = [] {
        if (const char* env = std::getenv("SPHERE_AVOID_PRECISION")) {
            Rational w = Rational::parse(env);
            if (w.sign() <= 0) throw std::invalid_argument("SPHERE_AVOID_PRECISION must be positive");
            return w;
        }
        return Rational::parse("1e-30");
    }();
    return width;
}

}  // namespace sphereavoid
