#include "sphereavoid/algebraic.hpp"

#include <sstream>
#include <stdexcept>

namespace sphereavoid {

bool is_perfect_square(const Rational& a) {
    if (a.sign() < 0) return false;
    const mpz_class num = a.numerator(), den = a.denominator();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

FieldSpec FieldSpec::quad(const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("FieldSpec::quad: radicand must be positive");
    if (is_perfect_square(a)) throw std::invalid_argument("FieldSpec::quad: x^2 - " + a.str() + " is reducible");
    return FieldSpec(FieldKind::quad, a);
}

FieldSpec FieldSpec::quart(const Rational& a) {
    if (a.sign() <= 0) throw std::invalid_argument("FieldSpec::quart: radicand must be positive");
    // x^4 - a is irreducible over Q iff a is not a square (-4a is never a
    // rational fourth power for a > 0)
    if (is_perfect_square(a)) throw std::invalid_argument("FieldSpec::quart: x^4 - " + a.str() + " is reducible");
    return FieldSpec(FieldKind::quart, a);
}

FieldSpec FieldSpec::compositum() {
    return FieldSpec(FieldKind::compositum, Rational(0));
}

const Rational& FieldSpec::radicand() const {
    if (kind_ == FieldKind::compositum)
        throw std::domain_error("FieldSpec: the compositum has two generators, not one radicand");
    return radicand_;
}

int FieldSpec::degree() const {
    switch (kind_) {
        case FieldKind::quad: return 2;
        case FieldKind::quart: return 4;
        case FieldKind::compositum: return 8;
    }
    throw std::logic_error("FieldSpec: bad kind");
}

namespace {

// theta = a^(1/4) as sqrt(sqrt(a)), refining until the requested width holds
RatInterval fourth_root_enclosure(const Rational& a, const Rational& max_width) {
    Rational inner = max_width;
    for (int round = 0; round < 64; ++round) {
        const RatInterval s = enclose_sqrt(a, inner);
        const RatInterval r = enclose_sqrt(s, max_width / 2);
        if (r.width() <= max_width) return r;
        inner /= 1024;
    }
    throw std::runtime_error("fourth_root_enclosure: failed to reach requested width");
}

}  // namespace

RatInterval FieldSpec::generator_enclosure(const Rational& max_width, int index) const {
    switch (kind_) {
        case FieldKind::quad:
            if (index != 0) throw std::out_of_range("generator_enclosure: Quad has one generator");
            return enclose_sqrt(radicand_, max_width);
        case FieldKind::quart:
            if (index != 0) throw std::out_of_range("generator_enclosure: Quart has one generator");
            return fourth_root_enclosure(radicand_, max_width);
        case FieldKind::compositum:
            if (index == 0) return enclose_sqrt(Rational(1, 3), max_width);
            if (index == 1) return fourth_root_enclosure(Rational(1, 5), max_width);
            throw std::out_of_range("generator_enclosure: compositum has generators 0 and 1");
    }
    throw std::logic_error("FieldSpec: bad kind");
}

std::string FieldSpec::str() const {
    switch (kind_) {
        case FieldKind::quad: return "Q(sqrt(" + radicand_.str() + "))";
        case FieldKind::quart: return "Q((" + radicand_.str() + ")^(1/4))";
        case FieldKind::compositum: return "Q(sqrt(1/3), (1/5)^(1/4))";
    }
    throw std::logic_error("FieldSpec: bad kind");
}

std::vector<Rational> reduce_mod_minpoly(std::vector<Rational> coeffs, const FieldSpec& field) {
    if (field.kind() == FieldKind::compositum)
        throw std::domain_error("reduce_mod_minpoly: compositum reduction is not univariate");
    const size_t d = static_cast<size_t>(field.degree());
    const Rational& a = field.radicand();
    for (size_t k = coeffs.size(); k-- > d;) {
        // theta^k = a * theta^(k-d)
        coeffs[k - d] += coeffs[k] * a;
        coeffs[k] = Rational(0);
    }
    coeffs.resize(d, Rational(0));
    return coeffs;
}

AlgebraicReal::AlgebraicReal(FieldSpec field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    const size_t d = static_cast<size_t>(field_.degree());
    if (field_.kind() == FieldKind::compositum) {
        if (coeffs_.size() != d)
            throw std::invalid_argument("AlgebraicReal: compositum elements need exactly 8 coordinates");
    } else if (coeffs_.size() > d) {
        coeffs_ = reduce_mod_minpoly(std::move(coeffs_), field_);
    } else {
        coeffs_.resize(d, Rational(0));
    }
}

AlgebraicReal AlgebraicReal::constant(const FieldSpec& field, const Rational& c) {
    std::vector<Rational> coeffs(static_cast<size_t>(field.degree()), Rational(0));
    coeffs[0] = c;
    return AlgebraicReal(field, std::move(coeffs));
}

AlgebraicReal AlgebraicReal::generator(const FieldSpec& field) {
    if (field.kind() == FieldKind::compositum)
        throw std::domain_error("AlgebraicReal::generator: use compositum_generator(index)");
    std::vector<Rational> coeffs(static_cast<size_t>(field.degree()), Rational(0));
    coeffs[1] = Rational(1);
    return AlgebraicReal(field, std::move(coeffs));
}

AlgebraicReal AlgebraicReal::compositum_generator(int index) {
    std::vector<Rational> coeffs(8, Rational(0));
    if (index == 0)
        coeffs[4] = Rational(1);  // theta1 = theta1^1 * theta2^0
    else if (index == 1)
        coeffs[1] = Rational(1);  // theta2
    else
        throw std::out_of_range("compositum_generator: index must be 0 or 1");
    return AlgebraicReal(FieldSpec::compositum(), std::move(coeffs));
}

bool AlgebraicReal::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool AlgebraicReal::is_rational() const {
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

const Rational& AlgebraicReal::as_rational() const {
    if (!is_rational()) throw std::domain_error("AlgebraicReal: value is irrational");
    return coeffs_[0];
}

AlgebraicReal AlgebraicReal::operator-() const {
    AlgebraicReal r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string(op) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

}  // namespace

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& o) {
    require_same_field(field_, o.field_, "AlgebraicReal::operator+=");
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& o) {
    require_same_field(field_, o.field_, "AlgebraicReal::operator-=");
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

AlgebraicReal& AlgebraicReal::operator*=(const AlgebraicReal& o) {
    require_same_field(field_, o.field_, "AlgebraicReal::operator*=");
    if (field_.kind() == FieldKind::compositum) {
        // basis theta1^i theta2^j, theta1^2 = 1/3, theta2^4 = 1/5
        static const Rational third(1, 3), fifth(1, 5);
        std::vector<Rational> out(8, Rational(0));
        for (int i1 = 0; i1 < 2; ++i1)
            for (int j1 = 0; j1 < 4; ++j1) {
                const Rational& a = coeffs_[static_cast<size_t>(i1 * 4 + j1)];
                if (a.is_zero()) continue;
                for (int i2 = 0; i2 < 2; ++i2)
                    for (int j2 = 0; j2 < 4; ++j2) {
                        const Rational& b = o.coeffs_[static_cast<size_t>(i2 * 4 + j2)];
                        if (b.is_zero()) continue;
                        Rational term = a * b;
                        int i = i1 + i2, j = j1 + j2;
                        if (i >= 2) { i -= 2; term *= third; }
                        if (j >= 4) { j -= 4; term *= fifth; }
                        out[static_cast<size_t>(i * 4 + j)] += term;
                    }
            }
        coeffs_ = std::move(out);
        return *this;
    }
    const size_t d = coeffs_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce_mod_minpoly(std::move(prod), field_);
    return *this;
}

AlgebraicReal AlgebraicReal::scaled(const Rational& c) const {
    AlgebraicReal r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

AlgebraicReal AlgebraicReal::shifted(const Rational& c) const {
    AlgebraicReal r = *this;
    r.coeffs_[0] += c;
    return r;
}

bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) {
    require_same_field(a.field_, b.field_, "AlgebraicReal::operator==");
    return a.coeffs_ == b.coeffs_;
}

RatInterval AlgebraicReal::enclosure(const Rational& max_width) const {
    if (max_width.sign() <= 0) throw std::invalid_argument("AlgebraicReal::enclosure: width must be positive");
    Rational gen_width = max_width / 16;
    for (int round = 0; round < 96; ++round) {
        RatInterval acc{Rational(0)};
        if (field_.kind() == FieldKind::compositum) {
            const RatInterval t1 = field_.generator_enclosure(gen_width, 0);
            const RatInterval t2 = field_.generator_enclosure(gen_width, 1);
            for (int i = 1; i >= 0; --i) {
                // Horner in theta2 for the row, then fold in theta1
                RatInterval row{Rational(0)};
                for (int j = 3; j >= 0; --j)
                    row = row * t2 + RatInterval(coeffs_[static_cast<size_t>(i * 4 + j)]);
                acc = (i == 1) ? row : acc * t1 + row;
            }
        } else {
            const RatInterval theta = field_.generator_enclosure(gen_width);
            for (size_t k = coeffs_.size(); k-- > 0;)
                acc = acc * theta + RatInterval(coeffs_[k]);
        }
        acc = acc.rounded_out(512);
        if (acc.width() <= max_width) return acc;
        gen_width /= 4096;
    }
    throw std::runtime_error("AlgebraicReal::enclosure: failed to reach requested width");
}

Sign AlgebraicReal::sign() const {
    if (is_zero()) return Sign::zero;
    if (is_rational()) return coeffs_[0].sign() > 0 ? Sign::positive : Sign::negative;
    // nonzero by linear independence of the power basis, so some enclosure
    // eventually excludes zero
    Rational width(1, 1024);
    for (int round = 0; round < 2048; ++round) {
        const RatInterval enc = enclosure(width);
        if (enc.strictly_positive()) return Sign::positive;
        if (enc.strictly_negative()) return Sign::negative;
        width *= Rational(1, 65536);
    }
    throw std::runtime_error("AlgebraicReal::sign: refinement failed to separate from zero");
}

AlgebraicReal AlgebraicReal::to_compositum() const {
    if (field_.kind() == FieldKind::compositum) return *this;
    std::vector<Rational> out(8, Rational(0));
    if (field_ == FieldSpec::quad(Rational(1, 3))) {
        out[0] = coeffs_[0];
        out[4] = coeffs_[1];
        return AlgebraicReal(FieldSpec::compositum(), std::move(out));
    }
    if (field_ == FieldSpec::quart(Rational(1, 5))) {
        for (size_t j = 0; j < 4; ++j) out[j] = coeffs_[j];
        return AlgebraicReal(FieldSpec::compositum(), std::move(out));
    }
    throw std::domain_error("to_compositum: only Quad(1/3) and Quart(1/5) embed into the compositum");
}

std::string AlgebraicReal::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << coeffs_[k].str();
    }
    os << ") over " << field_.str();
    return os.str();
}

AlgebraicReal eval_poly(const std::vector<Rational>& poly, const AlgebraicReal& x) {
    AlgebraicReal acc = AlgebraicReal::constant(x.field(), Rational(0));
    for (size_t k = poly.size(); k-- > 0;) acc = (acc * x).shifted(poly[k]);
    return acc;
}

RatInterval eval_poly(const std::vector<Rational>& poly, const RatInterval& x) {
    RatInterval acc{Rational(0)};
    for (size_t k = poly.size(); k-- > 0;) {
        acc = acc * x + RatInterval(poly[k]);
        acc = acc.rounded_out(320);
    }
    return acc;
}

Rational eval_poly(const std::vector<Rational>& poly, const Rational& x) {
    Rational acc(0);
    for (size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
    return acc;
}

Sign sign_of(const ExactScalar& v) {
    if (const auto* r = std::get_if<Rational>(&v)) {
        const int s = r->sign();
        return s == 0 ? Sign::zero : (s > 0 ? Sign::positive : Sign::negative);
    }
    return std::get<AlgebraicReal>(v).sign();
}

RatInterval enclose(const ExactScalar& v, const Rational& max_width) {
    if (const auto* r = std::get_if<Rational>(&v)) return RatInterval(*r);
    return std::get<AlgebraicReal>(v).enclosure(max_width);
}

ExactScalar negate(const ExactScalar& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return ExactScalar(-*r);
    return ExactScalar(-std::get<AlgebraicReal>(v));
}

std::string to_string(const ExactScalar& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    return std::get<AlgebraicReal>(v).str();
}

bool exact_equal(const ExactScalar& a, const ExactScalar& b) {
    const auto* ra = std::get_if<Rational>(&a);
    const auto* rb = std::get_if<Rational>(&b);
    if (ra && rb) return *ra == *rb;
    if (ra) {
        const auto& alg = std::get<AlgebraicReal>(b);
        return alg.is_rational() && alg.as_rational() == *ra;
    }
    if (rb) {
        const auto& alg = std::get<AlgebraicReal>(a);
        return alg.is_rational() && alg.as_rational() == *rb;
    }
    const auto& aa = std::get<AlgebraicReal>(a);
    const auto& ab = std::get<AlgebraicReal>(b);
    if (aa.field() != ab.field()) {
        if (aa.is_rational() && ab.is_rational()) return aa.as_rational() == ab.as_rational();
        throw std::invalid_argument("exact_equal: values live in different fields");
    }
    return aa == ab;
}

}  // namespace sphereavoid
