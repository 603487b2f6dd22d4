#include "sphereavoid/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sphereavoid {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// "123", "1.5", optionally signed; exponent handled by the caller.
Rational parse_plain(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body.erase(0, 1);
    }
    std::string int_part = body, frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (int_part.empty()) int_part = "0";
        if (frac_part.empty()) frac_part = "0";
    }
    if (!all_digits(int_part) || (!frac_part.empty() && !all_digits(frac_part)))
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    mpz_class num(int_part);
    mpz_class den(1);
    if (!frac_part.empty()) {
        for (size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        num = num * den + mpz_class(frac_part);
    }
    if (neg) num = -num;
    return Rational(num, den);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("Rational: empty string");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        std::string nb = ns, db = ds;
        if (!nb.empty() && (nb[0] == '+' || nb[0] == '-')) nb.erase(0, 1);
        if (!db.empty() && (db[0] == '+' || db[0] == '-')) db.erase(0, 1);
        if (!all_digits(nb) || !all_digits(db))
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        mpz_class num(ns), den(ds);
        if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string mant = s.substr(0, epos), exp = s.substr(epos + 1);
        std::string eb = exp;
        bool eneg = false;
        if (!eb.empty() && (eb[0] == '+' || eb[0] == '-')) {
            eneg = eb[0] == '-';
            eb.erase(0, 1);
        }
        if (!all_digits(eb) || eb.size() > 6)
            throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        long e = std::stol(eb);
        return parse_plain(mant) * pow10(eneg ? -e : e);
    }
    return parse_plain(s);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

Rational Rational::pow10(long k) {
    mpz_class p(1);
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? Rational(mpz_class(1), p) : Rational(p, mpz_class(1));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(num, den);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal_str(int digits) const {
    if (digits < 1) digits = 1;
    mpz_class num = v_.get_num(), den = v_.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero
    mpz_class scaled = (num * scale * 2 + den) / (den * 2);
    mpz_class ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (frac != "0") out += "." + frac;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace sphereavoid
