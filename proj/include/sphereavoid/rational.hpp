#pragma once

// Exact arbitrary-precision rational numbers, backed by GMP.
//
// Invariants (maintained by every operation):
//   - denominator > 0
//   - gcd(|numerator|, denominator) == 1
//
// Serialization is the canonical reduced form "num/den" (plain "num"
// for integers), e.g. parsing "128614/1000000" re-emits "64307/500000".

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sphereavoid {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT: implicit by design
    Rational(int n) : v_(n) {}            // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "a/b", integers, plain decimals ("0.25", "-3.5") and
    // scientific notation ("1e-30", "2.5e3"). Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    // Exact value of a finite double (mantissa / 2^k).
    static Rational from_double(double x);

    static Rational pow10(long k);  // 10^k, k may be negative

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational reciprocal() const;  // throws std::domain_error on zero
    Rational pow(unsigned long e) const;

    mpz_class floor() const;
    mpz_class ceil() const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;  // "num/den", or plain "num" for integers
    std::string decimal_str(int digits = 12) const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sphereavoid
