#pragma once

// Exact arithmetic in the small real algebraic fields the certificates
// live in:
//
//   Quad(a)   = Q(theta),  theta = sqrt(a)   (minimal polynomial x^2 - a)
//   Quart(a)  = Q(theta),  theta = a^(1/4)   (minimal polynomial x^4 - a)
//   Compositum = Q(sqrt(1/3), (1/5)^(1/4)),  degree 8 over Q
//
// Generators always denote the positive real root. Elements are stored as
// rational coordinate vectors over the power basis; for the compositum the
// basis is theta1^i * theta2^j with i < 2, j < 4, flattened as i*4 + j.
// Because each basis is linearly independent over Q, an element is zero
// exactly when every coordinate is zero, which makes sign computation
// decidable: test the coordinates, then refine an interval enclosure until
// it excludes zero.

#include "sphereavoid/interval.hpp"
#include "sphereavoid/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace sphereavoid {

enum class FieldKind { quad, quart, compositum };

class FieldSpec {
public:
    // Requires a > 0 and a not a perfect rational square (so x^2 - a and
    // x^4 - a are irreducible over Q). Throws std::invalid_argument.
    static FieldSpec quad(const Rational& a);
    static FieldSpec quart(const Rational& a);
    static FieldSpec compositum();

    FieldKind kind() const { return kind_; }
    const Rational& radicand() const;  // throws for the compositum
    int degree() const;

    // Enclosure of the generator; for the compositum, index 0 is sqrt(1/3)
    // and index 1 is (1/5)^(1/4).
    RatInterval generator_enclosure(const Rational& max_width, int index = 0) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.radicand_ == b.radicand_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

    std::string str() const;

private:
    FieldSpec(FieldKind k, Rational a) : kind_(k), radicand_(std::move(a)) {}
    FieldKind kind_;
    Rational radicand_;  // unused for compositum
};

bool is_perfect_square(const Rational& a);

// Reduce an arbitrary-length power-basis coordinate vector modulo the
// minimal polynomial (theta^d = a). Quad/Quart only. Example: [1, 0, 3]
// over Quad(1/3) reduces to [2, 0].
std::vector<Rational> reduce_mod_minpoly(std::vector<Rational> coeffs, const FieldSpec& field);

enum class Sign { negative = -1, zero = 0, positive = 1 };

class AlgebraicReal {
public:
    // Quad/Quart: any length, reduced mod the minimal polynomial.
    // Compositum: exactly 8 coordinates.
    AlgebraicReal(FieldSpec field, std::vector<Rational> coeffs);

    static AlgebraicReal constant(const FieldSpec& field, const Rational& c);
    static AlgebraicReal generator(const FieldSpec& field);  // Quad/Quart only
    static AlgebraicReal compositum_generator(int index);    // 0: sqrt(1/3), 1: (1/5)^(1/4)

    const FieldSpec& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    const Rational& as_rational() const;  // throws std::domain_error if not rational

    AlgebraicReal operator-() const;
    AlgebraicReal& operator+=(const AlgebraicReal& o);
    AlgebraicReal& operator-=(const AlgebraicReal& o);
    AlgebraicReal& operator*=(const AlgebraicReal& o);

    friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
    friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
    friend AlgebraicReal operator*(AlgebraicReal a, const AlgebraicReal& b) { return a *= b; }

    AlgebraicReal scaled(const Rational& c) const;
    AlgebraicReal shifted(const Rational& c) const;

    // Same field and same coordinates; fields must match (throws otherwise).
    friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b);
    friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return !(a == b); }

    RatInterval enclosure(const Rational& max_width) const;

    // Exact: coordinate test for zero, then interval refinement.
    Sign sign() const;
    bool is_positive() const { return sign() == Sign::positive; }
    bool is_negative() const { return sign() == Sign::negative; }

    // Embed into the degree-8 compositum. Accepts elements of Quad(1/3),
    // Quart(1/5) and the compositum itself; throws std::domain_error for
    // any other field.
    AlgebraicReal to_compositum() const;

    std::string str() const;

private:
    FieldSpec field_;
    std::vector<Rational> coeffs_;
};

// Horner evaluation of a rational-coefficient polynomial (poly[k] is the
// coefficient of x^k).
AlgebraicReal eval_poly(const std::vector<Rational>& poly, const AlgebraicReal& x);
RatInterval eval_poly(const std::vector<Rational>& poly, const RatInterval& x);
Rational eval_poly(const std::vector<Rational>& poly, const Rational& x);

// A value that is known exactly, either as a plain rational or as a field
// element. Rationals that happen to admit a field representation are kept
// rational (e.g. cap heights at perfect-square radicands).
using ExactScalar = std::variant<Rational, AlgebraicReal>;

Sign sign_of(const ExactScalar& v);
RatInterval enclose(const ExactScalar& v, const Rational& max_width);
ExactScalar negate(const ExactScalar& v);
std::string to_string(const ExactScalar& v);

// Exact value equality. Comparable when both are rational, both live in
// the same field, or one side is rational; throws std::invalid_argument
// for elements of two different irrational fields.
bool exact_equal(const ExactScalar& a, const ExactScalar& b);

}  // namespace sphereavoid
