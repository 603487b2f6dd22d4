#include "doctest.h"

#include "oracle.hpp"
#include "sphereavoid/algebraic.hpp"

#include <stdexcept>
#include <vector>

using namespace sphereavoid;

namespace {

const Rational kWidth30 = Rational::pow10(-30);

FieldSpec q13() { return FieldSpec::quad(Rational(1, 3)); }
FieldSpec q15() { return FieldSpec::quart(Rational(1, 5)); }

}  // namespace

TEST_CASE("field constructors validate the radicand") {
    CHECK(q13().degree() == 2);
    CHECK(q15().degree() == 4);
    CHECK(FieldSpec::compositum().degree() == 8);
    CHECK_THROWS_AS(FieldSpec::quad(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::quad(Rational(-2)), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::quad(Rational(4)), std::invalid_argument);      // sqrt(4) = 2
    CHECK_THROWS_AS(FieldSpec::quad(Rational(9, 16)), std::invalid_argument);  // 3/4
    CHECK_THROWS_AS(FieldSpec::quart(Rational(1, 4)), std::invalid_argument);  // reducible
    CHECK(is_perfect_square(Rational(49, 100)));
    CHECK(!is_perfect_square(Rational(1, 3)));
    CHECK_THROWS_AS(FieldSpec::compositum().radicand(), std::domain_error);
}

TEST_CASE("generator enclosures match reference radicals") {
    const RatInterval g13 = q13().generator_enclosure(kWidth30);
    CHECK(g13.width() <= kWidth30);
    CHECK(oracle::contains(g13, sqrt(oracle::Real(1) / 3)));

    const RatInterval g15 = q15().generator_enclosure(kWidth30);
    CHECK(g15.width() <= kWidth30);
    CHECK(oracle::contains(g15, pow(oracle::Real(1) / 5, oracle::Real(1) / 4)));

    const FieldSpec comp = FieldSpec::compositum();
    CHECK(oracle::contains(comp.generator_enclosure(kWidth30, 0), sqrt(oracle::Real(1) / 3)));
    CHECK(oracle::contains(comp.generator_enclosure(kWidth30, 1),
                           pow(oracle::Real(1) / 5, oracle::Real(1) / 4)));
    CHECK_THROWS_AS(comp.generator_enclosure(kWidth30, 2), std::out_of_range);
    CHECK_THROWS_AS(q13().generator_enclosure(kWidth30, 1), std::out_of_range);
}

TEST_CASE("reduction modulo the minimal polynomial") {
    // theta^2 = 1/3 over Quad(1/3): 1 + 3*theta^2 = 2
    const auto r = reduce_mod_minpoly({Rational(1), Rational(0), Rational(3)}, q13());
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rational(2));
    CHECK(r[1] == Rational(0));
    // theta^4 = 1/5 over Quart(1/5): theta^5 = theta/5
    const auto s = reduce_mod_minpoly(
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(5)}, q15());
    REQUIRE(s.size() == 4);
    CHECK(s[1] == Rational(1));
}

TEST_CASE("generator powers collapse to the radicand") {
    const AlgebraicReal t13 = AlgebraicReal::generator(q13());
    const AlgebraicReal sq = t13 * t13;
    CHECK(sq.is_rational());
    CHECK(sq.as_rational() == Rational(1, 3));

    const AlgebraicReal t15 = AlgebraicReal::generator(q15());
    const AlgebraicReal q = t15 * t15 * t15 * t15;
    CHECK(q.is_rational());
    CHECK(q.as_rational() == Rational(1, 5));
    CHECK(!(t15 * t15).is_rational());
    CHECK_THROWS_AS((t15 * t15).as_rational(), std::domain_error);
}

TEST_CASE("ring identities hold in each field") {
    const AlgebraicReal t = AlgebraicReal::generator(q15());
    const AlgebraicReal a = t.scaled(Rational(2, 3)).shifted(Rational(1, 7)) + t * t;
    const AlgebraicReal b = (-t).shifted(Rational(5)) * t;
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a * (b + b) == a * b + a * b);
    CHECK((a - a).is_zero());
    CHECK(AlgebraicReal::constant(q15(), Rational(0)).is_zero());
}

TEST_CASE("sign is exact near zero") {
    const AlgebraicReal t13 = AlgebraicReal::generator(q13());
    CHECK((t13 * t13).shifted(Rational(-1, 3)).sign() == Sign::zero);
    CHECK(t13.sign() == Sign::positive);
    CHECK((-t13).sign() == Sign::negative);

    // sqrt(1/3) = 0.57735026918962576...; squeeze it between close rationals
    CHECK(t13.shifted(Rational(-57735026918, 100000000000)).sign() == Sign::positive);
    CHECK(t13.shifted(Rational(-57735026919, 100000000000)).sign() == Sign::negative);

    // (1/5)^(1/4) = 0.66874030497642202...
    const AlgebraicReal t15 = AlgebraicReal::generator(q15());
    CHECK(t15.shifted(Rational(-6687, 10000)).sign() == Sign::positive);
    CHECK(t15.shifted(Rational(-6688, 10000)).sign() == Sign::negative);
}

TEST_CASE("enclosures track the generator to the requested width") {
    const AlgebraicReal t15 = AlgebraicReal::generator(q15());
    const AlgebraicReal e = (t15 * t15).scaled(Rational(3)).shifted(Rational(-1));
    const RatInterval iv = e.enclosure(kWidth30);
    CHECK(iv.width() <= kWidth30);
    CHECK(oracle::contains(iv, 3 * sqrt(oracle::Real(1) / 5) - 1));
    CHECK_THROWS_AS(e.enclosure(Rational(0)), std::invalid_argument);
}

TEST_CASE("compositum multiplication mixes both generators") {
    const AlgebraicReal g0 = AlgebraicReal::compositum_generator(0);
    const AlgebraicReal g1 = AlgebraicReal::compositum_generator(1);
    CHECK((g0 * g0).is_rational());
    CHECK((g0 * g0).as_rational() == Rational(1, 3));
    CHECK((g1 * g1 * g1 * g1).as_rational() == Rational(1, 5));

    const AlgebraicReal prod = g0 * g1;
    CHECK(!prod.is_rational());
    const oracle::Real ref =
        sqrt(oracle::Real(1) / 3) * pow(oracle::Real(1) / 5, oracle::Real(1) / 4);
    CHECK(oracle::contains(prod.enclosure(kWidth30), ref));
    CHECK((prod * prod * prod * prod).is_rational());
    CHECK((prod * prod * prod * prod).as_rational() == Rational(1, 45));

    CHECK_THROWS_AS(AlgebraicReal::generator(FieldSpec::compositum()), std::domain_error);
    CHECK_THROWS_AS(AlgebraicReal::compositum_generator(2), std::out_of_range);
    CHECK_THROWS_AS(AlgebraicReal(FieldSpec::compositum(), {Rational(1)}), std::invalid_argument);
}

TEST_CASE("to_compositum preserves values from the quadratic and quartic fields") {
    const AlgebraicReal t13 = AlgebraicReal::generator(q13());
    const AlgebraicReal lifted = t13.shifted(Rational(2)).to_compositum();
    CHECK(lifted.field() == FieldSpec::compositum());
    CHECK(lifted == AlgebraicReal::compositum_generator(0).shifted(Rational(2)));

    const AlgebraicReal t15 = AlgebraicReal::generator(q15());
    CHECK((t15 * t15).to_compositum() ==
          AlgebraicReal::compositum_generator(1) * AlgebraicReal::compositum_generator(1));

    // only Quad(1/3) and Quart(1/5) embed
    CHECK_THROWS_AS(AlgebraicReal::generator(FieldSpec::quad(Rational(2))).to_compositum(),
                    std::domain_error);
    // compositum elements pass through unchanged
    const AlgebraicReal g1 = AlgebraicReal::compositum_generator(1);
    CHECK(g1.to_compositum() == g1);
}

TEST_CASE("mixed-field comparison throws instead of silently failing") {
    const AlgebraicReal a = AlgebraicReal::generator(q13());
    const AlgebraicReal b = AlgebraicReal::generator(q15());
    CHECK_THROWS_AS(static_cast<void>(a == b), std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("polynomial evaluation agrees across the three overloads") {
    const std::vector<Rational> poly = {Rational(1, 2), Rational(-1), Rational(0), Rational(2)};
    CHECK(eval_poly(poly, Rational(1, 3)) == Rational(1, 2) - Rational(1, 3) + Rational(2, 27));

    const AlgebraicReal at_gen = eval_poly(poly, AlgebraicReal::generator(q13()));
    const oracle::Real x = sqrt(oracle::Real(1) / 3);
    const oracle::Real ref = oracle::Real("0.5") - x + 2 * x * x * x;
    CHECK(oracle::contains(at_gen.enclosure(kWidth30), ref));

    const RatInterval at_iv = eval_poly(poly, RatInterval(Rational(1, 3), Rational(1, 2)));
    CHECK(at_iv.contains(eval_poly(poly, Rational(1, 3))));
    CHECK(at_iv.contains(eval_poly(poly, Rational(2, 5))));
    CHECK(at_iv.contains(eval_poly(poly, Rational(1, 2))));
}

TEST_CASE("exact scalars compare across representations") {
    const ExactScalar r = Rational(1, 3);
    const ExactScalar sq = AlgebraicReal::generator(q13()) * AlgebraicReal::generator(q13());
    CHECK(exact_equal(r, sq));
    CHECK(exact_equal(sq, r));
    CHECK(!exact_equal(r, ExactScalar(Rational(1, 4))));

    const ExactScalar g = AlgebraicReal::generator(q13());
    CHECK(sign_of(g) == Sign::positive);
    CHECK(sign_of(negate(g)) == Sign::negative);
    CHECK(sign_of(ExactScalar(Rational(0))) == Sign::zero);
    CHECK(enclose(g, kWidth30).width() <= kWidth30);
    CHECK(oracle::contains(enclose(g, kWidth30), sqrt(oracle::Real(1) / 3)));
    CHECK(to_string(ExactScalar(Rational(1, 3))) == "1/3");

    const ExactScalar h = AlgebraicReal::generator(q15());
    CHECK_THROWS_AS(exact_equal(g, h), std::invalid_argument);
}
