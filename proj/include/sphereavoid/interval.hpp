#pragma once

// Interval arithmetic over exact rational endpoints.
//
// Every operation is outward-correct: the true real result of the
// corresponding operation on any members of the input intervals lies in
// the output interval. Endpoints can grow under repeated multiplication,
// so long pipelines should call rounded_out() to snap endpoints to a
// dyadic grid (still outward, so soundness is preserved).

#include "sphereavoid/rational.hpp"

#include <iosfwd>
#include <string>

namespace sphereavoid {

class RatInterval {
public:
    RatInterval() : lo_(0), hi_(0) {}
    explicit RatInterval(const Rational& point) : lo_(point), hi_(point) {}
    RatInterval(Rational lo, Rational hi);  // throws std::invalid_argument if lo > hi

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RatInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_positive() const { return lo_ > 0; }
    bool strictly_negative() const { return hi_ < 0; }
    bool excludes_zero() const { return strictly_positive() || strictly_negative(); }

    RatInterval operator-() const { return RatInterval(-hi_, -lo_); }
    RatInterval& operator+=(const RatInterval& o);
    RatInterval& operator-=(const RatInterval& o);
    RatInterval& operator*=(const RatInterval& o);

    friend RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
    friend RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
    friend RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }

    RatInterval scaled(const Rational& c) const;
    RatInterval shifted(const Rational& c) const { return RatInterval(lo_ + c, hi_ + c); }

    // Requires the divisor interval to exclude zero.
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b);

    RatInterval pow(unsigned e) const;

    // Snap endpoints outward to multiples of 2^-bits.
    RatInterval rounded_out(unsigned bits) const;

    static RatInterval hull(const RatInterval& a, const RatInterval& b);

    std::string str() const;

private:
    Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const RatInterval& iv);

// Enclosure of sqrt(x) with width <= max_width. Requires x >= 0; exact
// (degenerate) when x is a perfect rational square, e.g. sqrt(4) -> [2, 2].
RatInterval enclose_sqrt(const Rational& x, const Rational& max_width);

// sqrt over an interval with nonnegative lower endpoint.
RatInterval enclose_sqrt(const RatInterval& x, const Rational& max_width);

// Enclosure of pi with width <= max_width (Machin's formula, alternating
// series remainder bounds). The width-1e-30 enclosure is computed once and
// cached; narrower requests recompute.
RatInterval enclose_pi(const Rational& max_width);

// Enclosure of cos over x. Sound for any x, intended for |x| <= 2*pi.
RatInterval enclose_cos(const RatInterval& x, const Rational& max_width);

// Default enclosure width, 1e-30 unless overridden by the
// SPHERE_AVOID_PRECISION environment variable (read once).
const Rational& default_enclosure_width();

}  // namespace sphereavoid
