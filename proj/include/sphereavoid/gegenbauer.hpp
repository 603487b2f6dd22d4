#pragma once

// Normalized ultraspherical (Gegenbauer) polynomials C_i^nu with
// C_i^nu(1) = 1, built once as exact rational monomial coefficients from
// the classical three-term recurrence and then rescaled. For nu = 1/2
// (the 2-sphere) these are the Legendre polynomials.
//
// Also houses the fixed-angle averaging eigenvalues
//   mu_d(t) = C_d^((n-2)/2)(t) * (1 - t^2)^((n-3)/2)
// and a certified enclosure of the Szegő-type envelope that dominates
// |C_i^(1/2)(cos theta)|, used by the certificate tail check.

#include "sphereavoid/algebraic.hpp"
#include "sphereavoid/interval.hpp"
#include "sphereavoid/rational.hpp"

#include <utility>
#include <vector>

namespace sphereavoid {

class GegenbauerTable {
public:
    // Requires nu > -1/2 and max_degree >= 0. nu = 0 is the Chebyshev
    // limit (T_i, already normalized at 1).
    GegenbauerTable(const Rational& nu, int max_degree);

    const Rational& nu() const { return nu_; }
    int max_degree() const { return max_degree_; }

    // Monomial coefficients of C_i^nu, constant term first, size i+1.
    const std::vector<Rational>& coefficients(int i) const;

    Rational eval(int i, const Rational& t) const;
    AlgebraicReal eval(int i, const AlgebraicReal& t) const;
    RatInterval eval(int i, const RatInterval& t) const;

private:
    Rational nu_;
    int max_degree_;
    std::vector<std::vector<Rational>> coeffs_;
};

// Shared nu = 1/2 table, degree 120: certificates need 40, cutting-plane
// experiments want headroom.
const GegenbauerTable& legendre_table();

// omega_n = 2 pi^(n/2) / Gamma(n/2) = coefficient * pi^pi_power
// (half-integer Gamma values contribute the exact rational coefficient).
struct WeightConstants {
    int n;
    Rational coefficient;
    int pi_power;

    RatInterval enclosure(const Rational& max_width) const;
};

WeightConstants omega_constants(int n);  // requires n >= 2

struct MuValue {
    bool exact;            // true iff the value is an exact rational
    Rational value;        // meaningful when exact
    RatInterval enclosure; // always a valid enclosure (degenerate when exact)
};

// Eigenvalue of the averaging operator over the inner-product-t section.
// Exact for odd n (integer exponent); enclosure otherwise.
// Requires n >= 3, d >= 0, -1 < t < 1.
MuValue eigenvalue_mu(int n, int d, const Rational& t,
                      const Rational& max_width = default_enclosure_width());

// Enclosure of
//   sqrt(2)/(sqrt(pi * s)) * G(i+1)/G(i+3/2)
//     + 1/(sqrt(pi) * 2^(3/2) * s^(3/2)) * G(i+1)/G(i+5/2)
// for s = sin(theta); its upper endpoint dominates |C_i^(1/2)(cos theta)|.
// Gamma ratios reduce to exact rationals over sqrt(pi) via
// Gamma(i+1/2) = (i-1/2)(i-3/2)...(1/2)sqrt(pi).
// Requires i >= 0 and sin_theta within (0, 1]. max_width bounds the width
// contributed by internal constants; input width propagates on top.
RatInterval szego_bound(int i, const RatInterval& sin_theta,
                        const Rational& max_width = default_enclosure_width());

// The exact factors by which the two envelope terms shrink from i to i+1:
// ((i+1)/(i+3/2), (i+1)/(i+5/2)). Both < 1 for every i >= 0, which
// certifies per-term monotone decrease.
std::pair<Rational, Rational> szego_step_ratio(int i);

}  // namespace sphereavoid
