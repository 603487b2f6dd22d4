#pragma once

// Lower-bound witnesses: spherical cap families on the 2-sphere that
// avoid a single forbidden inner product t, with exact normalized
// measures, plus a seeded Monte Carlo validator for the avoidance
// property and the measure.
//
// With u = (t+1)/2 and h = 1 - sqrt(u) (the largest open t-avoiding cap
// height), the built-in family attains, for -1 <= t <= cos(2*pi/5):
//   t <= -1/2   one cap of height h            measure h/2
//   t in [-1/2, 0]   two antipodal caps, heights h and 1-(1-2t)sqrt(u)
//                                              measure 1 - (1-t)sqrt(u)
//   t >= 0      two caps of height h, centers at angle arccos(2t^2-1)
//                                              measure h
// The three branches agree exactly at t = -1/2 and t = 0.

#include "sphereavoid/algebraic.hpp"
#include "sphereavoid/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace sphereavoid {

struct Cap {
    std::array<double, 3> center;  // unit vector
    double height;                 // in (0, 2); the cap is {x : <x, center> > 1 - height}
};

struct CapConstruction {
    int dimension = 3;
    bool open = true;
    std::vector<Cap> caps;
    // Closed-form heights, parallel to caps: rational or an element of
    // Q(sqrt(u)). The double fields above are rounded views of these.
    std::vector<ExactScalar> exact_heights;
};

// Largest height of an open cap avoiding inner product t among its own
// points: h = 1 - sqrt((t+1)/2). Requires -1 <= t <= cos(2*pi/5);
// throws std::domain_error outside. Exact: rational when (t+1)/2 is a
// perfect square, else 1 - generator in Q(sqrt((t+1)/2)).
ExactScalar cap_height_for_t(const Rational& t);

// True iff t <= cos(2*pi/5) = (sqrt(5)-1)/4.
bool below_two_cap_limit(const Rational& t);

struct LowerBoundResult {
    Rational t;
    CapConstruction construction;
    ExactScalar measure;  // exact normalized measure of the union
};

// The best built-in construction for the forbidden product t (see the
// regime table above). Requires -1 <= t <= cos(2*pi/5).
LowerBoundResult single_t_lower_bound(const Rational& t);

// Two antipodal open caps of height 1 - 1/sqrt(2): the classical
// orthogonality-avoiding set of measure 1 - 1/sqrt(2).
CapConstruction double_cap();

struct ValidationReport {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;   // sampled pairs at product t with both ends inside
    double measure_estimate = 0.0;  // fraction of uniform samples inside the union
    double std_error = 0.0;         // sqrt(p(1-p)/samples) for the estimate
};

// Seeded, deterministic check: measure_estimate from uniform sphere
// samples, violations from uniformly rotated template pairs with inner
// product exactly t. Requires samples >= 1 and -1 < t < 1. Work is
// sharded (fixed shard count) with derived seeds and merged by
// summation, so results are reproducible for a fixed seed.
ValidationReport monte_carlo_validate(const CapConstruction& c, const Rational& t,
                                      std::uint64_t samples, std::uint64_t seed);

}  // namespace sphereavoid
