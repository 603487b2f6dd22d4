#pragma once

// Finite forbidden-inner-product graphs on sphere points: vertices are
// unit vectors, an edge joins two vertices whose inner product lies
// (within tolerance) in the forbidden set. Exact maximum independent set
// by branch and bound, and the averaging bound alpha(G)/|V|.

#include "sphereavoid/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace sphereavoid {

struct UnitVectorGraph {
    int dimension = 0;
    std::vector<std::vector<Rational>> vertices;
    std::vector<Rational> forbidden;
    Rational tolerance;
    std::vector<std::pair<int, int>> edges;   // i < j
    std::vector<std::uint64_t> adjacency;     // row bitmasks; built when <= 64 vertices

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    bool adjacent(int i, int j) const;
};

// Throws std::invalid_argument when points are empty or inconsistent,
// a vertex is non-unit beyond tolerance, or 1 lies within tolerance of
// the forbidden set (which would create self-loops).
UnitVectorGraph build_graph(std::vector<std::vector<Rational>> points,
                            std::vector<Rational> forbidden,
                            const Rational& tolerance);

// Exact maximum independent set size; branch and bound with a greedy
// clique-cover upper bound, branching on the lowest-index candidate.
// Throws std::domain_error above the cap (this is a verification tool
// for small instances, not a MIS solver).
int independence_number(const UnitVectorGraph& g, int cap = 64);

// alpha(g) / vertex count.
Rational combinatorial_bound(const UnitVectorGraph& g);

Rational inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Rotation number of a forbidden inner product on the circle:
// x = cos(2 pi p / q) with p/q reduced, or an irrational rotation.
// (Deciding rationality of arccos(x)/2pi from raw x is not computable,
// so the rotation is taken directly.)
struct CircleInstance {
    bool irrational = false;
    long p = 0, q = 0;

    static CircleInstance fraction(long p, long q);  // requires coprime, 0 < p < q
    static CircleInstance irrational_rotation();
};

struct CircleValue {
    Rational value;
    bool attained;
};

// Largest measure of a circle set avoiding the given inner product:
// q even -> 1/2 attained; q odd -> (q-1)/(2q) attained; irrational ->
// 1/2, approached but not attained.
CircleValue circle_alpha(const CircleInstance& inst);

// Points file: first line "dim m", then m rows of dim entries, each a
// decimal or "a/b" rational.
struct PointsFile {
    int dimension = 0;
    std::vector<std::vector<Rational>> points;
    bool any_decimal = false;  // drives the default adjacency tolerance
};

PointsFile read_points(std::istream& in);

}  // namespace sphereavoid
