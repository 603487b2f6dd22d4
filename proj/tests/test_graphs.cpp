#include "doctest.h"

#include "sphereavoid/graphs.hpp"

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace sphereavoid;

namespace {

std::vector<std::vector<Rational>> octahedron() {
    std::vector<std::vector<Rational>> pts;
    for (int axis = 0; axis < 3; ++axis) {
        for (int s : {1, -1}) {
            std::vector<Rational> p(3, Rational(0));
            p[axis] = Rational(s);
            pts.push_back(p);
        }
    }
    return pts;
}

// rational points on the unit sphere: signed permutations of (3/5, 4/5, 0)
// plus the coordinate axes
std::vector<std::vector<Rational>> pythagorean_points() {
    auto pts = octahedron();
    const Rational a(3, 5), b(4, 5);
    for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
            pts.push_back({a * sa, b * sb, Rational(0)});
            pts.push_back({b * sb, Rational(0), a * sa});
            pts.push_back({Rational(0), a * sa, b * sb});
        }
    }
    return pts;
}

// independent set brute force over all subsets, for cross-checking
int brute_force_mis(const UnitVectorGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; ok && j < n; ++j)
                if ((mask >> j & 1) && g.adjacent(i, j)) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcountll(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("inner products of exact rational vectors") {
    CHECK(inner_product({Rational(3, 5), Rational(4, 5)}, {Rational(4, 5), Rational(3, 5)}) ==
          Rational(24, 25));
    CHECK_THROWS_AS(inner_product({Rational(1)}, {Rational(1), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("octahedron with forbidden product 0 is three disjoint antipodal pairs") {
    const UnitVectorGraph g = build_graph(octahedron(), {Rational(0)}, Rational(0));
    CHECK(g.vertex_count() == 6);
    CHECK(g.edges.size() == 12);  // each vertex orthogonal to 4 others
    CHECK(independence_number(g) == 2);
    CHECK(combinatorial_bound(g) == Rational(1, 3));
    CHECK(g.adjacent(0, 2));
    CHECK(!g.adjacent(0, 1));  // antipodes have product -1
}

TEST_CASE("empty forbidden set yields an edgeless graph") {
    const UnitVectorGraph g = build_graph(octahedron(), {}, Rational(0));
    CHECK(g.edges.empty());
    CHECK(independence_number(g) == 6);
    CHECK(combinatorial_bound(g) == Rational(1));
}

TEST_CASE("build_graph validates its inputs") {
    CHECK_THROWS_AS(build_graph({}, {Rational(0)}, Rational(0)), std::invalid_argument);
    // non-unit vertex
    CHECK_THROWS_AS(build_graph({{Rational(1, 2), Rational(0), Rational(0)}}, {Rational(0)},
                                Rational(0)),
                    std::invalid_argument);
    // forbidden value 1 would self-loop every vertex
    CHECK_THROWS_AS(build_graph(octahedron(), {Rational(1)}, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(octahedron(), {Rational(999, 1000)}, Rational(1, 100)),
                    std::invalid_argument);
    // inconsistent dimensions
    CHECK_THROWS_AS(build_graph({{Rational(1), Rational(0)}, {Rational(1)}}, {Rational(0)},
                                Rational(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_graph(octahedron(), {Rational(0)}, Rational(-1, 10)),
                    std::invalid_argument);
}

TEST_CASE("branch and bound matches subset brute force on random graphs") {
    // adjacency is synthesized directly; geometric fields stay unused
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 6 + static_cast<int>(gen() % 13);  // 6..18
        UnitVectorGraph g;
        g.dimension = 3;
        g.vertices.assign(n, {Rational(1), Rational(0), Rational(0)});
        g.adjacency.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (gen() % 100 < 35) {
                    g.edges.emplace_back(i, j);
                    g.adjacency[i] |= std::uint64_t{1} << j;
                    g.adjacency[j] |= std::uint64_t{1} << i;
                }
            }
        }
        CHECK(independence_number(g) == brute_force_mis(g));
    }
}

TEST_CASE("independence_number refuses instances above the cap") {
    UnitVectorGraph big;
    big.dimension = 1;
    big.vertices.assign(70, {Rational(1)});
    CHECK_THROWS_AS(independence_number(big), std::domain_error);
    CHECK_THROWS_AS(independence_number(big, 70), std::domain_error);  // 64 is a hard limit

    UnitVectorGraph small;
    small.dimension = 1;
    small.vertices.assign(20, {Rational(1)});
    small.adjacency.assign(20, 0);
    CHECK_THROWS_AS(independence_number(small, 10), std::domain_error);
    CHECK(independence_number(small, 20) == 20);
}

TEST_CASE("adding forbidden values never raises the bound") {
    const auto pts = pythagorean_points();
    const std::vector<Rational> candidates = {Rational(0), Rational(3, 5), Rational(-3, 5),
                                              Rational(4, 5), Rational(24, 25), Rational(-7, 25)};
    std::vector<Rational> forbidden;
    Rational prev(1);
    for (const Rational& c : candidates) {
        forbidden.push_back(c);
        const Rational bound = combinatorial_bound(build_graph(pts, forbidden, Rational(0)));
        CHECK(bound <= prev);
        prev = bound;
    }
}

TEST_CASE("regular pentagon with the golden-ratio chord product") {
    // vertices of a regular 5-gon on the circle, 12-digit decimals;
    // cos(4 pi / 5) = -0.809016994375 is forbidden, making a 5-cycle
    const std::string file =
        "2 5\n"
        "1 0\n"
        "0.309016994375 0.951056516295\n"
        "-0.809016994375 0.587785252292\n"
        "-0.809016994375 -0.587785252292\n"
        "0.309016994375 -0.951056516295\n";
    std::istringstream in(file);
    const PointsFile pf = read_points(in);
    CHECK(pf.dimension == 2);
    CHECK(pf.points.size() == 5);
    CHECK(pf.any_decimal);

    const UnitVectorGraph g =
        build_graph(pf.points, {Rational::parse("-0.809016994375")}, Rational::parse("1e-9"));
    CHECK(g.edges.size() == 5);
    CHECK(independence_number(g) == 2);
    CHECK(combinatorial_bound(g) == Rational(2, 5));
}

TEST_CASE("points files parse fractions exactly and flag decimals") {
    std::istringstream exact("3 2\n1 0 0\n3/5 4/5 0\n");
    const PointsFile pf = read_points(exact);
    CHECK(!pf.any_decimal);
    CHECK(pf.points[1][0] == Rational(3, 5));

    std::istringstream bad_header("x 2\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_points(bad_header), std::invalid_argument);
    std::istringstream short_file("2 3\n1 0\n0 1\n");
    CHECK_THROWS_AS(read_points(short_file), std::invalid_argument);
    std::istringstream bad_entry("2 1\n1 zero\n");
    CHECK_THROWS_AS(read_points(bad_entry), std::invalid_argument);
}

TEST_CASE("circle instances validate the rotation fraction") {
    CHECK_THROWS_AS(CircleInstance::fraction(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(CircleInstance::fraction(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(CircleInstance::fraction(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(CircleInstance::fraction(4, 3), std::invalid_argument);
    CHECK(CircleInstance::fraction(1, 3).q == 3);
    CHECK(CircleInstance::irrational_rotation().irrational);
}

TEST_CASE("avoiding measure on the circle by rotation parity") {
    const CircleValue odd = circle_alpha(CircleInstance::fraction(1, 3));
    CHECK(odd.value == Rational(1, 3));
    CHECK(odd.attained);

    const CircleValue odd5 = circle_alpha(CircleInstance::fraction(2, 5));
    CHECK(odd5.value == Rational(2, 5));
    CHECK(odd5.attained);

    const CircleValue even = circle_alpha(CircleInstance::fraction(1, 4));
    CHECK(even.value == Rational(1, 2));
    CHECK(even.attained);

    const CircleValue irr = circle_alpha(CircleInstance::irrational_rotation());
    CHECK(irr.value == Rational(1, 2));
    CHECK(!irr.attained);

    // value is 1/2 exactly when q is even or the rotation is irrational
    for (long q = 2; q <= 15; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const CircleValue v = circle_alpha(CircleInstance::fraction(p, q));
            if (q % 2 == 0) {
                CHECK(v.value == Rational(1, 2));
            } else {
                CHECK(v.value == Rational(q - 1, 2 * q));
                CHECK(v.value < Rational(1, 2));
            }
            CHECK(v.attained);
        }
    }
}
