#include "sphereavoid/graphs.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sphereavoid {

Rational inner_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: dimension mismatch");
    Rational s(0);
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool UnitVectorGraph::adjacent(int i, int j) const {
    if (!adjacency.empty()) return (adjacency[static_cast<size_t>(i)] >> j) & 1u;
    for (const auto& e : edges)
        if ((e.first == i && e.second == j) || (e.first == j && e.second == i)) return true;
    return false;
}

UnitVectorGraph build_graph(std::vector<std::vector<Rational>> points,
                            std::vector<Rational> forbidden,
                            const Rational& tolerance) {
    if (points.empty()) throw std::invalid_argument("build_graph: no points");
    if (tolerance.sign() < 0) throw std::invalid_argument("build_graph: negative tolerance");

    UnitVectorGraph g;
    g.dimension = static_cast<int>(points[0].size());
    if (g.dimension == 0) throw std::invalid_argument("build_graph: zero-dimensional points");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != g.dimension)
            throw std::invalid_argument("build_graph: inconsistent point dimensions");

    for (const auto& x : forbidden)
        if ((Rational(1) - x).abs() <= tolerance)
            throw std::invalid_argument("build_graph: forbidden set contains 1 (self-loops)");

    for (size_t v = 0; v < points.size(); ++v) {
        const Rational norm2 = inner_product(points[v], points[v]);
        if ((norm2 - Rational(1)).abs() > tolerance)
            throw std::invalid_argument("build_graph: vertex " + std::to_string(v) +
                                        " is not a unit vector (|v|^2 = " + norm2.str() + ")");
    }

    g.vertices = std::move(points);
    g.forbidden = std::move(forbidden);
    g.tolerance = tolerance;

    const int n = g.vertex_count();
    if (n <= 64) g.adjacency.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational ip = inner_product(g.vertices[static_cast<size_t>(i)],
                                              g.vertices[static_cast<size_t>(j)]);
            bool edge = false;
            for (const auto& x : g.forbidden)
                if ((ip - x).abs() <= g.tolerance) {
                    edge = true;
                    break;
                }
            if (edge) {
                g.edges.emplace_back(i, j);
                if (!g.adjacency.empty()) {
                    g.adjacency[static_cast<size_t>(i)] |= std::uint64_t{1} << j;
                    g.adjacency[static_cast<size_t>(j)] |= std::uint64_t{1} << i;
                }
            }
        }
    return g;
}

namespace {

struct MisSearch {
    const std::vector<std::uint64_t>& adj;
    int best = 0;

    // Greedy clique cover of the candidate set: each clique can contribute
    // at most one vertex to an independent set, so the cover size bounds
    // what remains.
    int cover_bound(std::uint64_t cand) const {
        std::uint64_t cliques[64];
        int count = 0;
        while (cand) {
            const int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            bool placed = false;
            for (int c = 0; c < count; ++c) {
                if ((adj[static_cast<size_t>(v)] & cliques[c]) == cliques[c]) {
                    cliques[c] |= std::uint64_t{1} << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques[count++] = std::uint64_t{1} << v;
        }
        return count;
    }

    void expand(std::uint64_t cand, int size) {
        if (size > best) best = size;
        if (!cand) return;
        if (size + cover_bound(cand) <= best) return;
        const int v = __builtin_ctzll(cand);  // lowest index first, for determinism
        const std::uint64_t bit = std::uint64_t{1} << v;
        expand(cand & ~(adj[static_cast<size_t>(v)] | bit), size + 1);
        expand(cand & ~bit, size);
    }
};

}  // namespace

int independence_number(const UnitVectorGraph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap || n > 64)
        throw std::domain_error("independence_number: " + std::to_string(n) +
                                " vertices exceeds the exact-solver cap");
    MisSearch search{g.adjacency};
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.expand(all, 0);
    return search.best;
}

Rational combinatorial_bound(const UnitVectorGraph& g) {
    return Rational(independence_number(g), g.vertex_count());
}

CircleInstance CircleInstance::fraction(long p, long q) {
    if (q <= 0 || p <= 0 || p >= q) throw std::invalid_argument("CircleInstance: need 0 < p < q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("CircleInstance: p/q must be reduced");
    CircleInstance inst;
    inst.p = p;
    inst.q = q;
    return inst;
}

CircleInstance CircleInstance::irrational_rotation() {
    CircleInstance inst;
    inst.irrational = true;
    return inst;
}

CircleValue circle_alpha(const CircleInstance& inst) {
    if (inst.irrational) return {Rational(1, 2), false};
    if (inst.q % 2 == 0) return {Rational(1, 2), true};
    return {Rational(inst.q - 1, 2 * inst.q), true};
}

PointsFile read_points(std::istream& in) {
    PointsFile pf;
    long dim = 0, count = 0;
    if (!(in >> dim) || !(in >> count) || dim < 1 || count < 1)
        throw std::invalid_argument("points file: first line must hold the dimension and the point count");
    pf.dimension = static_cast<int>(dim);
    pf.points.reserve(static_cast<size_t>(count));
    for (long r = 0; r < count; ++r) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(dim));
        for (long c = 0; c < dim; ++c) {
            std::string token;
            if (!(in >> token))
                throw std::invalid_argument("points file: expected " + std::to_string(dim * count) +
                                            " entries, ran out at row " + std::to_string(r));
            if (token.find('.') != std::string::npos || token.find('e') != std::string::npos ||
                token.find('E') != std::string::npos)
                pf.any_decimal = true;
            row.push_back(Rational::parse(token));
        }
        pf.points.push_back(std::move(row));
    }
    return pf;
}

}  // namespace sphereavoid
