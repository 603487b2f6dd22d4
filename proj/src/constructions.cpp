#include "sphereavoid/constructions.hpp"

#include "sphereavoid/interval.hpp"

#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

namespace sphereavoid {

bool below_two_cap_limit(const Rational& t) {
    // t <= (sqrt(5)-1)/4  <=>  4t+1 <= sqrt(5)
    const Rational s = 4 * t + 1;
    return s.sign() <= 0 || s * s <= Rational(5);
}

namespace {

void check_t_range(const Rational& t) {
    if (t < Rational(-1) || !below_two_cap_limit(t))
        throw std::domain_error("forbidden product must lie in [-1, cos(2*pi/5)]");
}

double approx(const ExactScalar& v) {
    return enclose(v, Rational::pow10(-25)).lo().to_double();
}

}  // namespace

ExactScalar cap_height_for_t(const Rational& t) {
    check_t_range(t);
    const Rational u = (t + 1) / 2;
    if (is_perfect_square(u)) {
        const Rational root = enclose_sqrt(u, Rational(1)).lo();
        return ExactScalar(Rational(1) - root);
    }
    const AlgebraicReal root = AlgebraicReal::generator(FieldSpec::quad(u));
    return ExactScalar((-root).shifted(Rational(1)));
}

LowerBoundResult single_t_lower_bound(const Rational& t) {
    check_t_range(t);
    const Rational u = (t + 1) / 2;
    const ExactScalar h = cap_height_for_t(t);
    const double hd = approx(h);

    LowerBoundResult result;
    result.t = t;
    CapConstruction& c = result.construction;

    const bool exact_root = is_perfect_square(u);
    const Rational rat_root = exact_root ? enclose_sqrt(u, Rational(1)).lo() : Rational(0);

    if (t <= Rational(-1, 2)) {
        c.caps = {{{0.0, 0.0, 1.0}, hd}};
        c.exact_heights = {h};
        if (exact_root)
            result.measure = ExactScalar((Rational(1) - rat_root) / 2);
        else {
            const AlgebraicReal root = AlgebraicReal::generator(FieldSpec::quad(u));
            result.measure = ExactScalar((-root).shifted(Rational(1)).scaled(Rational(1, 2)));
        }
    } else if (t < Rational(0)) {
        // antipodal caps: the second height is the largest one whose
        // points stay above inner product t against the first cap
        ExactScalar h2;
        if (exact_root) {
            h2 = ExactScalar(Rational(1) - (1 - 2 * t) * rat_root);
            result.measure = ExactScalar(Rational(1) - (1 - t) * rat_root);
        } else {
            const AlgebraicReal root = AlgebraicReal::generator(FieldSpec::quad(u));
            h2 = ExactScalar(root.scaled(-(1 - 2 * t)).shifted(Rational(1)));
            result.measure = ExactScalar(root.scaled(-(1 - t)).shifted(Rational(1)));
        }
        c.caps = {{{0.0, 0.0, 1.0}, hd}, {{0.0, 0.0, -1.0}, approx(h2)}};
        c.exact_heights = {h, h2};
    } else {
        // equal caps, centers at the angle whose cosine is 2t^2 - 1; the
        // gap between the caps then straddles t without touching it
        const double td = t.to_double();
        const double cos_psi = 2.0 * td * td - 1.0;
        const double sin_psi = 2.0 * td * std::sqrt(std::max(0.0, 1.0 - td * td));
        c.caps = {{{0.0, 0.0, 1.0}, hd}, {{sin_psi, 0.0, cos_psi}, hd}};
        c.exact_heights = {h, h};
        result.measure = h;
    }
    return result;
}

CapConstruction double_cap() {
    return single_t_lower_bound(Rational(0)).construction;
}

namespace {

// Box-Muller on raw mt19937_64 words; std::normal_distribution is
// implementation-defined, which would break seed reproducibility.
struct NormalGen {
    std::mt19937_64 g;
    bool have_spare = false;
    double spare = 0.0;

    explicit NormalGen(std::uint64_t seed) : g(seed) {}

    double uniform01() { return (static_cast<double>(g() >> 11) + 1.0) * 0x1p-53; }

    double operator()() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform01()));
        const double phi = 6.283185307179586476925286766559 * uniform01();
        spare = r * std::sin(phi);
        have_spare = true;
        return r * std::cos(phi);
    }
};

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 unit_sample(NormalGen& gen) {
    for (;;) {
        const Vec3 v{gen(), gen(), gen()};
        const double n = std::sqrt(dot(v, v));
        if (n > 1e-12) return {v[0] / n, v[1] / n, v[2] / n};
    }
}

bool inside(const CapConstruction& c, const Vec3& x) {
    for (const Cap& cap : c.caps)
        if (dot(x, cap.center) > 1.0 - cap.height) return true;
    return false;
}

// Uniform rotation: Gram-Schmidt over three normal triples, third
// column negated when the determinant comes out -1. Columns returned.
std::array<Vec3, 3> random_rotation(NormalGen& gen) {
    for (;;) {
        const Vec3 c1 = unit_sample(gen);
        Vec3 c2{gen(), gen(), gen()};
        const double p21 = dot(c2, c1);
        for (int k = 0; k < 3; ++k) c2[k] -= p21 * c1[k];
        const double n2 = std::sqrt(dot(c2, c2));
        if (n2 <= 1e-12) continue;
        for (int k = 0; k < 3; ++k) c2[k] /= n2;
        Vec3 c3{gen(), gen(), gen()};
        const double p31 = dot(c3, c1), p32 = dot(c3, c2);
        for (int k = 0; k < 3; ++k) c3[k] -= p31 * c1[k] + p32 * c2[k];
        const double n3 = std::sqrt(dot(c3, c3));
        if (n3 <= 1e-12) continue;
        for (int k = 0; k < 3; ++k) c3[k] /= n3;
        const Vec3 cross{c1[1] * c2[2] - c1[2] * c2[1], c1[2] * c2[0] - c1[0] * c2[2],
                         c1[0] * c2[1] - c1[1] * c2[0]};
        if (dot(cross, c3) < 0.0)
            for (int k = 0; k < 3; ++k) c3[k] = -c3[k];
        return {c1, c2, c3};
    }
}

struct ShardResult {
    std::uint64_t inside_count = 0;
    std::uint64_t violations = 0;
};

ShardResult run_shard(const CapConstruction& c, double t, std::uint64_t n, std::uint64_t seed) {
    NormalGen gen(seed);
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    ShardResult r;
    for (std::uint64_t i = 0; i < n; ++i)
        if (inside(c, unit_sample(gen))) ++r.inside_count;
    for (std::uint64_t i = 0; i < n; ++i) {
        const auto rot = random_rotation(gen);
        const Vec3& x = rot[0];
        const Vec3 y{t * rot[0][0] + s * rot[1][0], t * rot[0][1] + s * rot[1][1],
                     t * rot[0][2] + s * rot[1][2]};
        if (inside(c, x) && inside(c, y)) ++r.violations;
    }
    return r;
}

}  // namespace

ValidationReport monte_carlo_validate(const CapConstruction& c, const Rational& t,
                                      std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("monte_carlo_validate: samples must be >= 1");
    if (t <= Rational(-1) || t >= Rational(1))
        throw std::domain_error("monte_carlo_validate: t must satisfy -1 < t < 1");

    constexpr std::uint64_t kShards = 8;
    const double td = t.to_double();
    std::vector<std::future<ShardResult>> futures;
    for (std::uint64_t shard = 0; shard < kShards; ++shard) {
        const std::uint64_t n = samples / kShards + (shard < samples % kShards ? 1 : 0);
        const std::uint64_t shard_seed = seed + 0x9E3779B97F4A7C15ULL * (shard + 1);
        futures.push_back(std::async(std::launch::async, run_shard, std::cref(c), td, n, shard_seed));
    }

    ValidationReport rep;
    rep.samples = samples;
    std::uint64_t inside_total = 0;
    for (auto& f : futures) {
        const ShardResult r = f.get();
        inside_total += r.inside_count;
        rep.violations += r.violations;
    }
    rep.measure_estimate = static_cast<double>(inside_total) / static_cast<double>(samples);
    rep.std_error = std::sqrt(rep.measure_estimate * (1.0 - rep.measure_estimate) /
                              static_cast<double>(samples));
    return rep;
}

}  // namespace sphereavoid
