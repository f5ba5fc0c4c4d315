#include "simplexwidth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/directions.hpp"
#include "simplexwidth/energy.hpp"
#include "simplexwidth/error.hpp"
#include "simplexwidth/geometry.hpp"
#include "simplexwidth/optimizer.hpp"
#include "simplexwidth/rng.hpp"

namespace simplexwidth {

namespace {

std::string range_note(int lo, int hi) {
    return "n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

CheckResult check_width_identity(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const std::int64_t m = n;
        const ExactScalar expected = (n % 2 == 1) ? ExactScalar(4, m + 1) : ExactScalar(4 * (m + 1), m * (m + 2));
        if (width_squared(n, SimplexKind::standard) != expected) {
            return {"exact-width-identity", false, "closed form mismatch at n=" + std::to_string(n)};
        }
        const WidthResult enumerated = two_value_enumeration_width(n);
        if (!enumerated.exact_width_squared || *enumerated.exact_width_squared != expected) {
            return {"exact-width-identity", false, "two-value enumeration mismatch at n=" + std::to_string(n)};
        }
    }
    return {"exact-width-identity", true, range_note(1, max_n)};
}

CheckResult check_rescaling(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        if (width_squared(n, SimplexKind::regular) * ExactScalar(2) != width_squared(n, SimplexKind::standard)) {
            return {"regular-rescaling", false, "halving fails at n=" + std::to_string(n)};
        }
    }
    return {"regular-rescaling", true, range_note(1, max_n)};
}

CheckResult check_radii(int max_n) {
    const int hi = std::min(max_n, kMaxVerifyRadiiDimension);
    for (int n = 1; n <= hi; ++n) {
        const PointSet vertices = standard_simplex_vertices(n);
        const Vector c = center(n);
        const double circ = circumdistance_squared(n).to_double();
        for (const Vector& v : vertices.points()) {
            if (std::abs(squared_distance(c, v) - circ) > 1e-14) {
                return {"radii", false, "circumdistance off at n=" + std::to_string(n)};
            }
        }
        // Facet opposite vertex k: centroid of the remaining n vertices.
        const double in = indistance_squared(n).to_double();
        const auto dim = static_cast<std::size_t>(n) + 1;
        for (std::size_t k = 0; k < dim; ++k) {
            std::vector<double> centroid(dim, 1.0 / n);
            centroid[k] = 0.0;
            if (std::abs(squared_distance(c, Vector(std::move(centroid))) - in) > 1e-14) {
                return {"radii", false, "indistance off at n=" + std::to_string(n)};
            }
        }
        if (inradius_squared(n) * ExactScalar(2) != indistance_squared(n) ||
            circumradius_squared(n) * ExactScalar(2) != circumdistance_squared(n)) {
            return {"radii", false, "regular radii are not halves at n=" + std::to_string(n)};
        }
    }
    return {"radii", true, range_note(1, hi)};
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

CheckResult check_direction_families(int max_n) {
    const int hi = std::min(max_n, kMaxVerifyEnumerationDimension);
    for (int n = 1; n <= hi; ++n) {
        const PointSet vertices = standard_simplex_vertices(n);
        const double target = width_squared(n, SimplexKind::standard).sqrt();
        const std::vector<Direction> family = enumerate_optimal_directions(n);
        if (family.size() != binomial(n + 1, optimal_low_count(n))) {
            return {"direction-families", false, "wrong family size at n=" + std::to_string(n)};
        }
        for (const Direction& u : family) {
            if (std::abs(projection_width(u, vertices) - target) > 1e-12) {
                return {"direction-families", false, "member misses the width at n=" + std::to_string(n)};
            }
        }
    }
    return {"direction-families", true, range_note(1, hi)};
}

CheckResult check_alpha_beta(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (int t = 1; t <= n; ++t) {
            const AlphaBeta ab = alpha_beta(n, t);
            const double norm = t * ab.alpha * ab.alpha + (n + 1 - t) * ab.beta * ab.beta;
            const AlphaBetaSquared sq = alpha_beta_squared(n, t);
            const ExactScalar exact = ExactScalar(t) * sq.alpha_sq + ExactScalar(n + 1 - t) * sq.beta_sq;
            if (std::abs(norm - 1.0) > 1e-14 || exact != ExactScalar(1)) {
                std::ostringstream os;
                os << "unit-norm identity fails at n=" << n << ", t=" << t;
                return {"alpha-beta-sanity", false, os.str()};
            }
        }
    }
    return {"alpha-beta-sanity", true, range_note(1, max_n)};
}

CheckResult check_energy(std::uint64_t seed) {
    const EnergyFuzzSummary s = fuzz_energy_claim(10'000, seed);
    return {"energy-monotonicity", s.violations == 0,
            std::to_string(s.violations) + " violations in " + std::to_string(s.instances) + " instances"};
}

CheckResult check_optimizer(int max_n, std::uint64_t seed) {
    const int hi = std::min(max_n, kMaxVerifyOptimizerDimension);
    OptimizerConfig cfg;
    cfg.seed = seed;
    cfg.constrain_sum_zero = true;
    double worst = 0.0;
    for (int n = 1; n <= hi; ++n) {
        const double target = width_squared(n, SimplexKind::standard).sqrt();
        const WidthResult r = minimize_width(standard_simplex_vertices(n), cfg);
        const double rel = std::abs(r.width - target) / target;
        worst = std::max(worst, rel);
        if (rel > 1e-6 || r.width < target - 1e-9 || !is_optimal_direction(n, r.direction)) {
            return {"optimizer-agreement", false, "optimizer disagrees at n=" + std::to_string(n)};
        }
    }
    std::ostringstream os;
    os << range_note(1, hi) << ", worst relative error " << worst;
    return {"optimizer-agreement", true, os.str()};
}

CheckResult check_t_optimality(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const ExactScalar best = width_squared(n, SimplexKind::standard);
        for (int t = 1; t <= n; ++t) {
            const bool balanced = (t == (n + 1) / 2) || (t == (n + 2) / 2);
            const ExactScalar w = width_for_t(n, t);
            if (balanced ? (w != best) : !(w > best)) {
                return {"t-optimality", false, "argmin wrong at n=" + std::to_string(n) + ", t=" + std::to_string(t)};
            }
        }
    }
    return {"t-optimality", true, range_note(1, max_n)};
}

CheckResult check_monotone(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        if (!(width_squared(n, SimplexKind::regular) < width_squared(n - 1, SimplexKind::regular))) {
            return {"monotone-decrease", false, "not decreasing at n=" + std::to_string(n)};
        }
    }
    return {"monotone-decrease", true, range_note(1, max_n)};
}

}  // namespace

EnergyFuzzSummary fuzz_energy_claim(int instances, std::uint64_t seed) {
    SplitMix64 gen = SplitMix64(seed).split(0x656e65726779ULL);
    EnergyFuzzSummary summary{0, 0};
    while (summary.instances < instances) {
        const auto dim = static_cast<std::size_t>(2 + gen() % 49);
        std::vector<double> v(dim);
        for (double& x : v) x = -10.0 + 20.0 * gen.uniform01();
        const std::size_t i = gen() % dim;
        const EnergyReport base = center_vector(Vector(v));
        const double step = 1.0 - gen.uniform01();  // (0, 1]
        double new_value;
        if (v[i] >= base.mean) {
            new_value = v[i] + (10.0 - v[i]) * step;
        } else {
            new_value = v[i] - (v[i] + 10.0) * step;
        }
        if (new_value == v[i]) continue;
        ++summary.instances;
        if (!energy_push(Vector(std::move(v)), i, new_value).increased) ++summary.violations;
    }
    return summary;
}

std::vector<CheckResult> run_verification(int max_n, std::uint64_t seed) {
    if (max_n < 1 || max_n > kMaxVerifyDimension) {
        throw Error(ErrorKind::invalid_dimension,
                    "max-n must lie in [1, " + std::to_string(kMaxVerifyDimension) + "]");
    }
    return {
        check_width_identity(max_n),
        check_rescaling(max_n),
        check_radii(max_n),
        check_direction_families(max_n),
        check_alpha_beta(max_n),
        check_energy(seed),
        check_optimizer(max_n, seed),
        check_t_optimality(max_n),
        check_monotone(max_n),
    };
}

}  // namespace simplexwidth
