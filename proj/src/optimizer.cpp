#include "simplexwidth/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/directions.hpp"
#include "simplexwidth/energy.hpp"
#include "simplexwidth/error.hpp"
#include "simplexwidth/rng.hpp"

namespace simplexwidth {

namespace {

using Coords = std::vector<double>;

void remove_mean(Coords& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    for (double& x : v) x -= mean;
}

double norm_of(const Coords& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double dot_of(const Coords& a, const Coords& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Coords random_start(SplitMix64& gen, std::size_t dim, bool sum_zero) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Coords u(dim);
    for (;;) {
        for (double& x : u) x = gauss(gen);
        if (sum_zero) remove_mean(u);
        const double nrm = norm_of(u);
        if (nrm > 1e-8) {
            for (double& x : u) x /= nrm;
            return u;
        }
    }
}

/// Snap an iterate whose coordinates cluster around its min and max onto the
/// exact two-valued direction. Returns nothing when the iterate is not close
/// to two-valued or the snap degenerates.
std::optional<Direction> snap_two_valued(const Coords& z, bool sum_zero) {
    const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
    const double alpha = *lo;
    const double beta = *hi;
    const double spread = beta - alpha;
    if (!(spread > 0.0)) return std::nullopt;
    for (double x : z) {
        if (std::min(x - alpha, beta - x) > 0.25 * spread) return std::nullopt;
    }
    const Vector clamped = clamp_to_extremes(Vector(z), alpha, beta);
    try {
        return Direction::normalized(clamped, sum_zero);
    } catch (const Error&) {
        return std::nullopt;
    }
}

struct RestartOutcome {
    Coords best;
    double best_width;
    int iterations;
    bool converged;
};

RestartOutcome run_restart(const PointSet& points, const OptimizerConfig& cfg, SplitMix64 gen) {
    const std::size_t dim = points.dim();
    Coords u = random_start(gen, dim, cfg.constrain_sum_zero);
    ObjectiveValue f = evaluate_width_objective(u, points);

    RestartOutcome out{u, f.value, 0, false};
    Coords g(dim);
    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        const auto hi = points[f.argmax].coords();
        const auto lo = points[f.argmin].coords();
        for (std::size_t i = 0; i < dim; ++i) g[i] = hi[i] - lo[i];
        if (cfg.constrain_sum_zero) remove_mean(g);
        const double radial = dot_of(g, u);
        for (std::size_t i = 0; i < dim; ++i) g[i] -= radial * u[i];
        if (norm_of(g) <= 1e-15) {
            out.converged = true;
            break;
        }

        const double step = cfg.step_init / std::sqrt(static_cast<double>(iter));
        for (std::size_t i = 0; i < dim; ++i) u[i] -= step * g[i];
        if (cfg.constrain_sum_zero) remove_mean(u);
        const double nrm = norm_of(u);
        for (double& x : u) x /= nrm;

        const double previous = f.value;
        f = evaluate_width_objective(u, points);
        out.iterations = iter;
        if (f.value < out.best_width) {
            out.best_width = f.value;
            out.best = u;
        }
        if (std::abs(previous - f.value) < cfg.tol) {
            out.converged = true;
            break;
        }
    }

    if (auto snapped = snap_two_valued(out.best, cfg.constrain_sum_zero)) {
        const double w = evaluate_width_objective(snapped->vec().coords(), points).value;
        if (w <= out.best_width) {
            out.best = snapped->vec().values();
            out.best_width = w;
        }
    }
    return out;
}

/// Calls visit(u) for every grid direction of the constraint space.
void scan_grid(const PointSet& points, int resolution, bool constrain_sum_zero,
               const std::function<void(const Coords&, double)>& visit) {
    if (resolution < 8) {
        throw Error(ErrorKind::invalid_argument, "grid resolution must be at least 8");
    }
    const std::size_t dim = points.dim();
    if (constrain_sum_zero && dim < 2) {
        throw Error(ErrorKind::invalid_dimension, "sum-zero constraint leaves no directions in dimension 1");
    }
    const std::vector<Vector> basis = constrain_sum_zero ? sum_zero_basis(dim) : [&] {
        std::vector<Vector> b;
        for (std::size_t i = 0; i < dim; ++i) b.push_back(Vector::basis(dim, i));
        return b;
    }();
    const std::size_t search_dim = basis.size();
    if (search_dim > 3) {
        throw Error(ErrorKind::oracle_scope,
                    "grid oracle supports search dimension <= 3, got " + std::to_string(search_dim));
    }

    // Points expressed in the search basis; the grid works in these coordinates.
    std::vector<std::array<double, 3>> local(points.size(), {0.0, 0.0, 0.0});
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t k = 0; k < search_dim; ++k) local[p][k] = dot(points[p], basis[k]);
    }

    Coords u(dim);
    auto emit = [&](const std::array<double, 3>& a) {
        double hi = -std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& q : local) {
            const double d = a[0] * q[0] + a[1] * q[1] + a[2] * q[2];
            hi = std::max(hi, d);
            lo = std::min(lo, d);
        }
        std::fill(u.begin(), u.end(), 0.0);
        for (std::size_t k = 0; k < search_dim; ++k) {
            for (std::size_t i = 0; i < dim; ++i) u[i] += a[k] * basis[k][i];
        }
        visit(u, hi - lo);
    };

    const double pi = std::numbers::pi;
    if (search_dim == 1) {
        emit({1.0, 0.0, 0.0});
    } else if (search_dim == 2) {
        // Half circle: the width is even in u.
        for (int k = 0; k < resolution; ++k) {
            const double theta = pi * k / resolution;
            emit({std::cos(theta), std::sin(theta), 0.0});
        }
    } else {
        // Polar angle over [0, pi], azimuth over [0, pi): one of each antipodal pair.
        for (int j = 0; j <= resolution; ++j) {
            const double phi = pi * j / resolution;
            const double s = std::sin(phi);
            const double c = std::cos(phi);
            const int azimuths = (j == 0 || j == resolution) ? 1 : resolution;
            for (int k = 0; k < azimuths; ++k) {
                const double theta = pi * k / resolution;
                emit({s * std::cos(theta), s * std::sin(theta), c});
            }
        }
    }
}

Direction finish_direction(const Coords& u, bool sum_zero) {
    return Direction::normalized(Vector(u), sum_zero);
}

}  // namespace

void OptimizerConfig::validate() const {
    if (restarts < 1) throw Error(ErrorKind::invalid_argument, "restarts must be at least 1");
    if (max_iters < 1) throw Error(ErrorKind::invalid_argument, "max_iters must be at least 1");
    if (!(step_init > 0.0) || !std::isfinite(step_init)) {
        throw Error(ErrorKind::invalid_argument, "step_init must be positive and finite");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw Error(ErrorKind::invalid_argument, "tol must be positive and finite");
    }
}

const char* to_string(WidthMethod method) noexcept {
    switch (method) {
        case WidthMethod::subgradient: return "subgradient";
        case WidthMethod::grid: return "grid";
        case WidthMethod::enumeration: return "enumeration";
    }
    return "unknown";
}

ObjectiveValue evaluate_width_objective(std::span<const double> u, const PointSet& points) {
    if (u.size() != points.dim()) {
        throw Error(ErrorKind::dimension_mismatch, "direction and point set dimensions differ");
    }
    ObjectiveValue out{0.0, 0, 0};
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto c = points[p].coords();
        double d = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) d += u[i] * c[i];
        if (d > hi) {
            hi = d;
            out.argmax = p;
        }
        if (d < lo) {
            lo = d;
            out.argmin = p;
        }
    }
    out.value = hi - lo;
    return out;
}

std::vector<Vector> sum_zero_basis(std::size_t dim) {
    std::vector<Vector> basis;
    for (std::size_t k = 1; k < dim; ++k) {
        std::vector<double> h(dim, 0.0);
        const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        for (std::size_t i = 0; i < k; ++i) h[i] = scale;
        h[k] = -static_cast<double>(k) * scale;
        basis.emplace_back(std::move(h));
    }
    return basis;
}

WidthResult minimize_width(const PointSet& points, const OptimizerConfig& cfg) {
    cfg.validate();
    if (cfg.constrain_sum_zero && points.dim() < 2) {
        throw Error(ErrorKind::invalid_dimension, "sum-zero constraint leaves no directions in dimension 1");
    }

    const SplitMix64 root(cfg.seed);
    std::optional<RestartOutcome> best;
    for (int r = 0; r < cfg.restarts; ++r) {
        RestartOutcome outcome = run_restart(points, cfg, root.split(static_cast<std::uint64_t>(r)));
        if (!best || outcome.best_width < best->best_width) best = std::move(outcome);
    }

    Direction direction = finish_direction(best->best, cfg.constrain_sum_zero);
    const double width = projection_width(direction, points);
    return {width, std::move(direction), best->iterations, cfg.restarts, best->converged,
            WidthMethod::subgradient, std::nullopt};
}

WidthResult grid_width_oracle(const PointSet& points, int resolution, bool constrain_sum_zero) {
    Coords best_u;
    double best_width = std::numeric_limits<double>::infinity();
    int evaluations = 0;
    scan_grid(points, resolution, constrain_sum_zero, [&](const Coords& u, double w) {
        ++evaluations;
        if (w < best_width) {
            best_width = w;
            best_u = u;
        }
    });
    Direction direction = finish_direction(best_u, constrain_sum_zero);
    const double width = projection_width(direction, points);
    return {width, std::move(direction), evaluations, 0, true, WidthMethod::grid, std::nullopt};
}

std::vector<GridSample> grid_near_minimizers(const PointSet& points, int resolution,
                                             bool constrain_sum_zero, double slack) {
    if (!(slack >= 0.0)) throw Error(ErrorKind::invalid_argument, "slack must be nonnegative");
    // Two passes: the threshold depends on the global minimum.
    double min_width = std::numeric_limits<double>::infinity();
    scan_grid(points, resolution, constrain_sum_zero,
              [&](const Coords&, double w) { min_width = std::min(min_width, w); });
    std::vector<GridSample> out;
    scan_grid(points, resolution, constrain_sum_zero, [&](const Coords& u, double w) {
        if (w <= min_width + slack) out.push_back({finish_direction(u, constrain_sum_zero), w});
    });
    return out;
}

WidthResult two_value_enumeration_width(int n) {
    ExactScalar best = width_for_t(n, 1);
    int best_t = 1;
    for (int t = 2; t <= n; ++t) {
        ExactScalar w = width_for_t(n, t);
        if (w < best) {
            best = std::move(w);
            best_t = t;
        }
    }
    std::vector<std::size_t> low(static_cast<std::size_t>(best_t));
    for (std::size_t i = 0; i < low.size(); ++i) low[i] = i;
    TwoValueDirection witness = make_two_value_direction(n, best_t, std::move(low));
    const double width = best.sqrt();
    return {width, std::move(witness.direction), n, 0, true, WidthMethod::enumeration, std::move(best)};
}

}  // namespace simplexwidth
