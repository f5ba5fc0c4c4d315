#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simplexwidth/exact.hpp"
#include "simplexwidth/geometry.hpp"

namespace simplexwidth {

struct OptimizerConfig {
    int restarts = 64;
    int max_iters = 10'000;
    double step_init = 1.0;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    /// Restrict the search to unit directions orthogonal to the all-ones vector.
    bool constrain_sum_zero = false;

    void validate() const;
};

enum class WidthMethod { subgradient, grid, enumeration };

const char* to_string(WidthMethod method) noexcept;

struct WidthResult {
    double width;
    Direction direction;
    int iterations;
    int restarts_used;
    bool converged;
    WidthMethod method;
    /// Set only by methods that know the squared width exactly.
    std::optional<ExactScalar> exact_width_squared;
};

/// Value of the width objective at u together with the extreme points that
/// realize it (lowest index on ties). p[argmax] - p[argmin] is a subgradient.
struct ObjectiveValue {
    double value;
    std::size_t argmax;
    std::size_t argmin;
};

ObjectiveValue evaluate_width_objective(std::span<const double> u, const PointSet& points);

/// Orthonormal basis of the subspace of R^dim orthogonal to the all-ones
/// vector (Helmert vectors). dim - 1 entries.
std::vector<Vector> sum_zero_basis(std::size_t dim);

/// Projected subgradient descent on the unit sphere (optionally intersected
/// with the sum-zero subspace), best of `cfg.restarts` seeded restarts.
/// The returned width is an upper bound on the true width.
WidthResult minimize_width(const PointSet& points, const OptimizerConfig& cfg);

/// Exhaustive angular grid over the unit sphere of the search space, which
/// must have dimension at most 3. `resolution` subdivisions per angle.
WidthResult grid_width_oracle(const PointSet& points, int resolution, bool constrain_sum_zero = false);

struct GridSample {
    Direction direction;
    double width;
};

/// All grid directions whose width is within `slack` of the grid minimum.
/// Antipodal duplicates are not reported.
std::vector<GridSample> grid_near_minimizers(const PointSet& points, int resolution,
                                             bool constrain_sum_zero, double slack);

/// Exact minimum of width_for_t(n, t) over t = 1..n, with the witness
/// direction whose low set is {0, .., t-1}.
WidthResult two_value_enumeration_width(int n);

}  // namespace simplexwidth
