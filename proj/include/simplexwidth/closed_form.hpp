#pragma once

#include <string_view>

#include "simplexwidth/exact.hpp"
#include "simplexwidth/geometry.hpp"

namespace simplexwidth {

/// Largest n accepted by the rational closed forms.
inline constexpr int kMaxExactDimension = 1'000'000;

/// standard: hull of e_1..e_{n+1} (edge sqrt 2). regular: unit edge length.
enum class SimplexKind { standard, regular };

const char* to_string(SimplexKind kind) noexcept;
SimplexKind parse_simplex_kind(std::string_view text);

/// Squared width. Standard simplex: 4/(n+1) for odd n, 4(n+1)/(n(n+2)) for
/// even n. The regular simplex is the standard one shrunk by sqrt 2, so its
/// squared width is half of that.
ExactScalar width_squared(int n, SimplexKind kind);

/// Centroid 1/(n+1) of the standard simplex, on the hyperplane <x, 1> = 1.
Vector center(int n);

/// Squared distance n/(n+1) from the centroid to each standard-simplex vertex.
ExactScalar circumdistance_squared(int n);

/// Squared radius 1/(n(n+1)) of the largest ball inside the standard simplex
/// within its own hyperplane.
ExactScalar indistance_squared(int n);

/// Regular simplex inradius^2 = 1/(2n(n+1)).
ExactScalar inradius_squared(int n);

/// Regular simplex circumradius^2 = n/(2(n+1)).
ExactScalar circumradius_squared(int n);

/// Squared projection width (n+1)/(t(n+1-t)) of the standard simplex along a
/// unit sum-zero direction whose coordinates take the value alpha t times and
/// beta the remaining n+1-t times.
ExactScalar width_for_t(int n, int t);

struct AlphaBeta {
    double alpha;  // < 0, taken t times
    double beta;   // > 0, taken n+1-t times
};

/// Coordinate values of the two-valued unit sum-zero direction with t low
/// coordinates: alpha = -sqrt((n+1-t)/(t(n+1))), beta = -t alpha/(n+1-t).
AlphaBeta alpha_beta(int n, int t);

struct AlphaBetaSquared {
    ExactScalar alpha_sq;
    ExactScalar beta_sq;
};

/// Exact alpha^2 and beta^2 for the same family.
AlphaBetaSquared alpha_beta_squared(int n, int t);

}  // namespace simplexwidth
