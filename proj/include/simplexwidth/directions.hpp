#pragma once

#include <cstddef>
#include <vector>

#include "simplexwidth/geometry.hpp"

namespace simplexwidth {

/// Largest n for which the optimal direction families are enumerated.
inline constexpr int kMaxEnumerationDimension = 20;

/// Per-coordinate tolerance when deciding family membership.
inline constexpr double kMembershipTolerance = 1e-10;

/// Unit sum-zero direction in R^{n+1} taking the value alpha on `low_set`
/// (t coordinates) and beta everywhere else.
struct TwoValueDirection {
    int n;
    int t;
    std::vector<std::size_t> low_set;  // sorted
    Direction direction;
};

TwoValueDirection make_two_value_direction(int n, int t, std::vector<std::size_t> low_set);

/// Number of low coordinates in the width-minimizing family:
/// (n+1)/2 for odd n, n/2 for even n.
int optimal_low_count(int n);

/// Every direction of the width-minimizing family of the standard simplex.
/// Odd n: the C(n+1, (n+1)/2) balanced sign vectors over sqrt(n+1).
/// Even n: the C(n+1, n/2) two-valued directions with n/2 low coordinates.
/// Ordered by low set, lexicographically.
std::vector<Direction> enumerate_optimal_directions(int n);

/// Structural membership test: u or -u matches the family coordinate-wise
/// within kMembershipTolerance. For odd n this is the complete set of
/// optimal directions. For even n a `false` only means "not in the
/// constructed family".
bool is_optimal_direction(int n, const Direction& u);

}  // namespace simplexwidth
