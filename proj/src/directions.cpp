#include "simplexwidth/directions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/error.hpp"

namespace simplexwidth {

namespace {

Direction build_two_value(int n, const std::vector<bool>& low_mask, const AlphaBeta& ab) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = low_mask[i] ? ab.alpha : ab.beta;
    return Direction(Vector(std::move(c)), /*sum_zero=*/true);
}

bool matches_family(std::span<const double> u, int t, const AlphaBeta& ab, double sign) {
    int low = 0;
    for (double x : u) {
        const double c = sign * x;
        if (std::abs(c - ab.alpha) <= kMembershipTolerance) {
            ++low;
        } else if (std::abs(c - ab.beta) > kMembershipTolerance) {
            return false;
        }
    }
    return low == t;
}

}  // namespace

TwoValueDirection make_two_value_direction(int n, int t, std::vector<std::size_t> low_set) {
    const AlphaBeta ab = alpha_beta(n, t);
    if (low_set.size() != static_cast<std::size_t>(t)) {
        throw Error(ErrorKind::invalid_argument,
                    "low set has " + std::to_string(low_set.size()) + " indices, expected t = " +
                        std::to_string(t));
    }
    const auto dim = static_cast<std::size_t>(n) + 1;
    std::vector<bool> mask(dim, false);
    for (std::size_t i : low_set) {
        if (i >= dim) {
            throw Error(ErrorKind::domain, "low set index " + std::to_string(i) + " out of range");
        }
        if (mask[i]) {
            throw Error(ErrorKind::invalid_argument, "low set index " + std::to_string(i) + " repeated");
        }
        mask[i] = true;
    }
    std::sort(low_set.begin(), low_set.end());
    return {n, t, std::move(low_set), build_two_value(n, mask, ab)};
}

int optimal_low_count(int n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_dimension, "dimension must be at least 1, got " + std::to_string(n));
    }
    return n % 2 == 1 ? (n + 1) / 2 : n / 2;
}

std::vector<Direction> enumerate_optimal_directions(int n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_dimension, "dimension must be at least 1, got " + std::to_string(n));
    }
    if (n > kMaxEnumerationDimension) {
        throw Error(ErrorKind::cap_exceeded,
                    "enumeration is limited to n <= " + std::to_string(kMaxEnumerationDimension) +
                        ", got " + std::to_string(n));
    }
    const int t = optimal_low_count(n);
    const AlphaBeta ab = alpha_beta(n, t);
    std::vector<bool> mask(static_cast<std::size_t>(n) + 1, false);
    std::fill(mask.begin(), mask.begin() + t, true);

    std::vector<Direction> out;
    do {
        out.push_back(build_two_value(n, mask, ab));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

bool is_optimal_direction(int n, const Direction& u) {
    const int t = optimal_low_count(n);
    const AlphaBeta ab = alpha_beta(n, t);
    if (u.dim() != static_cast<std::size_t>(n) + 1) {
        throw Error(ErrorKind::dimension_mismatch,
                    "direction has dimension " + std::to_string(u.dim()) + ", expected " +
                        std::to_string(n + 1));
    }
    if (std::abs(u.vec().sum()) > kUnitTolerance) {
        throw Error(ErrorKind::precondition, "direction must lie in the sum-zero subspace");
    }
    const auto coords = u.vec().coords();
    return matches_family(coords, t, ab, 1.0) || matches_family(coords, t, ab, -1.0);
}

}  // namespace simplexwidth
