#include "simplexwidth/directions.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "simplexwidth/closed_form.hpp"
#include "simplexwidth/error.hpp"
#include "test_support.hpp"

using namespace simplexwidth;

namespace {

std::uint64_t choose(int n, int k) {
    // Pascal's triangle, independent of the library.
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c[n][k];
}

ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::invalid_argument;
}

std::vector<std::vector<double>> raw_simplex(int n) {
    std::vector<std::vector<double>> pts(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) pts[i][i] = 1.0;
    return pts;
}

}  // namespace

TEST(MakeTwoValueDirection, Examples) {
    const TwoValueDirection a = make_two_value_direction(3, 2, {1, 0});
    EXPECT_EQ(a.low_set, (std::vector<std::size_t>{0, 1}));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a.direction[i], i < 2 ? -0.5 : 0.5, 1e-15);
    EXPECT_NEAR(projection_width(a.direction, standard_simplex_vertices(3)), 1.0, 1e-12);

    const TwoValueDirection b = make_two_value_direction(2, 1, {0});
    EXPECT_NEAR(b.direction[0], -std::sqrt(2.0 / 3.0), 1e-15);
    EXPECT_NEAR(b.direction[1], std::sqrt(1.0 / 6.0), 1e-15);
    EXPECT_NEAR(b.direction[2], std::sqrt(1.0 / 6.0), 1e-15);
    EXPECT_NEAR(projection_width(b.direction, standard_simplex_vertices(2)), std::sqrt(1.5), 1e-12);

    const TwoValueDirection c = make_two_value_direction(5, 1, {4});
    EXPECT_NEAR(projection_width(c.direction, standard_simplex_vertices(5)), std::sqrt(6.0 / 5.0), 1e-12);
    EXPECT_NEAR(std::sqrt(6.0 / 5.0), 1.095445, 1e-6);
}

TEST(MakeTwoValueDirection, InvariantsForAllT) {
    for (int n = 1; n <= 24; ++n) {
        const PointSet d = standard_simplex_vertices(n);
        for (int t = 1; t <= n; ++t) {
            std::vector<std::size_t> low;
            for (int i = 0; i < t; ++i) low.push_back(static_cast<std::size_t>(n - i));
            const TwoValueDirection u = make_two_value_direction(n, t, low);
            EXPECT_TRUE(u.direction.sum_zero());
            EXPECT_NEAR(u.direction.vec().squared_norm(), 1.0, 1e-14);
            EXPECT_NEAR(u.direction.vec().sum(), 0.0, 1e-14);
            EXPECT_NEAR(projection_width(u.direction, d), width_for_t(n, t).sqrt(), 1e-12);
        }
    }
}

TEST(MakeTwoValueDirection, Errors) {
    EXPECT_EQ(error_of([] { make_two_value_direction(3, 2, {0}); }), ErrorKind::invalid_argument);
    EXPECT_EQ(error_of([] { make_two_value_direction(3, 2, {0, 4}); }), ErrorKind::domain);
    EXPECT_EQ(error_of([] { make_two_value_direction(3, 2, {1, 1}); }), ErrorKind::invalid_argument);
    EXPECT_EQ(error_of([] { make_two_value_direction(3, 4, {0, 1, 2, 3}); }), ErrorKind::domain);
    EXPECT_EQ(error_of([] { make_two_value_direction(0, 1, {0}); }), ErrorKind::invalid_dimension);
}

TEST(EnumerateOptimalDirections, SmallCases) {
    const auto d1 = enumerate_optimal_directions(1);
    ASSERT_EQ(d1.size(), 2u);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(d1[0][0], -h, 1e-15);
    EXPECT_NEAR(d1[0][1], h, 1e-15);
    EXPECT_NEAR(d1[1][0], h, 1e-15);
    EXPECT_NEAR(d1[1][1], -h, 1e-15);
    for (const auto& u : d1) EXPECT_NEAR(projection_width(u, standard_simplex_vertices(1)), std::sqrt(2.0), 1e-12);

    const auto d2 = enumerate_optimal_directions(2);
    EXPECT_EQ(d2.size(), 3u);
    for (const auto& u : d2) EXPECT_NEAR(projection_width(u, standard_simplex_vertices(2)), std::sqrt(1.5), 1e-12);

    const auto d3 = enumerate_optimal_directions(3);
    EXPECT_EQ(d3.size(), 6u);
    for (const auto& u : d3) {
        EXPECT_NEAR(projection_width(u, standard_simplex_vertices(3)), 1.0, 1e-12);
        for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(u[i]), 0.5, 1e-15);
    }
}

TEST(EnumerateOptimalDirections, OddFamilyEqualsBalancedSignVectors) {
    // Independent construction of H by scanning all sign vectors.
    for (int n : {1, 3, 5, 7}) {
        const int dim = n + 1;
        std::set<std::vector<int>> expected;
        for (unsigned mask = 0; mask < (1u << dim); ++mask) {
            std::vector<int> signs(dim);
            int sum = 0;
            for (int i = 0; i < dim; ++i) {
                signs[i] = (mask >> i & 1u) ? 1 : -1;
                sum += signs[i];
            }
            if (sum == 0) expected.insert(signs);
        }
        std::set<std::vector<int>> got;
        for (const auto& u : enumerate_optimal_directions(n)) {
            std::vector<int> signs(dim);
            for (int i = 0; i < dim; ++i) {
                EXPECT_NEAR(std::abs(u[i]), 1.0 / std::sqrt(static_cast<double>(dim)), 1e-15);
                signs[i] = u[i] > 0 ? 1 : -1;
            }
            got.insert(signs);
        }
        EXPECT_EQ(got, expected) << n;
    }
}

TEST(EnumerateOptimalDirections, CountsDistinctAndAchieveWidth) {
    for (int n = 1; n <= 11; ++n) {
        const auto family = enumerate_optimal_directions(n);
        const int t = n % 2 == 1 ? (n + 1) / 2 : n / 2;
        EXPECT_EQ(family.size(), choose(n + 1, t)) << n;
        std::set<std::vector<double>> distinct;
        const auto pts = raw_simplex(n);
        const double target = width_squared(n, SimplexKind::standard).sqrt();
        for (const auto& u : family) {
            distinct.insert(u.vec().values());
            EXPECT_NEAR(simplexwidth::testing::brute_width(u.vec().values(), pts), target, 1e-12);
        }
        EXPECT_EQ(distinct.size(), family.size());
    }
}

TEST(EnumerateOptimalDirections, CapAndDimensionErrors) {
    EXPECT_EQ(enumerate_optimal_directions(20).size(), choose(21, 10));
    EXPECT_EQ(error_of([] { enumerate_optimal_directions(21); }), ErrorKind::cap_exceeded);
    EXPECT_EQ(error_of([] { enumerate_optimal_directions(0); }), ErrorKind::invalid_dimension);
}

TEST(IsOptimalDirection, Examples) {
    EXPECT_TRUE(is_optimal_direction(3, Direction(Vector{0.5, 0.5, -0.5, -0.5}, true)));
    const double h = 1.0 / std::sqrt(2.0);
    const Direction off(Vector{h, -h, 0.0, 0.0}, true);
    EXPECT_FALSE(is_optimal_direction(3, off));
    EXPECT_NEAR(projection_width(off, standard_simplex_vertices(3)), std::sqrt(2.0), 1e-15);
    EXPECT_TRUE(is_optimal_direction(
        2, Direction(Vector{-std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 6.0), std::sqrt(1.0 / 6.0)}, true)));
    // t = n/2 + 1 members are negatives of the family and count as optimal.
    EXPECT_TRUE(is_optimal_direction(
        2, Direction(Vector{std::sqrt(2.0 / 3.0), -std::sqrt(1.0 / 6.0), -std::sqrt(1.0 / 6.0)}, true)));
}

TEST(IsOptimalDirection, Preconditions) {
    EXPECT_EQ(error_of([] { is_optimal_direction(3, Direction(Vector{1.0, 0.0, 0.0, 0.0})); }),
              ErrorKind::precondition);
    EXPECT_EQ(error_of([] { is_optimal_direction(2, Direction(Vector{0.5, 0.5, -0.5, -0.5}, true)); }),
              ErrorKind::dimension_mismatch);
}

TEST(IsOptimalDirection, SignSymmetryAndFamilies) {
    std::mt19937_64 rng(99);
    for (int n = 1; n <= 10; ++n) {
        for (const auto& u : enumerate_optimal_directions(n)) {
            EXPECT_TRUE(is_optimal_direction(n, u));
            EXPECT_TRUE(is_optimal_direction(n, -u));
        }
        for (int k = 0; k < 50; ++k) {
            const Direction r = simplexwidth::testing::random_direction(rng, static_cast<std::size_t>(n) + 1, true);
            EXPECT_EQ(is_optimal_direction(n, r), is_optimal_direction(n, -r));
        }
    }
}

TEST(IsOptimalDirection, ToleranceBand) {
    const int n = 5;
    const Direction base = enumerate_optimal_directions(n).front();
    auto nudged = [&](double eps) {
        std::vector<double> c = base.vec().values();
        c[0] += eps;
        c[1] -= eps;
        return Direction::normalized(Vector(c), true);
    };
    EXPECT_TRUE(is_optimal_direction(n, nudged(1e-12)));
    EXPECT_FALSE(is_optimal_direction(n, nudged(1e-6)));
}

TEST(TwoValueFamilies, UnbalancedTIsStrictlyWorse) {
    for (int n = 1; n <= 10; ++n) {
        const ExactScalar best = width_squared(n, SimplexKind::standard);
        for (int t = 1; t <= n; ++t) {
            if (t == (n + 1) / 2 || t == (n + 2) / 2) continue;
            EXPECT_GT(width_for_t(n, t), best) << n << "," << t;
        }
    }
}

TEST(TwoValueFamilies, OddFamilyIsSymmetricSigns) {
    for (int n = 1; n <= 63; n += 2) {
        const AlphaBeta ab = alpha_beta(n, optimal_low_count(n));
        EXPECT_EQ(ab.alpha, -ab.beta);
        EXPECT_NEAR(ab.beta, 1.0 / std::sqrt(n + 1.0), 1e-15);
    }
}
