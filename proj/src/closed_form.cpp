#include "simplexwidth/closed_form.hpp"

#include <cmath>
#include <string>

#include "simplexwidth/error.hpp"

namespace simplexwidth {

namespace {

void require_dimension(int n) {
    if (n < 1 || n > kMaxExactDimension) {
        throw Error(ErrorKind::invalid_dimension,
                    "dimension must lie in [1, " + std::to_string(kMaxExactDimension) + "], got " +
                        std::to_string(n));
    }
}

void require_low_count(int n, int t) {
    require_dimension(n);
    if (t < 1 || t > n) {
        throw Error(ErrorKind::domain,
                    "t must lie in [1, " + std::to_string(n) + "], got " + std::to_string(t));
    }
}

}  // namespace

const char* to_string(SimplexKind kind) noexcept {
    return kind == SimplexKind::standard ? "standard" : "regular";
}

SimplexKind parse_simplex_kind(std::string_view text) {
    if (text == "standard") return SimplexKind::standard;
    if (text == "regular") return SimplexKind::regular;
    throw Error(ErrorKind::invalid_argument, "unknown simplex kind '" + std::string(text) + "'");
}

ExactScalar width_squared(int n, SimplexKind kind) {
    require_dimension(n);
    const std::int64_t m = n;
    ExactScalar standard = (n % 2 == 1) ? ExactScalar(4, m + 1) : ExactScalar(4 * (m + 1), m * (m + 2));
    if (kind == SimplexKind::standard) return standard;
    return standard / ExactScalar(2);
}

Vector center(int n) {
    require_dimension(n);
    const auto dim = static_cast<std::size_t>(n) + 1;
    return Vector(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ExactScalar circumdistance_squared(int n) {
    require_dimension(n);
    return ExactScalar(n, std::int64_t{n} + 1);
}

ExactScalar indistance_squared(int n) {
    require_dimension(n);
    const std::int64_t m = n;
    return ExactScalar(1, m * (m + 1));
}

ExactScalar inradius_squared(int n) { return indistance_squared(n) / ExactScalar(2); }

ExactScalar circumradius_squared(int n) { return circumdistance_squared(n) / ExactScalar(2); }

ExactScalar width_for_t(int n, int t) {
    require_low_count(n, t);
    const std::int64_t m = n;
    const std::int64_t k = t;
    return ExactScalar(m + 1, k * (m + 1 - k));
}

AlphaBeta alpha_beta(int n, int t) {
    require_low_count(n, t);
    const double m = n;
    const double k = t;
    const double alpha = -std::sqrt((m + 1 - k) / (k * (m + 1)));
    const double beta = -(k / (m + 1 - k)) * alpha;
    return {alpha, beta};
}

AlphaBetaSquared alpha_beta_squared(int n, int t) {
    require_low_count(n, t);
    const std::int64_t m = n;
    const std::int64_t k = t;
    return {ExactScalar(m + 1 - k, k * (m + 1)), ExactScalar(k, (m + 1 - k) * (m + 1))};
}

}  // namespace simplexwidth
