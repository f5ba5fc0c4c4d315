#include "simplexwidth/energy.hpp"

#include <algorithm>
#include <string>

#include "simplexwidth/error.hpp"

namespace simplexwidth {

namespace {

void require_index(std::size_t i, std::size_t dim) {
    if (i >= dim) {
        throw Error(ErrorKind::domain,
                    "coordinate index " + std::to_string(i) + " out of range for dimension " +
                        std::to_string(dim));
    }
}

[[noreturn]] void hypothesis_violated() {
    throw Error(ErrorKind::precondition,
                "energy push requires new_value > v_i >= mean or new_value < v_i < mean");
}

}  // namespace

EnergyReport center_vector(const Vector& v) {
    const double mean = v.sum() / static_cast<double>(v.dim());
    std::vector<double> c = v.values();
    double energy = 0.0;
    for (double& x : c) {
        x -= mean;
        energy += x * x;
    }
    return {mean, Vector(std::move(c)), energy};
}

bool energy_strictly_increased(double before, double after) noexcept {
    return after - before > 1e-12 * std::max(1.0, before);
}

EnergyPush energy_push(const Vector& v, std::size_t i, double new_value) {
    require_index(i, v.dim());
    EnergyReport before = center_vector(v);
    const double vi = v[i];
    const bool upward = new_value > vi && vi >= before.mean;
    const bool downward = new_value < vi && vi < before.mean;
    if (!upward && !downward) hypothesis_violated();

    std::vector<double> u = v.values();
    u[i] = new_value;
    EnergyReport after = center_vector(Vector(std::move(u)));
    const bool increased = energy_strictly_increased(before.energy, after.energy);
    return {std::move(before), std::move(after), increased};
}

ExactScalar exact_energy(std::span<const ExactScalar> v) {
    if (v.empty()) {
        throw Error(ErrorKind::invalid_dimension, "vector must have at least one coordinate");
    }
    Rational sum = 0;
    for (const ExactScalar& x : v) sum += x.value();
    const Rational mean = sum / static_cast<long long>(v.size());
    Rational energy = 0;
    for (const ExactScalar& x : v) {
        const Rational d = x.value() - mean;
        energy += d * d;
    }
    return ExactScalar(energy);
}

ExactEnergyPush exact_energy_push(std::span<const ExactScalar> v, std::size_t i,
                                  const ExactScalar& new_value) {
    require_index(i, v.size());
    Rational sum = 0;
    for (const ExactScalar& x : v) sum += x.value();
    const ExactScalar mean(sum / static_cast<long long>(v.size()));
    const ExactScalar& vi = v[i];
    const bool upward = new_value > vi && vi >= mean;
    const bool downward = new_value < vi && vi < mean;
    if (!upward && !downward) hypothesis_violated();

    std::vector<ExactScalar> u(v.begin(), v.end());
    u[i] = new_value;
    ExactScalar before = exact_energy(v);
    ExactScalar after = exact_energy(u);
    const bool increased = after > before;
    return {std::move(before), std::move(after), increased};
}

Vector clamp_to_extremes(const Vector& z, double alpha, double beta) {
    std::vector<double> c(z.dim());
    for (std::size_t i = 0; i < z.dim(); ++i) c[i] = z[i] < 0.0 ? alpha : beta;
    return Vector(std::move(c));
}

}  // namespace simplexwidth
