#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simplexwidth/exact.hpp"
#include "simplexwidth/geometry.hpp"

namespace simplexwidth {

/// A vector shifted by its coordinate mean. `energy` is the squared norm of
/// the shifted vector, i.e. the optimal 1-mean clustering cost of the
/// coordinates.
struct EnergyReport {
    double mean;
    Vector centered;
    double energy;
};

EnergyReport center_vector(const Vector& v);

/// Strict increase test used for floating point energies:
/// after - before > 1e-12 * max(1, before).
bool energy_strictly_increased(double before, double after) noexcept;

struct EnergyPush {
    EnergyReport before;
    EnergyReport after;
    bool increased;
};

/// Replaces coordinate i of v by new_value and reports both energies.
/// Requires that the move pushes the coordinate away from the mean: either
/// new_value > v_i >= mean, or new_value < v_i < mean.
EnergyPush energy_push(const Vector& v, std::size_t i, double new_value);

ExactScalar exact_energy(std::span<const ExactScalar> v);

struct ExactEnergyPush {
    ExactScalar before;
    ExactScalar after;
    bool increased;
};

/// Rational counterpart of energy_push; the comparison is exact.
ExactEnergyPush exact_energy_push(std::span<const ExactScalar> v, std::size_t i,
                                  const ExactScalar& new_value);

/// Coordinate i becomes alpha where z_i < 0 and beta where z_i >= 0.
Vector clamp_to_extremes(const Vector& z, double alpha, double beta);

}  // namespace simplexwidth
