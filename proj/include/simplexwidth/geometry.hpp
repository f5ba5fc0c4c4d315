#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace simplexwidth {

/// Absolute tolerance on the squared norm of a unit direction and on its
/// coordinate sum when it is tagged as lying in the sum-zero subspace.
inline constexpr double kUnitTolerance = 1e-12;

/// Dense coordinate tuple in R^d. Always nonempty and finite.
class Vector {
public:
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(std::size_t dim);
    static Vector ones(std::size_t dim);
    /// The i-th standard unit vector (0-based).
    static Vector basis(std::size_t dim, std::size_t i);

    std::size_t dim() const noexcept { return coords_.size(); }
    std::span<const double> coords() const noexcept { return coords_; }
    const std::vector<double>& values() const noexcept { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    double sum() const noexcept;
    double squared_norm() const noexcept;
    double norm() const noexcept;

    Vector operator-() const;
    Vector operator+(const Vector& other) const;
    Vector operator-(const Vector& other) const;
    Vector operator*(double s) const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<double> coords_;
};

inline Vector operator*(double s, const Vector& v) { return v * s; }

double dot(const Vector& a, const Vector& b);
double squared_distance(const Vector& a, const Vector& b);
double distance(const Vector& a, const Vector& b);

/// Unit vector, optionally certified to be orthogonal to the all-ones vector.
class Direction {
public:
    /// Validates `vec` as given; it is not renormalized.
    explicit Direction(Vector vec, bool sum_zero = false);

    /// Projects out the all-ones component (when requested) and rescales to
    /// unit length. Throws when nothing is left to normalize.
    static Direction normalized(Vector vec, bool project_to_sum_zero = false);

    const Vector& vec() const noexcept { return vec_; }
    bool sum_zero() const noexcept { return sum_zero_; }
    std::size_t dim() const noexcept { return vec_.dim(); }
    double operator[](std::size_t i) const { return vec_[i]; }

    Direction operator-() const;

private:
    Vector vec_;
    bool sum_zero_;
};

/// Finite list of points sharing one ambient dimension. Duplicates allowed.
class PointSet {
public:
    explicit PointSet(std::vector<Vector> points);

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dim() const noexcept { return points_.front().dim(); }
    const Vector& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Vector>& points() const noexcept { return points_; }

    PointSet scaled(double s) const;
    PointSet translated(const Vector& offset) const;

private:
    std::vector<Vector> points_;
};

/// The n+1 standard basis vectors of R^{n+1}.
PointSet standard_simplex_vertices(int n);

/// Standard simplex scaled by 1/sqrt(2): unit edge length.
PointSet regular_simplex_vertices(int n);

/// max <u,p> - min <u,p> over the points of P.
double projection_width(const Direction& u, const PointSet& points);

}  // namespace simplexwidth
