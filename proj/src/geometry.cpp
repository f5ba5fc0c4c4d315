#include "simplexwidth/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "simplexwidth/error.hpp"

namespace simplexwidth {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorKind::dimension_mismatch,
                    std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                        std::to_string(b) + " differ");
    }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw Error(ErrorKind::invalid_dimension, "vector must have at least one coordinate");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) {
            throw Error(ErrorKind::invalid_argument, "vector coordinates must be finite");
        }
    }
}

Vector::Vector(std::initializer_list<double> coords) : Vector(std::vector<double>(coords)) {}

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector Vector::ones(std::size_t dim) { return Vector(std::vector<double>(dim, 1.0)); }

Vector Vector::basis(std::size_t dim, std::size_t i) {
    if (i >= dim) {
        throw Error(ErrorKind::domain, "basis index out of range");
    }
    std::vector<double> c(dim, 0.0);
    c[i] = 1.0;
    return Vector(std::move(c));
}

double Vector::sum() const noexcept { return std::accumulate(coords_.begin(), coords_.end(), 0.0); }

double Vector::squared_norm() const noexcept {
    return std::inner_product(coords_.begin(), coords_.end(), coords_.begin(), 0.0);
}

double Vector::norm() const noexcept { return std::sqrt(squared_norm()); }

Vector Vector::operator-() const { return *this * -1.0; }

Vector Vector::operator+(const Vector& other) const {
    require_same_dim(dim(), other.dim(), "vector addition");
    std::vector<double> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return Vector(std::move(c));
}

Vector Vector::operator-(const Vector& other) const {
    require_same_dim(dim(), other.dim(), "vector subtraction");
    std::vector<double> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
    return Vector(std::move(c));
}

Vector Vector::operator*(double s) const {
    std::vector<double> c(coords_);
    for (double& x : c) x *= s;
    return Vector(std::move(c));
}

double dot(const Vector& a, const Vector& b) {
    require_same_dim(a.dim(), b.dim(), "dot product");
    return std::inner_product(a.values().begin(), a.values().end(), b.values().begin(), 0.0);
}

double squared_distance(const Vector& a, const Vector& b) {
    require_same_dim(a.dim(), b.dim(), "distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double distance(const Vector& a, const Vector& b) { return std::sqrt(squared_distance(a, b)); }

Direction::Direction(Vector vec, bool sum_zero) : vec_(std::move(vec)), sum_zero_(sum_zero) {
    if (std::abs(vec_.squared_norm() - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::invalid_argument, "direction must have unit norm");
    }
    if (sum_zero_ && std::abs(vec_.sum()) > kUnitTolerance) {
        throw Error(ErrorKind::invalid_argument, "direction tagged sum-zero has nonzero coordinate sum");
    }
}

Direction Direction::normalized(Vector vec, bool project_to_sum_zero) {
    std::vector<double> c = vec.values();
    if (project_to_sum_zero) {
        const double mean = vec.sum() / static_cast<double>(c.size());
        for (double& x : c) x -= mean;
    }
    double norm = 0.0;
    for (double x : c) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) {
        throw Error(ErrorKind::invalid_argument, "cannot normalize a zero vector");
    }
    for (double& x : c) x /= norm;
    if (project_to_sum_zero) {
        // One more centering pass removes the residual left by the division.
        const double mean = std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
        for (double& x : c) x -= mean;
    }
    return Direction(Vector(std::move(c)), project_to_sum_zero);
}

Direction Direction::operator-() const { return Direction(-vec_, sum_zero_); }

PointSet::PointSet(std::vector<Vector> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw Error(ErrorKind::empty_input, "point set must be nonempty");
    }
    for (const Vector& p : points_) {
        require_same_dim(p.dim(), points_.front().dim(), "point set");
    }
}

PointSet PointSet::scaled(double s) const {
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const Vector& p : points_) out.push_back(p * s);
    return PointSet(std::move(out));
}

PointSet PointSet::translated(const Vector& offset) const {
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const Vector& p : points_) out.push_back(p + offset);
    return PointSet(std::move(out));
}

PointSet standard_simplex_vertices(int n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_dimension, "simplex dimension must be at least 1, got " + std::to_string(n));
    }
    const auto dim = static_cast<std::size_t>(n) + 1;
    std::vector<Vector> pts;
    pts.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) pts.push_back(Vector::basis(dim, i));
    return PointSet(std::move(pts));
}

PointSet regular_simplex_vertices(int n) {
    return standard_simplex_vertices(n).scaled(1.0 / std::sqrt(2.0));
}

double projection_width(const Direction& u, const PointSet& points) {
    require_same_dim(u.dim(), points.dim(), "projection width");
    double lo = dot(u.vec(), points[0]);
    double hi = lo;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double d = dot(u.vec(), points[i]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

}  // namespace simplexwidth
