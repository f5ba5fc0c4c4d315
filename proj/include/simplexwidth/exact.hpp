#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace simplexwidth {

using Rational = boost::multiprecision::cpp_rational;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Squared widths and radii live here; square roots are only
/// taken when a value leaves the library as a double.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(std::int64_t numerator, std::int64_t denominator = 1);
    explicit ExactScalar(Rational value) : value_(std::move(value)) {}

    /// Accepts "p/q" or a bare integer "p".
    static ExactScalar parse(std::string_view text);

    const Rational& value() const noexcept { return value_; }
    std::string numerator() const;
    std::string denominator() const;
    /// Always "p/q", including "q = 1".
    std::string str() const;

    double to_double() const;
    double sqrt() const;

    ExactScalar operator+(const ExactScalar& o) const { return ExactScalar(value_ + o.value_); }
    ExactScalar operator-(const ExactScalar& o) const { return ExactScalar(value_ - o.value_); }
    ExactScalar operator*(const ExactScalar& o) const { return ExactScalar(value_ * o.value_); }
    ExactScalar operator/(const ExactScalar& o) const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational value_{0};
};

}  // namespace simplexwidth
