#include "simplexwidth/exact.hpp"

#include <cmath>

#include "simplexwidth/error.hpp"

namespace simplexwidth {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view digits) {
    std::string_view body = digits;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error(ErrorKind::invalid_argument, "malformed rational: '" + std::string(digits) + "'");
    }
    return cpp_int(std::string(digits));
}

}  // namespace

ExactScalar::ExactScalar(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw Error(ErrorKind::domain, "rational with zero denominator");
    }
    cpp_int num(numerator);
    cpp_int den(denominator);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = Rational(num, den);
}

ExactScalar ExactScalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return ExactScalar(Rational(parse_integer(text)));
    }
    cpp_int num = parse_integer(text.substr(0, slash));
    cpp_int den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw Error(ErrorKind::domain, "rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return ExactScalar(Rational(num, den));
}

std::string ExactScalar::numerator() const {
    return boost::multiprecision::numerator(value_).str();
}

std::string ExactScalar::denominator() const {
    return boost::multiprecision::denominator(value_).str();
}

std::string ExactScalar::str() const { return numerator() + "/" + denominator(); }

double ExactScalar::to_double() const { return value_.convert_to<double>(); }

double ExactScalar::sqrt() const {
    if (value_ < 0) {
        throw Error(ErrorKind::domain, "square root of a negative rational");
    }
    return std::sqrt(to_double());
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.value_ == 0) {
        throw Error(ErrorKind::domain, "division by zero");
    }
    return ExactScalar(value_ / o.value_);
}

}  // namespace simplexwidth
