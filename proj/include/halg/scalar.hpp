#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace halg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Coefficient field of an algebra. Two realizations are used throughout:
// exact Rational (all identity checking) and double (root/Binet work).
template <typename S>
concept ScalarField = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    S{0};
    S{1};
};

inline bool approx_equal(double a, double b, double abs_tol) {
    return std::fabs(a - b) <= abs_tol;
}

std::string scalar_to_string(const Rational& r);  // "p" or "p/q"
std::string scalar_to_string(double v);

// Accepts "123", "-4/7" and plain decimals like "2.5" (converted exactly).
Rational parse_rational(std::string_view text);

// Exact value of the double (every finite double is rational).
Rational rational_from_double(double v);

}  // namespace halg
