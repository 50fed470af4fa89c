#pragma once

#include "wzpi/rational.hpp"

#include <string>
#include <string_view>

namespace wzpi {

/// rational * sqrt(2)^sqrt2_pow * pi^(pi_half_pow/2) * Gamma(3/4)^gamma34_pow
///
/// Gamma(1/4) is rewritten through Gamma(1/4) Gamma(3/4) = pi sqrt(2), so every constant reachable from
/// quarter-grid Gamma values has exactly one representation. sqrt2_pow is kept in {0, 1}.
struct ClosedForm {
    BigRational rational = 1;
    int sqrt2_pow = 0;
    int pi_half_pow = 0;
    int gamma34_pow = 0;

    ClosedForm() = default;
    ClosedForm(BigRational r, int sqrt2 = 0, int pi_half = 0, int gamma34 = 0);

    static ClosedForm pi() { return {1, 0, 2, 0}; }
    static ClosedForm sqrt_pi() { return {1, 0, 1, 0}; }
    static ClosedForm sqrt2() { return {1, 1, 0, 0}; }
    static ClosedForm gamma_three_quarters() { return {1, 0, 0, 1}; }
    static ClosedForm gamma_quarter() { return {1, 1, 2, -1}; }

    bool is_rational() const { return sqrt2_pow == 0 && pi_half_pow == 0 && gamma34_pow == 0; }
    /// Same value with the rational and sqrt(2) parts set to 1.
    ClosedForm transcendental_part() const { return {1, 0, pi_half_pow, gamma34_pow}; }

    ClosedForm pow(int e) const;

    friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator/(const ClosedForm& a, const ClosedForm& b);
    friend bool operator==(const ClosedForm& a, const ClosedForm& b) = default;
};

/// Canonical text such as "8/pi", "32/pi^2", "sqrt(pi)/gamma(3/4)^2", "3*sqrt(2)/8".
std::string to_string(const ClosedForm& c);

/// Gamma(x) for x with denominator 1, 2 or 4 (x not a nonpositive integer); DomainError otherwise.
ClosedForm gamma_closed_form(const BigRational& x);

/// Parses products and quotients of integers, rationals, pi, sqrt(pi), sqrt(2), gamma(1/4),
/// gamma(3/4) and half-integer gamma values, with integer powers and parentheses.
/// Throws SyntaxError or DomainError.
ClosedForm parse_constant(std::string_view text);

}  // namespace wzpi
