#pragma once

#include "wzpi/poly2.hpp"

#include <string>

namespace wzpi {

/// num / den over Q(n, k).
///
/// Kept in canonical scaling: integer coefficients with no common factor across num and den,
/// and the leading coefficient of den (graded-lex) positive. The zero function is 0/1.
/// No polynomial GCD is taken implicitly; see ratfunc_reduce.
class RatFunc2 {
public:
    RatFunc2() : num_(0), den_(1) {}
    RatFunc2(Poly2 num);  // NOLINT(google-explicit-constructor)
    /// Throws DomainError if den is the zero polynomial.
    RatFunc2(Poly2 num, Poly2 den);

    const Poly2& num() const { return num_; }
    const Poly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc2 inverse() const;

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b);
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b);

    /// Structural equality of the canonical representation. Use ratfunc_equal for equality as functions.
    friend bool operator==(const RatFunc2& a, const RatFunc2& b) = default;

private:
    Poly2 num_;
    Poly2 den_;
};

/// a == b as rational functions, by cross-multiplication.
bool ratfunc_equal(const RatFunc2& a, const RatFunc2& b);

/// Equal rational function in lowest terms.
RatFunc2 ratfunc_reduce(const RatFunc2& a);

/// Exact value at (n0, k0); throws PoleAtPoint if the denominator vanishes there.
BigRational evaluate(const RatFunc2& f, const BigRational& n0, const BigRational& k0);

/// f(n_image, k_image)
RatFunc2 substitute(const RatFunc2& f, const Poly2& n_image, const Poly2& k_image);

/// f(n + dn, k + dk)
RatFunc2 shift(const RatFunc2& f, const BigRational& dn, const BigRational& dk);

/// "(num)/(den)", or just the numerator when den is 1.
std::string to_string(const RatFunc2& f);

}  // namespace wzpi
