#pragma once

#include "wzpi/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace wzpi {

/// Exponent pair of n^deg_n * k^deg_k.
struct Monomial {
    int deg_n = 0;
    int deg_k = 0;

    int total() const { return deg_n + deg_k; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex with n > k, largest first: the map's first entry is the leading term.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.deg_n > b.deg_n;
    }
};

/// Bivariate polynomial in n and k over the rationals. Zero coefficients are never stored.
class Poly2 {
public:
    using Terms = std::map<Monomial, BigRational, GradedLexGreater>;

    Poly2() = default;
    Poly2(const BigRational& c);  // NOLINT(google-explicit-constructor)
    Poly2(long c) : Poly2(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly2 monomial(const BigRational& c, int deg_n, int deg_k);
    static Poly2 n() { return monomial(1, 1, 0); }
    static Poly2 k() { return monomial(1, 0, 1); }
    /// a*n + b*k + c
    static Poly2 linear(const BigRational& a, const BigRational& b, const BigRational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_n() const;
    int degree_k() const;

    /// Requires a nonzero polynomial.
    Monomial leading_monomial() const { return terms_.begin()->first; }
    const BigRational& leading_coefficient() const { return terms_.begin()->second; }
    BigRational coefficient(Monomial m) const;
    /// Constant term.
    BigRational constant() const { return coefficient({0, 0}); }

    Poly2 pow(unsigned e) const;

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
    Poly2& operator*=(const BigRational& c);

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator-(const Poly2& a);
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(Poly2 a, const BigRational& c) { return a *= c; }
    friend Poly2 operator*(const BigRational& c, Poly2 a) { return a *= c; }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

private:
    void add_term(Monomial m, const BigRational& c);

    Terms terms_;
};

/// Exact value of p at (n0, k0).
BigRational poly_eval(const Poly2& p, const BigRational& n0, const BigRational& k0);

/// p(n_image, k_image): simultaneous substitution of both variables.
Poly2 substitute(const Poly2& p, const Poly2& n_image, const Poly2& k_image);

/// p(n + dn, k + dk)
Poly2 shift(const Poly2& p, const BigRational& dn, const BigRational& dk);

/// Graded-lex rendering with explicit signs, e.g. "20*n + 2*k + 3".
std::string to_string(const Poly2& p);

/// Positive rational c with p / c having coprime integer coefficients; 1 for the zero polynomial.
BigRational content(const Poly2& p);

/// p / content(p), sign chosen so the leading coefficient is positive.
Poly2 primitive_part(const Poly2& p);

/// Quotient q with p = q * d, or nullopt if d does not divide p.
std::optional<Poly2> divide_exact(const Poly2& p, const Poly2& d);

/// Greatest common divisor, normalized by primitive_part. gcd(0, 0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Multiplicity of k0 as a root of the univariate polynomial p(n0, k); -1 if p(n0, k) is identically zero.
int root_multiplicity_in_k(const Poly2& p, const BigRational& n0, const BigRational& k0);

}  // namespace wzpi
