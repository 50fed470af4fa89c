#pragma once

#include "wzpi/closed_form.hpp"
#include "wzpi/ratfunc2.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wzpi {

/// a*n + b*k + c with integer a, b and rational c.
struct LinForm {
    long a = 0;
    long b = 0;
    BigRational c = 0;

    BigRational at(const BigRational& n0, const BigRational& k0) const { return a * n0 + b * k0 + c; }
    Poly2 to_poly() const { return Poly2::linear(a, b, c); }
    bool is_constant() const { return a == 0 && b == 0; }

    friend bool operator==(const LinForm&, const LinForm&) = default;
    friend bool operator<(const LinForm& x, const LinForm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
};

std::string to_string(const LinForm& l);

/// cos(pi*(u*n + v*k))^m with u, v in {0, 1}.
struct CosFactor {
    int m = 0;
    int u = 0;
    int v = 0;
    friend bool operator==(const CosFactor&, const CosFactor&) = default;
};

/// base^(a*n + b*k); the exponent's constant part is always zero.
struct ExpoFactor {
    BigRational base;
    LinForm exponent;
    friend bool operator==(const ExpoFactor&, const ExpoFactor&) = default;
};

/// Proper hypergeometric term in Gamma form:
///
///   c_rat * pi^(pi_half_pow/2) * cos(pi(u n + v k))^m * prod base^(a n + b k)
///         * rat_pref(n, k) * prod Gamma(a n + b k + c)^e
///
/// The constructor brings every term to one canonical shape, so structural equality is meaningful:
///  - rat_pref's num and den are primitive integer polynomials with positive leading coefficients
///    (scalars live in c_rat);
///  - expo factors have positive bases except a single -1, one entry per base, sorted by base;
///  - a cos factor with v = 0 is rewritten as (-1)^(u m n);
///  - Gamma factors are merged per argument; constant arguments on the half-integer grid are
///    evaluated into c_rat and pi_half_pow.
class HyperTerm {
public:
    using Gammas = std::map<LinForm, int>;

    HyperTerm() = default;
    HyperTerm(BigRational c_rat, int pi_half_pow, CosFactor cos, std::vector<ExpoFactor> expo,
              RatFunc2 rat_pref, Gammas gammas);

    static HyperTerm constant(const BigRational& c);
    static HyperTerm pi_power(int half_pow);
    static HyperTerm gamma(const LinForm& arg, int exp = 1);
    static HyperTerm cos_pi(int u, int v, int m = 1);
    /// base^(exponent); a nonzero constant part of the exponent is folded into c_rat.
    static HyperTerm power(const BigRational& base, const LinForm& exponent);
    static HyperTerm rational(const RatFunc2& f);

    const BigRational& c_rat() const { return c_rat_; }
    int pi_half_pow() const { return pi_half_pow_; }
    const CosFactor& cos() const { return cos_; }
    const std::vector<ExpoFactor>& expo_factors() const { return expo_; }
    const RatFunc2& rat_pref() const { return rat_pref_; }
    const Gammas& gammas() const { return gammas_; }

    HyperTerm pow(int e) const;

    friend HyperTerm operator*(const HyperTerm& x, const HyperTerm& y);
    friend bool operator==(const HyperTerm&, const HyperTerm&) = default;

private:
    void canonicalize();

    BigRational c_rat_ = 1;
    int pi_half_pow_ = 0;
    CosFactor cos_;
    std::vector<ExpoFactor> expo_;
    RatFunc2 rat_pref_ = RatFunc2(Poly2(1));
    Gammas gammas_;
};

/// Formal sum of hypergeometric terms, summed termwise; never merged into a single term.
struct TermSum {
    std::vector<HyperTerm> parts;
};

enum class Var { N, K };

/// t(shifted) / t = sign * base_multiplier * quotient.
struct ShiftQuotient {
    RatFunc2 quotient;
    int sign = 1;
    BigRational base_multiplier = 1;

    RatFunc2 combined() const;
};

ShiftQuotient shift_quotient(const HyperTerm& t, Var var);

/// t1 / t2 = constant * pi^(pi_half_pow/2) * ratio.
struct TermRatio {
    RatFunc2 ratio;
    BigRational constant = 1;
    int pi_half_pow = 0;
};

/// Throws GammaMismatch unless the cos, power and Gamma structure cancels. Gamma arguments that differ
/// by an integer in their constant part are reconciled through the recurrence.
TermRatio term_ratio(const HyperTerm& t1, const HyperTerm& t2);

/// n -> n + p, k -> q*n + k + r, applied simultaneously.
struct AffineMap {
    long p = 0;
    long q = 0;
    BigRational r = 0;
};

/// Throws DomainError when the map would produce a non-rational power or a shifted cos argument
/// (r not compatible with the term's k-exponents).
HyperTerm substitute_affine(const HyperTerm& t, const AffineMap& map);

/// The term in k alone obtained by fixing n = n0.
HyperTerm restrict_n(const HyperTerm& t, long n0);

/// Value at (n0, k0) in closed form, for k0 on the quarter grid.
///
/// Extra powers base^(p/q) that have no closed form are returned separately. Throws PoleAtPoint at
/// poles and at removable singularities (value only defined as a limit), DomainError off the grid.
struct TermValue {
    ClosedForm value;
    std::vector<std::pair<BigRational, BigRational>> extra_powers;  // (base, exponent)
};
TermValue evaluate_closed_form(const HyperTerm& t, long n0, const BigRational& k0);

/// Exact rational value at an integer n0 and k0 with denominator 1 or 2.
/// Throws IrrationalResidue when the value is not rational and PoleAtPoint at poles.
BigRational evaluate_exact(const HyperTerm& t, long n0, const BigRational& k0);

/// Replaces cos(pi k) * Gamma(1/2 - k) * Gamma(1/2 + k) by pi as often as possible.
/// Returns the input unchanged when nothing cancels, unless require_progress (then NoReflectionPair).
HyperTerm reflection_simplify(const HyperTerm& t, bool require_progress = false);

/// Zero/pole behaviour of k -> t(n0, k) at k0, n0 held fixed.
struct PoleClass {
    enum class Kind { Zero, Finite, Pole };
    enum class Source { None, Gamma, Cos, RationalPrefactor };

    long n = 0;
    Kind kind = Kind::Finite;
    Source source = Source::None;
    /// Offending Gamma argument or cos argument; empty for rational-prefactor roots and plain finite values.
    std::optional<LinForm> witness;
};

/// Classification at k0 for each n in [n_first, n_last]. A cancelled zero/pole pair is Finite with a witness.
std::vector<PoleClass> pole_analysis(const HyperTerm& t, const BigRational& k0, long n_first,
                                     long n_last);

const char* to_string(PoleClass::Kind kind);

/// Sum of evaluate_exact over the parts.
BigRational evaluate_exact(const TermSum& s, long n0, const BigRational& k0);

}  // namespace wzpi
