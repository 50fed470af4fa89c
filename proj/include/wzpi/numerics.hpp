#pragma once

#include "wzpi/bigfloat.hpp"
#include "wzpi/closed_form.hpp"
#include "wzpi/hyperterm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzpi {

struct WZPair;

/// Arithmetic-geometric mean of a, b > 0.
BigFloat agm(const BigFloat& a, const BigFloat& b, long precision);

/// pi by the Gauss-Legendre iteration.
BigFloat const_pi(long precision);
BigFloat const_sqrt2(long precision);
/// Gamma(1/4) = sqrt((2 pi)^(3/2) / agm(sqrt 2, 1)).
BigFloat const_gamma_quarter(long precision);
/// Gamma(3/4) = pi sqrt(2) / Gamma(1/4).
BigFloat const_gamma_three_quarter(long precision);

/// Writes every cached constant as "name bits hex" lines; load_constants_cache reads them back exactly.
void save_constants_cache(const std::string& path);
/// Returns the number of entries loaded.
int load_constants_cache(const std::string& path);

BigFloat to_bigfloat(const ClosedForm& c, long precision);

/// t(n0, k0) for k0 on the quarter grid. Throws PoleAtPoint or DomainError.
BigFloat evaluate_numeric(const HyperTerm& t, long n0, const BigRational& k0, long precision);

struct SumResult {
    BigFloat value;
    long terms_used = 0;
    BigFloat tail_bound;
    int requested_digits = 0;
    long precision_bits = 0;
};

struct SumOptions {
    /// Overrides the derived working precision when set.
    std::optional<long> precision_bits;
    long max_terms = 200000;
};

/// Sum over n >= 0 of the series at fixed k0, to `digits` decimal digits.
///
/// Terms follow the n-shift quotient; the sum stops at the first N where the geometric tail bound
/// |t_N| rho / (1 - rho) falls below 10^-digits / 2, rho being the largest |quotient| over
/// [N, N + 16] and its limit at infinity. Throws RatioNotContracting when that never happens.
SumResult sum_series(const TermSum& series, const BigRational& k0, int digits, const SumOptions& options = {});
SumResult sum_series(const HyperTerm& term, const BigRational& k0, int digits, const SumOptions& options = {});

/// lim |t(n+1)/t(n)| as n -> infinity at fixed k0; nullopt when the quotient grows without bound.
std::optional<BigRational> asymptotic_ratio(const HyperTerm& t, const BigRational& k0);

struct CarlsonResult {
    ClosedForm exact;
    BigFloat value;
    HyperTerm simplified;            // G(0, k) after reflection
    std::vector<PoleClass> tail;     // G(n, 1/2), n in [1, 50]
};

/// A = lim_{k -> 1/2} G(0, k), taken through reflection, after checking that every G(n, 1/2), n >= 1,
/// vanishes. Throws ReflectionFailed or TailNotVanishing.
CarlsonResult carlson_constant(const WZPair& pair, long precision);

}  // namespace wzpi
