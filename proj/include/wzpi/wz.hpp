#pragma once

#include "wzpi/bigfloat.hpp"
#include "wzpi/closed_form.hpp"
#include "wzpi/hyperterm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzpi {

/// Candidate WZ pair (F, G) with F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k).
struct WZPair {
    std::string name;
    HyperTerm F;
    HyperTerm G;
    std::optional<ClosedForm> expected_constant;
    /// C with G = C F; present iff G/F is a rational function.
    std::optional<RatFunc2> certificate;
    bool verified = false;
};

/// Builds the pair and fills the certificate when G/F is rational. verified stays false.
WZPair make_pair(std::string name, HyperTerm F, HyperTerm G,
                 std::optional<ClosedForm> expected_constant = std::nullopt);

struct WZReport {
    bool verified = false;
    RatFunc2 certificate;   // reduced
    Poly2 residual;         // numerator of lhs - rhs; zero iff verified
};

/// Checks qFn - 1 = C(n, k+1) qFk - C(n, k) as an identity of rational functions, where qFn, qFk are
/// F's shift quotients and C = G/F. Throws NotClosedFormRatio when G/F is not rational.
WZReport verify_wz(const HyperTerm& F, const HyperTerm& G);

/// Runs verify_wz and records the outcome on the pair.
WZPair verify(WZPair pair);

/// Reduced C with G = C F. Throws NotClosedFormRatio.
RatFunc2 certificate(const HyperTerm& F, const HyperTerm& G);

/// H(n, k) = F(n+1, n+k) + G(n, n+k) as a two-term sum. Requires a verified pair.
TermSum companion_h(const WZPair& pair);

/// sum_{n=0}^{N} [G(n,k+1) - G(n,k)] == F(N+1,k) - F(0,k), exactly.
bool finite_telescope_check(const WZPair& pair, long N, long k);

struct BoundaryReport {
    /// Power of n dividing F's rational prefactor numerator (0 when F(0,k) = 0 came from evaluation).
    int n_factor_power = 0;
    bool f_vanishes_at_zero = false;
    std::vector<std::pair<long, BigFloat>> probes;  // (N, |F(N,k)|)
    bool decreasing = false;
    bool below_threshold = false;  // |F(N_probe, k)| < 1e-20
    bool pass = false;
};

/// Hypotheses of the telescoping argument: F(0,k) = 0 and F(N,k) -> 0, probed at N in {50, 100, 200}
/// up to N_probe. Throws BoundaryNonzero when F(0,k) != 0.
BoundaryReport boundary_check(const WZPair& pair, const BigRational& k, long N_probe);

enum class Provenance { GFamily, HFamily, Zeilberger };
const char* to_string(Provenance p);

struct NumericVerdict {
    BigFloat value;      // prefactor * sum
    BigFloat abs_error;  // |value - claimed constant|
    int digits = 1;      // requested digits, >= 1
    bool pass = false;   // abs_error < 10^(2 - digits)
};

/// prefactor * sum_{n>=0} series(n, fixed_k) = claimed_constant
struct IdentityRecord {
    std::string label;
    TermSum series;
    BigRational fixed_k = 0;
    ClosedForm prefactor;
    ClosedForm claimed_constant;
    Provenance provenance = Provenance::GFamily;
    std::optional<NumericVerdict> verdict;
};

/// Sums the series and fills the record's verdict.
void check_identity(IdentityRecord& record, int digits);

/// G-family and H-family records at k. The prefactor removes the irrational part of the first term,
/// so for k = 1/4 the claimed constant is a rational multiple of sqrt(pi)/gamma(3/4)^2 (or similar).
/// Requires a verified pair with an expected constant. Verdicts are filled when digits > 0.
std::vector<IdentityRecord> derive_identities(const WZPair& pair, const BigRational& k, int digits = 0);

}  // namespace wzpi
