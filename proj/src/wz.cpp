#include "wzpi/wz.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/numerics.hpp"

namespace wzpi {

namespace {

// G / F as a rational function, constants folded in.
RatFunc2 rational_ratio(const HyperTerm& F, const HyperTerm& G) {
    TermRatio r;
    try {
        r = term_ratio(G, F);
    } catch (const GammaMismatch& e) {
        throw NotClosedFormRatio(std::string("G/F is not a rational function: ") + e.what());
    }
    if (r.pi_half_pow != 0) throw NotClosedFormRatio("G/F carries a power of pi");
    return RatFunc2(r.ratio.num() * r.constant, r.ratio.den());
}

void require_verified(const WZPair& pair) {
    if (!pair.verified) throw DomainError("pair '" + pair.name + "' has not been verified");
}

}  // namespace

WZPair make_pair(std::string name, HyperTerm F, HyperTerm G, std::optional<ClosedForm> expected_constant) {
    WZPair p{std::move(name), std::move(F), std::move(G), std::move(expected_constant), std::nullopt, false};
    try {
        p.certificate = ratfunc_reduce(rational_ratio(p.F, p.G));
    } catch (const NotClosedFormRatio&) {
    }
    return p;
}

WZReport verify_wz(const HyperTerm& F, const HyperTerm& G) {
    const RatFunc2 C = rational_ratio(F, G);
    const RatFunc2 qn = shift_quotient(F, Var::N).combined();
    const RatFunc2 qk = shift_quotient(F, Var::K).combined();
    const RatFunc2 one(Poly2(1));
    const RatFunc2 lhs = qn - one;
    const RatFunc2 rhs = shift(C, 0, 1) * qk - C;
    WZReport report;
    report.residual = (lhs - rhs).num();
    report.verified = report.residual.is_zero();
    report.certificate = ratfunc_reduce(C);
    return report;
}

WZPair verify(WZPair pair) {
    const WZReport r = verify_wz(pair.F, pair.G);
    pair.certificate = r.certificate;
    pair.verified = r.verified;
    return pair;
}

RatFunc2 certificate(const HyperTerm& F, const HyperTerm& G) { return ratfunc_reduce(rational_ratio(F, G)); }

TermSum companion_h(const WZPair& pair) {
    require_verified(pair);
    return TermSum{{substitute_affine(pair.F, {1, 1, 0}), substitute_affine(pair.G, {0, 1, 0})}};
}

bool finite_telescope_check(const WZPair& pair, long N, long k) {
    require_verified(pair);
    const BigRational k0(k), k1(k + 1);
    BigRational lhs = 0;
    for (long n = 0; n <= N; ++n) lhs += evaluate_exact(pair.G, n, k1) - evaluate_exact(pair.G, n, k0);
    return lhs == evaluate_exact(pair.F, N + 1, k0) - evaluate_exact(pair.F, 0, k0);
}

BoundaryReport boundary_check(const WZPair& pair, const BigRational& k, long N_probe) {
    BoundaryReport report;
    Poly2 num = pair.F.rat_pref().num();
    while (auto q = divide_exact(num, Poly2::n())) {
        num = std::move(*q);
        ++report.n_factor_power;
    }
    if (report.n_factor_power > 0 || pair.F.c_rat() == 0) {
        report.f_vanishes_at_zero = true;
    } else {
        const TermValue v = evaluate_closed_form(pair.F, 0, k);
        report.f_vanishes_at_zero = v.value.rational == 0;
    }
    if (!report.f_vanishes_at_zero)
        throw BoundaryNonzero("F(0, " + to_string(k) + ") != 0; the telescoping sum keeps a boundary term");

    constexpr long precision = 128;
    for (long N : {50L, 100L, 200L}) {
        if (N >= N_probe) break;
        report.probes.emplace_back(N, abs(evaluate_numeric(pair.F, N, k, precision)));
    }
    report.probes.emplace_back(N_probe, abs(evaluate_numeric(pair.F, N_probe, k, precision)));
    report.decreasing = true;
    for (std::size_t i = 1; i < report.probes.size(); ++i)
        if (!(report.probes[i].second < report.probes[i - 1].second)) report.decreasing = false;
    report.below_threshold = report.probes.back().second < pow10(-20, precision);
    report.pass = report.decreasing && report.below_threshold;
    return report;
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::GFamily: return "G_FAMILY";
        case Provenance::HFamily: return "H_FAMILY";
        case Provenance::Zeilberger: return "ZEILBERGER";
    }
    return "?";
}

void check_identity(IdentityRecord& record, int digits) {
    const SumResult s = sum_series(record.series, record.fixed_k, digits);
    const long precision = s.precision_bits;
    NumericVerdict v;
    v.value = to_bigfloat(record.prefactor, precision) * s.value;
    v.abs_error = abs(v.value - to_bigfloat(record.claimed_constant, precision));
    v.digits = std::max(digits, 1);
    v.pass = v.abs_error < pow10(2 - v.digits, precision);
    record.verdict = std::move(v);
}

namespace {

// Irrational part (sqrt(2), pi, Gamma(3/4) powers) of the first nonzero term of the series.
ClosedForm leading_irrational_part(const TermSum& s, const BigRational& k) {
    for (long n = 0; n < 4; ++n) {
        std::optional<ClosedForm> basis;
        BigRational total = 0;
        bool consistent = true;
        for (const HyperTerm& t : s.parts) {
            TermValue v;
            try {
                v = evaluate_closed_form(t, n, k);
            } catch (const Error&) {
                consistent = false;
                break;
            }
            if (!v.extra_powers.empty()) consistent = false;
            if (v.value.rational == 0) continue;
            const ClosedForm b(1, v.value.sqrt2_pow, v.value.pi_half_pow, v.value.gamma34_pow);
            if (basis && !(*basis == b)) consistent = false;
            basis = b;
            total += v.value.rational;
        }
        if (!consistent) return ClosedForm(1);
        if (basis && total != 0) return *basis;
    }
    return ClosedForm(1);
}

}  // namespace

std::vector<IdentityRecord> derive_identities(const WZPair& pair, const BigRational& k, int digits) {
    require_verified(pair);
    if (!pair.expected_constant) throw DomainError("pair '" + pair.name + "' has no expected constant");
    std::vector<IdentityRecord> out;
    const TermSum g_family{{pair.G}};
    const TermSum h_family = companion_h(pair);
    for (const auto& [family, series] : {std::pair{Provenance::GFamily, g_family},
                                         std::pair{Provenance::HFamily, h_family}}) {
        IdentityRecord r;
        const ClosedForm scale = leading_irrational_part(series, k);
        r.label = pair.name + (family == Provenance::GFamily ? " G" : " H") + "-family, k = " + to_string(k);
        r.series = series;
        r.fixed_k = k;
        r.prefactor = ClosedForm(1) / scale;
        r.claimed_constant = *pair.expected_constant / scale;
        r.provenance = family == Provenance::HFamily && k == 0 ? Provenance::Zeilberger : family;
        if (digits > 0) check_identity(r, digits);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace wzpi
