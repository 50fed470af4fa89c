// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include "oracles.hpp"

#include "wzpi/corpus.hpp"
#include "wzpi/errors.hpp"
#include "wzpi/numerics.hpp"
#include "wzpi/term_parser.hpp"
#include "wzpi/wz.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace wzpi;

namespace {

constexpr long kOraclePrec = 600;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "failed: ";
            else detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BigFloat oracle_pi() { return BigFloat(oracle::machin_pi(170), kOraclePrec); }

BigFloat oracle_gamma34() {
    BigFloat g(kOraclePrec);
    oracle::mpfr_gamma_of(g.get(), 3, 4);
    return g;
}

// Expected sums: 8/pi, 32/pi^2, sqrt(pi)/Gamma(3/4)^2, pi/Gamma(3/4)^4.
BigFloat oracle_constant(const std::string& tag) {
    const BigFloat pi = oracle_pi();
    const BigFloat g = oracle_gamma34();
    if (tag == "8/pi") return BigFloat(8, kOraclePrec) / pi;
    if (tag == "32/pi^2") return BigFloat(32, kOraclePrec) / (pi * pi);
    if (tag == "sqrt(pi)/gamma(3/4)^2") return sqrt(pi) / (g * g);
    if (tag == "pi/gamma(3/4)^4") return pi / pow(g, 4);
    throw Error("no oracle for " + tag);
}

BigFloat tolerance(long exponent) { return pow10(exponent, kOraclePrec); }

WZPair pair_named(const std::string& name) { return verify(load_pair(resolve_pair("builtin:" + name))); }

const std::vector<std::string> kPairs{"pair1", "pair2"};
const char* const kConstants[] = {"8/pi", "32/pi^2"};

// 1
void symbolic_verification(Outcome& o) {
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        const PairDefinition def = resolve_pair("builtin:" + kPairs[i]);
        const WZPair p = load_pair(def);
        const auto t0 = std::chrono::steady_clock::now();
        const WZReport r = verify_wz(p.F, p.G);
        const double dt = seconds_since(t0);
        o.check(r.verified && r.residual.is_zero(), kPairs[i] + " not verified");
        o.check(dt < 1.0, kPairs[i] + " took " + std::to_string(dt) + " s");

        // Bump the constant coefficient 3 of G's polynomial factor to 4.
        PairDefinition bad = def;
        const std::string from = i == 0 ? "P(20*n+2*k+3)" : "P(120*n^2+84*n*k+34*n+10*k+3)";
        const std::string to = i == 0 ? "P(20*n+2*k+4)" : "P(120*n^2+84*n*k+34*n+10*k+4)";
        bad.G.replace(bad.G.find(from), from.size(), to);
        const WZPair q = load_pair(bad);
        const WZReport rq = verify_wz(q.F, q.G);
        o.check(!rq.verified && !rq.residual.is_zero(), kPairs[i] + " perturbation still verifies");
        o.detail << kPairs[i] << " " << dt * 1000 << " ms; ";
    }
}

// 2
void certificates(Outcome& o) {
    const RatFunc2 hand[] = {
        RatFunc2(parse_poly("(20*n+2*k+3)*(4*n-2*k-1)"), parse_poly("64*n^2")),
        RatFunc2(parse_poly("(120*n^2+84*n*k+34*n+10*k+3)*(4*n-2*k-1)"), parse_poly("512*n^3")),
    };
    const auto terms = oracle::corpus_terms();  // [0..3] = F1, G1, F2, G2 (binomial)
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        const WZPair p = pair_named(kPairs[i]);
        const RatFunc2 c = certificate(p.F, p.G);
        o.check(ratfunc_equal(c, hand[i]), kPairs[i] + " certificate " + to_string(c));
        int points = 0;
        for (long n = 3; n <= 7; ++n)
            for (long k = 0; k <= 4; ++k) {
                const auto F = terms[2 * i].eval(n, k);
                const auto G = terms[2 * i + 1].eval(n, k);
                if (!F || !G || *F == 0) continue;
                ++points;
                o.check(*G / *F == evaluate(c, n, k),
                        kPairs[i] + " lattice mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        o.check(points == 25, kPairs[i] + " only " + std::to_string(points) + " lattice points");
        o.detail << kPairs[i] << " C = " << to_string(c) << "; ";
    }
}

// 3
void telescoping(Outcome& o) {
    int checks = 0;
    for (const auto& name : kPairs) {
        const WZPair p = pair_named(name);
        for (long N = 1; N <= 8; ++N)
            for (long k = 0; k <= 4; ++k) {
                ++checks;
                o.check(finite_telescope_check(p, N, k),
                        name + " N=" + std::to_string(N) + " k=" + std::to_string(k));
            }
    }
    o.detail << checks << " exact checks";
}

// 4
void companion_terms(Outcome& o) {
    const auto terms = oracle::corpus_terms();
    struct Case {
        std::string pair;
        long n;
        BigRational expected;
        BigRational prefactor;
        std::size_t printed;  // index into corpus_terms
    };
    const Case cases[] = {{"pair1", 0, BigRational(5, 2), BigRational(1, 2), 5},
                          {"pair1", 1, BigRational(47, 1024), BigRational(1, 2), 5},
                          {"pair2", 0, BigRational(13, 4), BigRational(1, 4), 7}};
    for (const auto& c : cases) {
        const TermSum H = companion_h(pair_named(c.pair));
        const BigRational h = evaluate_exact(H, c.n, 0);
        const BigRational printed = c.prefactor * *terms[c.printed].eval(c.n, 0);
        o.check(h == c.expected, c.pair + " H(" + std::to_string(c.n) + ",0) = " + to_string(h));
        o.check(printed == c.expected, c.pair + " printed term = " + to_string(printed));
        o.detail << c.pair << " H(" << c.n << ",0)=" << to_string(h) << " ";
    }
}

// 5
void constants_at_zero(Outcome& o) {
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        const WZPair p = pair_named(kPairs[i]);
        const BigFloat A = oracle_constant(kConstants[i]);
        const TermSum families[] = {TermSum{{p.G}}, companion_h(p)};
        const char* names[] = {"G", "H"};
        for (int f = 0; f < 2; ++f) {
            const auto t0 = std::chrono::steady_clock::now();
            const SumResult s = sum_series(families[f], 0, 50);
            const double dt = seconds_since(t0);
            const BigFloat err = abs(s.value - A);
            o.check(err < tolerance(-48), kPairs[i] + " " + names[f] + " error " + to_decimal(err, 3));
            o.check(dt < 5.0, kPairs[i] + " " + names[f] + " took " + std::to_string(dt) + " s");
            o.detail << kPairs[i] << " " << names[f] << " |d|=" << to_decimal(err, 2) << "; ";
        }
    }
}

// 6
void printed_quarter_identities(Outcome& o) {
    for (const auto& pi : printed_identities()) {
        if (pi.k != BigRational(1, 4)) continue;
        IdentityRecord r = to_record(pi);
        const SumResult s = sum_series(r.series, r.fixed_k, 30);
        const BigFloat value = to_bigfloat(r.prefactor, kOraclePrec) * s.value;
        const BigFloat err = abs(value - oracle_constant(pi.constant));
        o.check(err < tolerance(-23), pi.label + " error " + to_decimal(err, 3));
        o.detail << pi.label << " |d|=" << to_decimal(err, 2) << "; ";
    }
}

// 7
void carlson(Outcome& o) {
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        const WZPair p = pair_named(kPairs[i]);
        const CarlsonResult c = carlson_constant(p, 256);
        o.check(to_string(c.exact) == kConstants[i], kPairs[i] + " exact " + to_string(c.exact));
        const BigFloat err = abs(c.value - oracle_constant(kConstants[i]));
        o.check(err < tolerance(-30), kPairs[i] + " error " + to_decimal(err, 3));
        const auto tail = pole_analysis(p.G, BigRational(1, 2), 1, 50);
        bool all_zero = tail.size() == 50;
        for (const auto& pc : tail) all_zero = all_zero && pc.kind == PoleClass::Kind::Zero;
        o.check(all_zero, kPairs[i] + " tail not all ZERO");
        o.detail << kPairs[i] << " A=" << to_string(c.exact) << " |d|=" << to_decimal(err, 2) << "; ";
    }
}

// 8
void k_independence(Outcome& o) {
    const BigRational ks[] = {0, 1, 2, BigRational(1, 4)};
    for (std::size_t i = 0; i < kPairs.size(); ++i) {
        const WZPair p = pair_named(kPairs[i]);
        const BigFloat A = oracle_constant(kConstants[i]);
        for (const auto& k : ks) {
            const BigFloat err = abs(sum_series(p.G, k, 22).value - A);
            o.check(err < tolerance(-20), kPairs[i] + " k=" + to_string(k) + " error " + to_decimal(err, 3));
        }
    }
    o.detail << "k in {0, 1, 2, 1/4} on both pairs";
}

// 9
void constant_engine(Outcome& o) {
    const long prec = 400;
    const BigFloat pi = const_pi(prec);
    const BigFloat err_pi = abs(pi - oracle_pi());
    o.check(err_pi < tolerance(-100), "pi error " + to_decimal(err_pi, 3));

    BigFloat g34(prec);
    oracle::mpfr_gamma_of(g34.get(), 3, 4);
    const BigFloat product = const_gamma_quarter(prec) * g34;
    const BigFloat target = oracle_pi() * sqrt(BigFloat(2, kOraclePrec));
    const BigFloat err_g = abs(product - target);
    o.check(err_g < tolerance(-100), "Gamma(1/4)Gamma(3/4) error " + to_decimal(err_g, 3));
    const BigFloat err_g34 = abs(const_gamma_three_quarter(prec) - g34);
    o.check(err_g34 < tolerance(-100), "Gamma(3/4) error " + to_decimal(err_g34, 3));
    o.detail << "pi |d|=" << to_decimal(err_pi, 2) << "; Gamma product |d|=" << to_decimal(err_g, 2);
}

// 10
void oracle_equivalence(Outcome& o) {
    int compared = 0;
    for (const auto& term : oracle::corpus_terms()) {
        const HyperTerm t = parse_term(term.expr);
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= 8; ++k) {
                const auto expected = term.eval(n, k);
                if (!expected) continue;
                ++compared;
                BigRational got;
                try {
                    got = evaluate_exact(t, n, k);
                } catch (const Error& e) {
                    o.check(false, term.name + " threw at (" + std::to_string(n) + "," + std::to_string(k) +
                                       "): " + e.what());
                    continue;
                }
                o.check(got == *expected,
                        term.name + " at (" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
    }
    o.detail << compared << " points";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"symbolic WZ verification", symbolic_verification},
        {"certificates", certificates},
        {"exact telescoping", telescoping},
        {"companion terms", companion_terms},
        {"constants at k = 0 (50 digits)", constants_at_zero},
        {"Pochhammer identities at k = 1/4 (25 digits)", printed_quarter_identities},
        {"Carlson constants", carlson},
        {"k-independence (20 digits)", k_independence},
        {"constant engine (100 digits)", constant_engine},
        {"oracle equivalence", oracle_equivalence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failures;
        std::string detail = o.detail.str();
        while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
        std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
