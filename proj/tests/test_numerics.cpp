#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wzpi/corpus.hpp"
#include "wzpi/errors.hpp"
#include "wzpi/numerics.hpp"
#include "wzpi/term_parser.hpp"

#include <cstdio>
#include <filesystem>

using namespace wzpi;

namespace {

bool close(const BigFloat& a, const BigFloat& b, long exponent10) {
    return abs(a - b) < pow10(exponent10, std::max(a.precision(), b.precision()));
}

BigFloat dec(const char* s, long prec = 256) { return BigFloat::parse(s, prec); }

const WZPair& pair(int i) {
    static const WZPair p1 = verify(load_pair(builtin_pairs()[0]));
    static const WZPair p2 = verify(load_pair(builtin_pairs()[1]));
    return i == 1 ? p1 : p2;
}

}  // namespace

TEST_CASE("agm") {
    const long prec = 256;
    CHECK(close(agm(const_sqrt2(prec), BigFloat(1, prec), prec), dec("1.19814023473559220744"), -20));
    const BigFloat x = dec("2.75");
    CHECK(close(agm(x, x, prec), x, -70));
    CHECK(close(agm(BigFloat(1, prec), BigFloat(9, prec), prec), agm(BigFloat(5, prec), BigFloat(3, prec), prec), -70));
}

TEST_CASE("constants") {
    CHECK(to_decimal(const_pi(128), 21) == "3.14159265358979323846");
    CHECK(to_decimal(const_gamma_quarter(128), 10) == "3.625609908");
    CHECK(to_decimal(const_gamma_three_quarter(128), 10) == "1.225416702");
    CHECK(close(const_gamma_quarter(256) * const_gamma_three_quarter(256), const_pi(256) * const_sqrt2(256), -70));
}

TEST_CASE("precision ladder matches the Machin oracle") {
    for (int digits : {15, 30, 60}) {
        const long prec = static_cast<long>(digits * 3.33) + 16;
        const BigFloat oracle(oracle::machin_pi(digits + 10), prec + 64);
        CHECK(close(const_pi(prec), oracle, -digits));
        BigFloat g(prec);
        oracle::mpfr_gamma_of(g.get(), 1, 4);
        CHECK(close(const_gamma_quarter(prec), g, -digits));
    }
}

TEST_CASE("evaluate_numeric") {
    CHECK(to_decimal(evaluate_numeric(parse_term("gamma(n + 9/4)"), 0, 0, 128), 11) == "1.1330030963");
    const BigFloat g00 = evaluate_numeric(pair(1).G, 0, 0, 128);
    CHECK(abs(g00 - BigFloat(3, 128)) < pow(BigFloat(2, 128), -90));

    // (7/2) / pi^3 * cos(pi/4) * Gamma(1/4) * pi^(3/2) * Gamma(3/4)^2 / Gamma(5/4)
    const long prec = 192;
    const BigFloat pi = const_pi(prec), g14 = const_gamma_quarter(prec), g34 = const_gamma_three_quarter(prec);
    const BigFloat expected = BigFloat(BigRational(7, 2), prec) / pow(pi, 3) / const_sqrt2(prec) * g14 *
                              pi * sqrt(pi) * g34 * g34 / (g14 / BigFloat(4, prec));
    const BigFloat got = evaluate_numeric(pair(1).G, 0, BigRational(1, 4), prec);
    CHECK(got.sign() > 0);
    CHECK(close(got, expected, -50));
    CHECK_THROWS_AS(evaluate_numeric(pair(1).G, 0, BigRational(1, 3), prec), DomainError);
}

TEST_CASE("sum_series") {
    const SumResult s1 = sum_series(pair(1).G, 0, 30);
    CHECK(to_decimal(s1.value, 20) == "2.5464790894703253723");
    CHECK(s1.tail_bound < pow10(-30, s1.precision_bits));
    CHECK(s1.requested_digits == 30);

    const SumResult s2 = sum_series(pair(2).G, 0, 30);
    CHECK(to_decimal(s2.value, 9) == "3.24227788");

    // First-family sum at k = 1/4 with the printed prefactor sqrt(2)/8 and the G(0, 1/4) normalization removed.
    const SumResult q1 = sum_series(parse_term(printed_identities()[4].series), 0, 25);
    const BigFloat scaled = q1.value * const_sqrt2(q1.precision_bits) / BigFloat(8, q1.precision_bits);
    CHECK(to_decimal(scaled, 11) == "1.1803405990");

    SumOptions opts;
    opts.precision_bits = 400;
    CHECK(sum_series(pair(1).G, 0, 30, opts).precision_bits == 400);
}

TEST_CASE("sum_series rejects divergent series") {
    CHECK_THROWS_AS(sum_series(parse_term("2^n"), 0, 10), RatioNotContracting);
    CHECK_THROWS_AS(sum_series(parse_term("P(n+1)"), 0, 10), RatioNotContracting);
}

TEST_CASE("asymptotic ratio") {
    CHECK(asymptotic_ratio(pair(1).G, 0).value() == BigRational(1, 4));
    CHECK(asymptotic_ratio(pair(2).G, 0).value() == BigRational(1, 16));
    CHECK_FALSE(asymptotic_ratio(parse_term("gamma(n+1)"), 0).has_value());
}

TEST_CASE("direct evaluation agrees with the recurrence") {
    const long prec = 256;
    for (int i : {1, 2}) {
        const HyperTerm& G = pair(i).G;
        const BigRational k(1, 4);
        const auto q = shift_quotient(G, Var::N);
        BigFloat t = evaluate_numeric(G, 0, k, prec);
        for (long n = 0; n < 30; ++n) {
            t = t * BigFloat(evaluate(q.combined(), n, k), prec);
            CHECK(close(t, evaluate_numeric(G, n + 1, k, prec), -60));
        }
    }
}

TEST_CASE("G and H partial sums approach each other") {
    const long prec = 256;
    for (int i : {1, 2}) {
        const TermSum H = companion_h(pair(i));
        BigFloat sg(0, prec), sh(0, prec);
        for (long n = 0; n <= 40; ++n) {
            sg += evaluate_numeric(pair(i).G, n, 0, prec);
            for (const auto& part : H.parts) sh += evaluate_numeric(part, n, 0, prec);
        }
        CHECK(close(sg, sh, -15));
    }
}

TEST_CASE("Carlson constants") {
    const CarlsonResult c1 = carlson_constant(pair(1), 128);
    CHECK(to_string(c1.exact) == "8/pi");
    CHECK(to_decimal(c1.value, 11) == "2.5464790895");
    CHECK(c1.tail.size() == 50);
    const CarlsonResult c2 = carlson_constant(pair(2), 128);
    CHECK(to_string(c2.exact) == "32/pi^2");
    CHECK(to_decimal(c2.value, 8) == "3.2422779");

    // Without the cos factor, G(0, k) has a genuine pole at k = 1/2.
    PairDefinition d = builtin_pairs()[0];
    d.G.replace(d.G.find("cospi(k) * "), 11, "");
    CHECK_THROWS_AS(carlson_constant(load_pair(d), 128), ReflectionFailed);
}

TEST_CASE("constants cache round trip") {
    const auto path = std::filesystem::temp_directory_path() / "wzpi_constants_test.cache";
    const BigFloat pi = const_pi(300);
    const BigFloat g = const_gamma_quarter(300);
    save_constants_cache(path.string());
    CHECK(load_constants_cache(path.string()) >= 2);
    CHECK(const_pi(300) == pi);
    CHECK(const_gamma_quarter(300) == g);
    std::filesystem::remove(path);
}

TEST_CASE("hex round trip is exact") {
    const BigFloat pi = const_pi(200);
    CHECK(BigFloat::parse(to_hex(pi), 200, 16) == pi);
}

TEST_CASE("sum_series precision ladder is self-consistent") {
    for (int i : {1, 2}) {
        const SumResult s15 = sum_series(pair(i).G, BigRational(1, 4), 15);
        const SumResult s30 = sum_series(pair(i).G, BigRational(1, 4), 30);
        const SumResult s60 = sum_series(pair(i).G, BigRational(1, 4), 60);
        CHECK(close(s15.value, s60.value, -14));
        CHECK(close(s30.value, s60.value, -29));
        CHECK(s15.terms_used < s30.terms_used);
        CHECK(s30.terms_used < s60.terms_used);
    }
}

TEST_CASE("G and H families agree at k = 0 and k = 1/4") {
    for (int i : {1, 2}) {
        const TermSum H = companion_h(pair(i));
        for (const BigRational k : {BigRational(0), BigRational(1, 4)}) {
            const SumResult g = sum_series(pair(i).G, k, 40);
            const SumResult h = sum_series(H, k, 40);
            CHECK(close(g.value, h.value, -39));
        }
    }
}

TEST_CASE("Gamma(1/4) Gamma(3/4) = pi sqrt(2) to prec - 24 bits") {
    for (long prec : {128L, 512L, 2048L}) {
        BigFloat g34(prec + 64);
        oracle::mpfr_gamma_of(g34.get(), 3, 4);
        const BigFloat lhs = const_gamma_quarter(prec) * g34;
        const BigFloat rhs = const_pi(prec) * const_sqrt2(prec);
        CHECK(abs(lhs - rhs) < pow(BigFloat(2, prec), -(prec - 24)) * rhs);
    }
}
