#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wzpi/corpus.hpp"
#include "wzpi/errors.hpp"
#include "wzpi/json_io.hpp"
#include "wzpi/term_parser.hpp"

#include <filesystem>
#include <fstream>

using namespace wzpi;

namespace {

ClosedForm value_at(const HyperTerm& t, long n, const BigRational& k) {
    const TermValue v = evaluate_closed_form(t, n, k);
    REQUIRE(v.extra_powers.empty());
    return v.value;
}

// Sum of closed forms sharing one irrational basis.
ClosedForm value_at(const TermSum& s, long n, const BigRational& k) {
    ClosedForm total(0);
    bool first = true;
    for (const auto& part : s.parts) {
        const ClosedForm v = value_at(part, n, k);
        if (v.rational == 0) continue;
        if (first || total.rational == 0) {
            total = v;
            first = false;
            continue;
        }
        const ClosedForm ratio = v / total;
        REQUIRE(ratio.is_rational());
        total.rational *= 1 + ratio.rational;
    }
    return total;
}

const WZPair& pair_named(const std::string& name) {
    static const WZPair p1 = verify(load_pair(resolve_pair("builtin:pair1")));
    static const WZPair p2 = verify(load_pair(resolve_pair("builtin:pair2")));
    return name == "pair1" ? p1 : p2;
}

}  // namespace

TEST_CASE("builtin pairs resolve and verify") {
    CHECK(builtin_pairs().size() == 2);
    CHECK(resolve_pair("builtin:pair2").expected_constant == "32/pi^2");
    CHECK(pair_named("pair1").verified);
    CHECK(pair_named("pair2").verified);
    CHECK_THROWS_AS(resolve_pair("builtin:pair9"), Error);
    CHECK_THROWS_AS(resolve_pair("/nonexistent/pair.json"), Error);
}

TEST_CASE("binomial and Gamma forms agree on the lattice") {
    for (int i = 0; i < 2; ++i) {
        const WZPair gamma_form = load_pair(builtin_pairs()[i]);
        const WZPair binomial_form = load_pair(builtin_binomial_pairs()[i]);
        int compared = 0;
        for (long n = 0; n <= 6; ++n)
            for (long k = 0; k <= 6; ++k)
                for (const auto& [a, b] : {std::pair{gamma_form.G, binomial_form.G}, std::pair{gamma_form.F, binomial_form.F}}) {
                    BigRational x, y;
                    try {
                        x = evaluate_exact(a, n, k);
                        y = evaluate_exact(b, n, k);
                    } catch (const PoleAtPoint&) {
                        continue;  // binomial form undefined (zero binomial in a denominator)
                    }
                    ++compared;
                    CHECK(x == y);
                }
        CHECK(compared >= 60);
    }
}

TEST_CASE("printed series are term-by-term multiples of the pair families") {
    for (const auto& p : printed_identities()) {
        CAPTURE(p.label);
        const WZPair& pair = pair_named(p.pair);
        const TermSum family = p.family == Provenance::GFamily ? TermSum{{pair.G}} : companion_h(pair);
        const HyperTerm printed = parse_term(p.series);
        const ClosedForm prefactor = parse_constant(p.prefactor);
        const ClosedForm constant = parse_constant(p.constant);
        for (long n = 0; n <= 10; ++n) {
            const ClosedForm lhs = prefactor * value_at(printed, n, 0) / constant;
            const ClosedForm rhs = value_at(family, n, p.k) / *pair.expected_constant;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("printed identities hold numerically") {
    for (const auto& p : printed_identities()) {
        IdentityRecord r = to_record(p);
        check_identity(r, 30);
        CAPTURE(p.label);
        CHECK(r.verdict->pass);
    }
}

TEST_CASE("HyperTerm JSON round trip") {
    for (const auto& d : builtin_pairs())
        for (const auto& expr : {d.F, d.G}) {
            const HyperTerm t = parse_term(expr);
            const Json j = to_json(t);
            CHECK(hyperterm_from_json(Json::parse(j.dump())) == t);
        }
    const Json g = to_json(parse_term("gamma(2*n+1) * gamma(n+1/2) * gamma(n+k+1) * gamma(k-1/3)"));
    std::vector<Json> args;
    for (const auto& e : g["gammas"]) args.push_back(e["arg"]);
    REQUIRE(args.size() == 4);
    CHECK(args[0] == Json::array({0, 1, "-1/3"}));
    CHECK(args[1] == Json::array({1, 0, "1/2"}));
    CHECK(args[2] == Json::array({1, 1, "1"}));
    CHECK(args[3] == Json::array({2, 0, "1"}));
    CHECK(to_json(parse_term("3/4"))["c_rat"] == "3/4");
}

TEST_CASE("pair files round trip with identical verification") {
    const auto dir = std::filesystem::temp_directory_path();
    for (const auto& d : builtin_pairs()) {
        const auto path = dir / ("wzpi_test_" + d.name + ".json");
        {
            std::ofstream out(path);
            out << to_json(d).dump(2);
        }
        const PairDefinition back = resolve_pair(path.string());
        CHECK(back.name == d.name);
        CHECK(back.F == d.F);
        CHECK(back.G == d.G);
        const WZPair a = load_pair(d), b = load_pair(back);
        const WZReport ra = verify_wz(a.F, a.G), rb = verify_wz(b.F, b.G);
        CHECK(ra.verified == rb.verified);
        CHECK(ra.certificate == rb.certificate);
        CHECK(ra.residual == rb.residual);
        std::filesystem::remove(path);
    }
    CHECK_THROWS_AS(pair_definition_from_json("{\"name\": \"x\"}"), Error);
    CHECK_THROWS_AS(pair_definition_from_json("not json"), Error);
}

TEST_CASE("verification report shape") {
    const WZPair& p = pair_named("pair1");
    const WZReport r = verify_wz(p.F, p.G);
    const Json j = verification_report(p, r, boundary_check(p, 0, 200), derive_identities(p, 0, 20));
    CHECK(j["pair"] == "pair1");
    CHECK(j["wz_verified"] == true);
    CHECK(j["residual"] == "0");
    CHECK(j["boundary"]["pass"] == true);
    CHECK(j["identities"].size() == 2);
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"pair", "wz_verified", "certificate", "residual", "boundary", "identities"});
}
