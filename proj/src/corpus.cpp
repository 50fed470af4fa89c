#include "wzpi/corpus.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/json_io.hpp"
#include "wzpi/term_parser.hpp"

#include <fstream>
#include <sstream>

namespace wzpi {

namespace {

const char* const kPair1Gamma =
    "(-1)^n * cospi(k) * gamma(2*n-k+1/2) * gamma(n+1/2)^3 * gamma(k+1/2)^2"
    " * gamma(n+k+1)^-1 * gamma(2*n+1)^-2";
const char* const kPair2Gamma =
    "cospi(k) * gamma(2*n-k+1/2) * gamma(n+1/2)^6 * gamma(k+1/2)^3"
    " * gamma(n+k+1)^-2 * gamma(2*n+1)^-3";
const char* const kPair1Binom =
    "(-1)^n * (-1)^k * 2^(-10*n-2*k) * binom(2*k,k)^2 * binom(2*n,n)^2 * binom(4*n-2*k,2*n-k)"
    " * binom(2*n,k)^-1 * binom(n+k,n)^-1";
const char* const kPair2Binom =
    "(-1)^k * 2^(-16*n-4*k) * binom(2*k,k)^3 * binom(2*n,n)^4 * binom(4*n-2*k,2*n-k)"
    " * binom(2*n,k)^-1 * binom(n+k,n)^-2";

}  // namespace

const std::vector<PairDefinition>& builtin_pairs() {
    static const std::vector<PairDefinition> pairs{
        {"pair1", std::string("64 * pi^-3 * P(n^2) * Q(4*n-2*k-1) * ") + kPair1Gamma,
         std::string("pi^-3 * P(20*n+2*k+3) * ") + kPair1Gamma, "8/pi"},
        {"pair2", std::string("512 * pi^-5 * P(n^3) * Q(4*n-2*k-1) * ") + kPair2Gamma,
         std::string("pi^-5 * P(120*n^2+84*n*k+34*n+10*k+3) * ") + kPair2Gamma, "32/pi^2"},
    };
    return pairs;
}

const std::vector<PairDefinition>& builtin_binomial_pairs() {
    static const std::vector<PairDefinition> pairs{
        {"pair1-binomial", std::string("64 * P(n^2) * Q(4*n-2*k-1) * ") + kPair1Binom,
         std::string("P(20*n+2*k+3) * ") + kPair1Binom, "8/pi"},
        {"pair2-binomial", std::string("512 * P(n^3) * Q(4*n-2*k-1) * ") + kPair2Binom,
         std::string("P(120*n^2+84*n*k+34*n+10*k+3) * ") + kPair2Binom, "32/pi^2"},
    };
    return pairs;
}

PairDefinition resolve_pair(const std::string& source) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        for (const auto* list : {&builtin_pairs(), &builtin_binomial_pairs()})
            for (const auto& d : *list)
                if (d.name == name) return d;
        throw Error("unknown builtin pair '" + name + "'");
    }
    std::ifstream in(source);
    if (!in) throw Error("cannot read pair file '" + source + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return pair_definition_from_json(buffer.str());
}

WZPair load_pair(const PairDefinition& def) {
    return make_pair(def.name, parse_term(def.F), parse_term(def.G), parse_constant(def.expected_constant));
}

const std::vector<PrintedIdentity>& printed_identities() {
    static const std::vector<PrintedIdentity> ids{
        {"pair1 G, k=0", "pair1", Provenance::GFamily, 0, "1",
         "(-1)^n * binom(4*n,2*n) * binom(2*n,n)^2 * 2^(-10*n) * P(20*n+3)", "8/pi"},
        {"pair1 H, k=0", "pair1", Provenance::Zeilberger, 0, "1/2",
         "binom(2*n,n)^3 * 2^(-12*n) * P(42*n+5)", "8/pi"},
        {"pair2 G, k=0", "pair2", Provenance::GFamily, 0, "1",
         "binom(4*n,2*n) * binom(2*n,n)^4 * 2^(-16*n) * P(120*n^2+34*n+3)", "32/pi^2"},
        {"pair2 H, k=0", "pair2", Provenance::Zeilberger, 0, "1/4",
         "(-1)^n * binom(2*n,n)^5 * 2^(-20*n) * P(820*n^2+180*n+13)", "32/pi^2"},
        {"pair1 G, k=1/4", "pair1", Provenance::GFamily, BigRational(1, 4), "sqrt(2)/8",
         "(-1)^n * poch(1/2,n) * poch(1/4,2*n) * fact(n)^-2 * poch(1/4,n)^-1 * 2^(-4*n)"
         " * P(40*n+7) * Q(4*n+1)",
         "sqrt(pi)/gamma(3/4)^2"},
        {"pair1 H, k=1/4", "pair1", Provenance::HFamily, BigRational(1, 4), "3*sqrt(2)/8",
         "poch(1/2,2*n)^2 * poch(1/2,n) * fact(n)^-2 * poch(1/4,2*n)^-1 * poch(1/4,n)^-1 * 2^(-8*n)"
         " * P(112*n^2+88*n+11) * Q((8*n+1)*(8*n+5))",
         "sqrt(pi)/gamma(3/4)^2"},
        {"pair2 G, k=1/4", "pair2", Provenance::GFamily, BigRational(1, 4), "1/8",
         "poch(1/2,n)^3 * poch(1/4,2*n) * fact(n)^-3 * poch(1/4,n)^-2 * 2^(-6*n)"
         " * P(240*n^2+110*n+11) * Q((4*n+1)^2)",
         "pi/gamma(3/4)^4"},
        {"pair2 H, k=1/4", "pair2", Provenance::HFamily, BigRational(1, 4), "1/8",
         "(-1)^n * poch(1/2,2*n)^3 * poch(1/2,n)^3 * fact(n)^-3 * poch(1/4,2*n)^-2 * poch(1/4,n)^-2"
         " * 2^(-12*n) * P(26240*n^4+41184*n^3+21448*n^2+4170*n+279) * Q((8*n+1)^2*(8*n+5)^2)",
         "pi/gamma(3/4)^4"},
    };
    return ids;
}

IdentityRecord to_record(const PrintedIdentity& p) {
    IdentityRecord r;
    r.label = p.label;
    r.series = TermSum{{parse_term(p.series)}};
    r.fixed_k = p.k;
    r.prefactor = parse_constant(p.prefactor);
    r.claimed_constant = parse_constant(p.constant);
    r.provenance = p.family;
    return r;
}

}  // namespace wzpi
