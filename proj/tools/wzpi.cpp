#include "wzpi/corpus.hpp"
#include "wzpi/errors.hpp"
#include "wzpi/json_io.hpp"
#include "wzpi/numerics.hpp"
#include "wzpi/term_parser.hpp"
#include "wzpi/wz.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace wzpi;

namespace {

enum Exit { kOk = 0, kVerificationFailure = 1, kInputError = 2, kNonConvergence = 3 };

struct InputError : Error {
    using Error::Error;
};

struct Options {
    std::string format = "json";
    std::string pair = "builtin:pair1";
    std::string family = "g";
    std::string k = "0";
    int digits = 30;
    int demo_digits = 25;
    int terms = 5;
    std::string output;
    bool canonical = false;
};

bool text(const Options& o) { return o.format == "text"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::optional<long> precision_override() {
    const char* env = std::getenv("WZ_PRECISION_BITS");
    if (!env || !*env) return std::nullopt;
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (*end != '\0' || bits < BigFloat::min_precision)
        throw InputError("WZ_PRECISION_BITS must be an integer >= 64");
    return bits;
}

WZPair load(const Options& o) {
    try {
        return load_pair(resolve_pair(o.pair));
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

WZPair load_verified(const Options& o) {
    WZPair p = verify(load(o));
    if (!p.verified) throw NotClosedFormRatio("pair '" + p.name + "' does not satisfy the WZ relation");
    return p;
}

BigRational quarter_grid_k(const std::string& s) {
    BigRational k;
    try {
        k = parse_rational(s);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
    if (!is_integer(BigRational(k * 4))) throw InputError("--k must be a multiple of 1/4");
    return k;
}

int cmd_verify(const Options& o) {
    WZPair p = load(o);
    const WZReport r = verify_wz(p.F, p.G);
    p.verified = r.verified;
    std::optional<BoundaryReport> boundary;
    std::vector<IdentityRecord> ids;
    if (r.verified) {
        try {
            boundary = boundary_check(p, 0, 200);
        } catch (const BoundaryNonzero&) {
        }
        if (p.expected_constant) ids = derive_identities(p, 0, 30);
    }
    if (text(o)) {
        std::cout << "pair         " << p.name << "\n"
                  << "wz_verified  " << (r.verified ? "yes" : "no") << "\n"
                  << "certificate  " << to_string(r.certificate) << "\n"
                  << "residual     " << to_string(r.residual) << "\n";
        if (boundary) std::cout << "boundary     " << (boundary->pass ? "pass" : "fail") << "\n";
        for (const auto& id : ids)
            std::cout << id.label << ": |d| = " << to_decimal(id.verdict->abs_error, 3) << "\n";
    } else {
        emit(verification_report(p, r, boundary, ids));
    }
    return r.verified ? kOk : kVerificationFailure;
}

int cmd_certificate(const Options& o) {
    const WZPair p = load(o);
    const RatFunc2 c = certificate(p.F, p.G);
    if (text(o)) std::cout << to_string(c) << "\n";
    else emit(Json{{"pair", p.name}, {"certificate", to_string(c)}});
    return kOk;
}

int cmd_companion(const Options& o) {
    const WZPair p = load_verified(o);
    const TermSum H = companion_h(p);
    Json parts = Json::array();
    for (const auto& t : H.parts) parts.push_back(render_term(t));
    Json values = Json::array();
    for (long n = 0; n < o.terms; ++n) values.push_back(to_string(evaluate_exact(H, n, 0)));
    if (text(o)) {
        std::cout << "H(n,k) = " << parts[0].get<std::string>() << "\n       + " << parts[1].get<std::string>()
                  << "\n";
        for (long n = 0; n < o.terms; ++n)
            std::cout << "H(" << n << ",0) = " << values[n].get<std::string>() << "\n";
    } else {
        emit(Json{{"pair", p.name}, {"H", parts}, {"values_k0", values}});
    }
    return kOk;
}

int cmd_sum(const Options& o) {
    const BigRational k = quarter_grid_k(o.k);
    if (o.family != "g" && o.family != "h") throw InputError("--family must be g or h");
    if (o.digits < 1) throw InputError("--digits must be positive");
    const WZPair p = o.family == "h" ? load_verified(o) : load(o);
    const TermSum series = o.family == "h" ? companion_h(p) : TermSum{{p.G}};
    SumOptions opts;
    opts.precision_bits = precision_override();
    const SumResult s = sum_series(series, k, o.digits, opts);
    const std::string tag = p.expected_constant ? to_string(*p.expected_constant) : "";
    if (text(o)) {
        std::cout << "sum_n " << (o.family == "h" ? "H" : "G") << "(n, " << to_string(k)
                  << ") = " << to_decimal(s.value, o.digits) << (tag.empty() ? "" : "  [" + tag + "]")
                  << "\nterms " << s.terms_used << ", tail bound " << to_decimal(s.tail_bound, 3) << "\n";
    } else {
        Json j{{"pair", p.name}, {"family", o.family}, {"k", to_string(k)}};
        const Json sum = to_json(s, o.digits);
        for (const auto& [key, value] : sum.items()) j[key] = value;
        j["constant"] = tag.empty() ? Json(nullptr) : Json(tag);
        if (p.expected_constant) {
            const BigFloat err = abs(s.value - to_bigfloat(*p.expected_constant, s.precision_bits));
            j["abs_error"] = to_decimal(err, 3);
        }
        emit(j);
    }
    return kOk;
}

int cmd_carlson(const Options& o) {
    const WZPair p = load(o);
    const CarlsonResult c = carlson_constant(p, precision_override().value_or(256));
    const bool matches = !p.expected_constant || *p.expected_constant == c.exact;
    if (text(o)) {
        std::cout << "A = " << to_string(c.exact) << " = " << to_decimal(c.value, o.digits) << "\n"
                  << "G(0,k) after reflection: " << render_term(c.simplified) << "\n"
                  << "G(n,1/2) is ZERO for n in [1, " << c.tail.size() << "]\n";
    } else {
        emit(Json{{"pair", p.name},
                  {"constant", to_string(c.exact)},
                  {"value", to_decimal(c.value, o.digits)},
                  {"simplified", render_term(c.simplified)},
                  {"tail", "ZERO for n in [1, " + std::to_string(c.tail.size()) + "]"},
                  {"matches_expected", matches}});
    }
    return matches ? kOk : kVerificationFailure;
}

struct DemoRow {
    std::string label;
    std::string claimed;
    std::string computed;
    std::string delta;
    bool pass = false;
};

int cmd_demo(const Options& o) {
    if (o.demo_digits < 1) throw InputError("--digits must be positive");
    const int digits = o.demo_digits;
    std::vector<std::future<DemoRow>> jobs;
    for (const auto& printed : printed_identities()) {
        jobs.push_back(std::async(std::launch::async, [&printed, digits] {
            IdentityRecord r = to_record(printed);
            check_identity(r, digits);
            return DemoRow{r.label, to_string(r.claimed_constant), to_decimal(r.verdict->value, digits),
                           to_decimal(r.verdict->abs_error, 3), r.verdict->pass};
        }));
    }
    for (const auto& def : builtin_pairs()) {
        jobs.push_back(std::async(std::launch::async, [&def, digits] {
            const WZPair p = load_pair(def);
            const long prec = static_cast<long>(digits * 3.33) + 64;
            const CarlsonResult c = carlson_constant(p, prec);
            const BigFloat err = abs(c.value - to_bigfloat(*p.expected_constant, prec));
            return DemoRow{p.name + " Carlson A", to_string(*p.expected_constant),
                           to_decimal(c.value, digits), to_decimal(err, 3),
                           err < pow10(2 - digits, prec)};
        }));
    }
    std::vector<DemoRow> rows;
    for (auto& j : jobs) rows.push_back(j.get());

    bool all = true;
    for (const auto& r : rows) all = all && r.pass;
    if (text(o)) {
        std::printf("%-20s %-24s %-*s %-10s %s\n", "identity", "claimed", digits + 8, "computed", "|d|", "status");
        for (const auto& r : rows)
            std::printf("%-20s %-24s %-*s %-10s %s\n", r.label.c_str(), r.claimed.c_str(), digits + 8,
                        r.computed.c_str(), r.delta.c_str(), r.pass ? "PASS" : "FAIL");
    } else {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"label", r.label},
                               {"claimed", r.claimed},
                               {"computed", r.computed},
                               {"abs_error", r.delta},
                               {"pass", r.pass}});
        emit(Json{{"digits", digits}, {"rows", arr}, {"all_pass", all}});
    }
    return all ? kOk : kVerificationFailure;
}

int cmd_export(const Options& o) {
    PairDefinition def;
    try {
        def = resolve_pair(o.pair);
    } catch (const Error& e) {
        throw InputError(e.what());
    }
    Json j = to_json(def);
    if (o.canonical) {
        const WZPair p = load(o);
        j = Json{{"name", def.name}, {"F", to_json(p.F)}, {"G", to_json(p.G)}};
    }
    if (o.output.empty()) {
        emit(j);
        return kOk;
    }
    std::ofstream out(o.output);
    if (!out) throw InputError("cannot write '" + o.output + "'");
    out << j.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"WZ pair verification and pi-series evaluation"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));

    auto pair_opt = [&](CLI::App* sub) { sub->add_option("--pair", o.pair, "Pair file or builtin:<name>"); };
    auto* verify_cmd = app.add_subcommand("verify", "Check the WZ relation and report");
    pair_opt(verify_cmd);
    auto* cert_cmd = app.add_subcommand("certificate", "Print the reduced certificate C = G/F");
    pair_opt(cert_cmd);
    auto* comp_cmd = app.add_subcommand("companion", "Dump H(n,k) and its first exact values at k = 0");
    pair_opt(comp_cmd);
    comp_cmd->add_option("--terms", o.terms, "Number of H(n,0) values")->check(CLI::NonNegativeNumber);
    auto* sum_cmd = app.add_subcommand("sum", "Sum the G or H family at fixed k");
    pair_opt(sum_cmd);
    sum_cmd->add_option("--family", o.family, "g or h")->check(CLI::IsMember({"g", "h"}));
    sum_cmd->add_option("--k", o.k, "k on the quarter grid, e.g. 0, 1/4, 2");
    sum_cmd->add_option("--digits", o.digits, "Decimal digits");
    auto* carlson_cmd = app.add_subcommand("carlson", "Limit of G(0,k) as k -> 1/2");
    pair_opt(carlson_cmd);
    carlson_cmd->add_option("--digits", o.digits, "Decimal digits shown");
    auto* demo_cmd = app.add_subcommand("demo", "Table of all built-in identities and constants");
    demo_cmd->add_option("--digits", o.demo_digits, "Decimal digits");
    auto* export_cmd = app.add_subcommand("export", "Write a pair file");
    pair_opt(export_cmd);
    export_cmd->add_option("--output,-o", o.output, "Destination (stdout when omitted)");
    export_cmd->add_flag("--canonical", o.canonical, "Emit canonical term JSON instead of expressions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*verify_cmd) return cmd_verify(o);
        if (*cert_cmd) return cmd_certificate(o);
        if (*comp_cmd) return cmd_companion(o);
        if (*sum_cmd) return cmd_sum(o);
        if (*carlson_cmd) return cmd_carlson(o);
        if (*demo_cmd) return cmd_demo(o);
        if (*export_cmd) return cmd_export(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const RatioNotContracting& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNonConvergence;
    } catch (const TailNotVanishing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNonConvergence;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kOk;
}
