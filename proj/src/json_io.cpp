#include "wzpi/json_io.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/term_parser.hpp"

#include <algorithm>

namespace wzpi {

namespace {

std::string rat_string(const BigRational& r) { return to_string(r); }

BigRational rat_from(const Json& j) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (!j.is_string()) throw Error("expected a rational string");
    return parse_rational(j.get<std::string>());
}

long int_from(const Json& j) {
    if (!j.is_number_integer()) throw Error("expected an integer");
    return j.get<long>();
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

Json to_json(const LinForm& l) { return Json::array({l.a, l.b, rat_string(l.c)}); }

LinForm linform_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw Error("linear form must be [a, b, \"c\"]");
    return LinForm{int_from(j[0]), int_from(j[1]), rat_from(j[2])};
}

Json to_json(const HyperTerm& t) {
    Json j;
    j["c_rat"] = rat_string(t.c_rat());
    j["pi_half_pow"] = t.pi_half_pow();
    j["cos_exp"] = Json{{"m", t.cos().m}, {"u", t.cos().u}, {"v", t.cos().v}};
    Json expo = Json::array();
    for (const auto& e : t.expo_factors())
        expo.push_back(Json{{"base", rat_string(e.base)}, {"exponent", to_json(e.exponent)}});
    j["expo_factors"] = expo;
    j["rat_pref"] = Json{{"num", to_string(t.rat_pref().num())}, {"den", to_string(t.rat_pref().den())}};
    Json gammas = Json::array();
    for (const auto& [arg, e] : t.gammas())  // std::map keeps (a, b, c) order
        gammas.push_back(Json{{"arg", to_json(arg)}, {"exp", e}});
    j["gammas"] = gammas;
    return j;
}

HyperTerm hyperterm_from_json(const Json& j) {
    const Json& cj = field(j, "cos_exp");
    CosFactor cos{static_cast<int>(int_from(field(cj, "m"))), static_cast<int>(int_from(field(cj, "u"))),
                  static_cast<int>(int_from(field(cj, "v")))};
    std::vector<ExpoFactor> expo;
    for (const auto& e : field(j, "expo_factors"))
        expo.push_back({rat_from(field(e, "base")), linform_from_json(field(e, "exponent"))});
    const Json& rp = field(j, "rat_pref");
    RatFunc2 pref(parse_poly(field(rp, "num").get<std::string>()), parse_poly(field(rp, "den").get<std::string>()));
    HyperTerm::Gammas gammas;
    for (const auto& g : field(j, "gammas"))
        gammas[linform_from_json(field(g, "arg"))] += static_cast<int>(int_from(field(g, "exp")));
    return HyperTerm(rat_from(field(j, "c_rat")), static_cast<int>(int_from(field(j, "pi_half_pow"))), cos,
                     std::move(expo), std::move(pref), std::move(gammas));
}

Json to_json(const PairDefinition& d) {
    return Json{{"name", d.name}, {"F", d.F}, {"G", d.G}, {"expected_constant", d.expected_constant}};
}

PairDefinition pair_definition_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("invalid pair file: ") + e.what());
    }
    auto str = [&](const char* name) {
        const Json& v = field(j, name);
        if (!v.is_string()) throw Error(std::string("field '") + name + "' must be a string");
        return v.get<std::string>();
    };
    return PairDefinition{str("name"), str("F"), str("G"), str("expected_constant")};
}

Json to_json(const BoundaryReport& b) {
    Json probes = Json::array();
    for (const auto& [N, v] : b.probes) probes.push_back(Json{{"N", N}, {"abs_F", to_decimal(v, 6)}});
    return Json{{"f_vanishes_at_zero", b.f_vanishes_at_zero},
                {"n_factor_power", b.n_factor_power},
                {"probes", probes},
                {"decreasing", b.decreasing},
                {"below_threshold", b.below_threshold},
                {"pass", b.pass}};
}

Json to_json(const IdentityRecord& r) {
    Json series = Json::array();
    for (const auto& p : r.series.parts) series.push_back(render_term(p));
    Json j{{"label", r.label},
           {"provenance", to_string(r.provenance)},
           {"k", rat_string(r.fixed_k)},
           {"prefactor", to_string(r.prefactor)},
           {"series", series},
           {"claimed_constant", to_string(r.claimed_constant)}};
    if (r.verdict) {
        j["computed"] = to_decimal(r.verdict->value, r.verdict->digits);
        j["abs_error"] = to_decimal(r.verdict->abs_error, 3);
        j["digits"] = r.verdict->digits;
        j["pass"] = r.verdict->pass;
    }
    return j;
}

Json to_json(const SumResult& s, int digits) {
    return Json{{"value", to_decimal(s.value, digits)},
                {"terms_used", s.terms_used},
                {"tail_bound", to_decimal(s.tail_bound, 3)},
                {"requested_digits", s.requested_digits},
                {"precision_bits", s.precision_bits}};
}

Json verification_report(const WZPair& pair, const WZReport& report,
                         const std::optional<BoundaryReport>& boundary,
                         const std::vector<IdentityRecord>& identities) {
    Json ids = Json::array();
    for (const auto& r : identities) ids.push_back(to_json(r));
    return Json{{"pair", pair.name},
                {"wz_verified", report.verified},
                {"certificate", to_string(report.certificate)},
                {"residual", to_string(report.residual)},
                {"boundary", boundary ? to_json(*boundary) : Json(nullptr)},
                {"identities", ids}};
}

}  // namespace wzpi
