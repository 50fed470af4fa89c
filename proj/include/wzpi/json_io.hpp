#pragma once

#include "wzpi/corpus.hpp"
#include "wzpi/numerics.hpp"
#include "wzpi/wz.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace wzpi {

using Json = nlohmann::ordered_json;

Json to_json(const LinForm& l);
LinForm linform_from_json(const Json& j);

/// Canonical HyperTerm document. Field names follow the accessors; gammas are sorted by (a, b, c).
Json to_json(const HyperTerm& t);
HyperTerm hyperterm_from_json(const Json& j);

Json to_json(const PairDefinition& d);
PairDefinition pair_definition_from_json(const std::string& text);

Json to_json(const BoundaryReport& b);
Json to_json(const IdentityRecord& r);
Json to_json(const SumResult& s, int digits);

/// { pair, wz_verified, certificate, residual, boundary, identities }
Json verification_report(const WZPair& pair, const WZReport& report,
                         const std::optional<BoundaryReport>& boundary,
                         const std::vector<IdentityRecord>& identities);

}  // namespace wzpi
