#pragma once

#include "wzpi/wz.hpp"

#include <string>
#include <vector>

namespace wzpi {

/// Pair file contents: term expressions plus the constant sum_n G(n, k) is expected to equal.
struct PairDefinition {
    std::string name;
    std::string F;
    std::string G;
    std::string expected_constant;
};

/// Gamma-form definitions, valid for non-integer k: "pair1" (sum = 8/pi) and "pair2" (sum = 32/pi^2).
const std::vector<PairDefinition>& builtin_pairs();

/// Binomial-form versions of the same pairs, valid on the integer lattice.
const std::vector<PairDefinition>& builtin_binomial_pairs();

/// "builtin:<name>" or a path to a pair JSON file. Throws Error on unknown names or unreadable files.
PairDefinition resolve_pair(const std::string& source);

/// Parses both terms and the constant. verified is left false.
WZPair load_pair(const PairDefinition& def);

/// prefactor * sum_n series(n) = constant, exactly as printed for one of the built-in pairs.
struct PrintedIdentity {
    std::string label;
    std::string pair;
    Provenance family;
    BigRational k;
    std::string prefactor;
    std::string series;
    std::string constant;
};

/// The eight closed-form series: G and H families of both pairs at k = 0 and k = 1/4.
const std::vector<PrintedIdentity>& printed_identities();

IdentityRecord to_record(const PrintedIdentity& p);

}  // namespace wzpi
