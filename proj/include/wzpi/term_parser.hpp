#pragma once

#include "wzpi/hyperterm.hpp"

#include <string>
#include <string_view>

namespace wzpi {

/// Parses the product grammar documented in GRAMMAR.md into a canonical HyperTerm.
/// Throws SyntaxError (with position and expected tokens) or DomainError.
HyperTerm parse_term(std::string_view text);

/// Parses a polynomial in n and k ("20*n + 2*k + 3", "(n+1)^2/4").
Poly2 parse_poly(std::string_view text);

/// Renders t in the same grammar; parse_term(render_term(t)) == t.
std::string render_term(const HyperTerm& t);

}  // namespace wzpi
