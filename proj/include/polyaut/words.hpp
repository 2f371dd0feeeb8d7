#pragma once

#include <string>

#include "polyaut/fm.hpp"

namespace polyaut {

/// Parses a group word over the free metabelian generators. Syntax:
/// generators `a b c`, inverses `A B C`, juxtaposition for products,
/// `[u,v]` for commutators, `^n` for integer powers (atoms may be
/// parenthesized). The empty word is the identity. Throws ParseError.
FMElement parse_word(const std::string& text, int rank);

/// Deterministic JSON form: tvec, then the fringe polynomials as sorted
/// term lists with decimal-string coefficients. Serialization round-trips
/// byte-for-byte.
std::string fm_to_json(const FMElement& e);
FMElement fm_from_json(const std::string& text);

}  // namespace polyaut
