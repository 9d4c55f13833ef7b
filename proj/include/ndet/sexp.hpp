#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ndet/core.hpp"

namespace ndet::sexp {

/// One node of a parsed S-expression: either an atom or a parenthesised
/// list of nodes. Atoms are any run of characters other than whitespace
/// and parentheses.
struct Node {
    bool isAtom = false;
    std::string atom;
    std::vector<Node> items;
    int line = 0;
    int col = 0;

    bool isList() const { return !isAtom; }
};

/// Parses exactly one S-expression; trailing non-whitespace is an error.
/// Throws ParseError with 1-based line/column on malformed input.
Node parseOne(std::string_view text);

}  // namespace ndet::sexp
