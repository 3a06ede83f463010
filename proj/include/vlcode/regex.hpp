#pragma once

#include <string>

#include "vlcode/alphabet.hpp"
#include "vlcode/nfa.hpp"

namespace vlcode {

// Grammar: `+` union, juxtaposition concatenation, `*` star, parentheses,
// `_` the empty word; symbols are the declared alphabet characters.
// Whitespace is ignored. Throws ParseError with the byte position.
Nfa compile_regex(const std::string& expr, const Alphabet& alphabet);

// A regular expression for the language, reconstructed by state elimination
// on the minimal automaton, in the same grammar. The empty language prints
// as "#" (not parseable back; only the empty language does this).
std::string regex_of(const Nfa& a, const Alphabet& alphabet,
                     long state_cap = kDefaultStateCap);

} // namespace vlcode
