#pragma once

#include <optional>
#include <vector>

#include "vlcode/nfa.hpp"
#include "vlcode/rational.hpp"

namespace vlcode {

class NotACodeError : public std::runtime_error {
public:
    explicit NotACodeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Trace of the Sardinas-Patterson decision. chain[0] is X^-1 X minus the
// empty word; chain[n+1] = chain[n]^-1 X union X^-1 chain[n] (all stored as
// minimal automata). The set is a code iff no chain element contains the
// empty word before the sequence starts repeating.
struct SpResult {
    bool is_code = false;
    std::vector<Dfa> chain;
    std::optional<int> eps_index;   // first chain index containing the empty word
    std::optional<int> repeat_of;   // earlier index the final chain element equals
    bool eps_in_input = false;      // shortcut: input contained the empty word
};

// Throws std::invalid_argument when X is exactly { empty word }; a multi-word
// input containing the empty word is reported not-code without a chain.
SpResult sardinas_patterson(const Nfa& x, long state_cap = kDefaultStateCap,
                            int max_iterations = 10000);

// Exact value of sum over accepted words w of |A|^-|w|, by eliminating the
// states of the minimal automaton (highest index first) over exact rationals;
// infinity when the series diverges.
Measure bernoulli_measure(const Nfa& x, long state_cap = kDefaultStateCap);

// Every word of A* appears as a factor of some product of words of X.
bool is_complete(const Nfa& x, long state_cap = kDefaultStateCap);

// Length-lex least word outside the factors of X*, padded with the least
// symbol up to min_len. Throws NotACodeError-unrelated std::invalid_argument
// when X is complete (no such word).
Word shortest_non_factor(const Nfa& x, int min_len, long state_cap = kDefaultStateCap);

} // namespace vlcode
