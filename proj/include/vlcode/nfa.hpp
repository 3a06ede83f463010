#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlcode/alphabet.hpp"

namespace vlcode {

class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr long kDefaultStateCap = 1'000'000;

// Nondeterministic finite automaton over symbol indices 0..alphabet_size-1,
// with epsilon transitions (label kEps). Values are immutable once built;
// every operation below returns a fresh automaton.
struct Nfa {
    static constexpr Symbol kEps = -1;

    int alphabet_size = 0;
    std::vector<std::vector<std::pair<Symbol, int>>> out; // state -> (label, target)
    std::vector<char> initial;
    std::vector<char> accepting;

    explicit Nfa(int sigma) : alphabet_size(sigma) {}

    int num_states() const { return static_cast<int>(out.size()); }
    int add_state();
    void add_transition(int from, Symbol label, int to);

    static Nfa empty_language(int sigma);
    static Nfa epsilon_word(int sigma);
    static Nfa universal(int sigma); // A*
    static Nfa single_word(const Word& w, int sigma);
    static Nfa from_words(const std::vector<Word>& ws, int sigma);
};

// Complete deterministic automaton: exactly one successor per (state, symbol).
struct Dfa {
    int alphabet_size = 0;
    int num_states = 0;
    int initial = 0;
    std::vector<char> accepting;
    std::vector<int> delta; // num_states * alphabet_size, row-major by state

    int step(int q, Symbol a) const {
        return delta[static_cast<std::size_t>(q) * static_cast<std::size_t>(alphabet_size) +
                     static_cast<std::size_t>(a)];
    }
};

Nfa remove_epsilon(const Nfa& a);
Nfa trim(const Nfa& a);
Nfa reverse(const Nfa& a);
Nfa star(const Nfa& a);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa nfa_union(const Nfa& a, const Nfa& b);
Nfa intersect(const Nfa& a, const Nfa& b);
Nfa map_letters(const Nfa& a, const std::vector<Symbol>& perm);

enum class QuotientSide { left, right };
// left:  { z : exists y in `by`, y.z in `lang` }
// right: { z : exists y in `by`, z.y in `lang` }
Nfa quotient(const Nfa& lang, const Nfa& by, QuotientSide side);

// All factors of all words of the language.
Nfa factor_closure(const Nfa& a);

bool accepts(const Nfa& a, const Word& w);
bool is_empty(const Nfa& a);

Dfa determinize(const Nfa& a, long state_cap = kDefaultStateCap);
Dfa minimize(const Dfa& d);
Dfa to_min_dfa(const Nfa& a, long state_cap = kDefaultStateCap);
Nfa to_nfa(const Dfa& d);

Nfa complement(const Nfa& a, long state_cap = kDefaultStateCap);
Nfa difference(const Nfa& a, const Nfa& b, long state_cap = kDefaultStateCap);

bool dfa_accepts(const Dfa& d, const Word& w);
bool dfa_is_empty(const Dfa& d);
bool dfa_equal(const Dfa& d1, const Dfa& d2);
// Serialization of the minimized, BFS-renumbered transition table; equal
// strings iff equal languages.
std::string canonical_key(const Dfa& min_dfa);

bool language_equal(const Nfa& a, const Nfa& b, long state_cap = kDefaultStateCap);
bool language_subset(const Nfa& a, const Nfa& b, long state_cap = kDefaultStateCap);

// Minimum-length accepted word, ties broken by symbol order; nullopt if the
// language is empty.
std::optional<Word> shortest_word(const Nfa& a, long state_cap = kDefaultStateCap);

// Length-lex sorted list of all accepted words if the language is finite.
std::optional<std::vector<Word>> finite_language(const Dfa& d);

} // namespace vlcode
