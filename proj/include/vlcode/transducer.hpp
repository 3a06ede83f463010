#pragma once

#include <tuple>
#include <vector>

#include "vlcode/alphabet.hpp"
#include "vlcode/nfa.hpp"

namespace vlcode {

// Finite automaton over pairs of words: each transition reads a letter (or
// nothing) on the input tape and writes a letter (or nothing) on the output
// tape. Normalized machines never carry a transition that is silent on both
// tapes. Recognizes a binary word relation.
struct Transducer {
    static constexpr Symbol kEps = -1;

    int alphabet_size = 0;
    // state -> (in, out, target); in/out are symbols or kEps
    std::vector<std::vector<std::tuple<Symbol, Symbol, int>>> out;
    std::vector<char> initial;
    std::vector<char> accepting;

    explicit Transducer(int sigma) : alphabet_size(sigma) {}

    int num_states() const { return static_cast<int>(out.size()); }
    int add_state();
    void add_transition(int from, Symbol in, Symbol out_sym, int to);
};

// Construction-time form whose transitions are labeled by word pairs.
struct RawTransducer {
    struct Arc {
        int from;
        Word in, out;
        int to;
    };
    int alphabet_size = 0;
    int num_states = 0;
    std::vector<Arc> arcs;
    std::vector<char> initial;
    std::vector<char> accepting;

    int add_state();
    void add_arc(int from, Word in, Word out, int to);
};

// Splits word-pair labels into letter-level steps and eliminates the silent
// transitions that word pairs (eps, eps) give rise to. Relation unchanged.
Transducer normalize(const RawTransducer& raw);

// The raw machine with every arc's source/target swapped and both label
// words reversed; its relation relates (u^R, v^R) iff the original relates (u, v).
RawTransducer reverse_raw(const RawTransducer& raw);

Transducer identity_transducer(int sigma);
Transducer t_union(const Transducer& a, const Transducer& b);
Transducer t_inverse(const Transducer& a);
// Relational composition: (w, w'') related iff some w' has (w, w') in `a`
// and (w', w'') in `b`.
Transducer t_compose(const Transducer& a, const Transducer& b);

bool relation_contains(const Transducer& t, const Word& w, const Word& w2);

// { w' : exists w accepted by X with (w, w') in the relation }.
Nfa image(const Transducer& t, const Nfa& x);

} // namespace vlcode
