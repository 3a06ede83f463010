#pragma once

#include <optional>
#include <vector>

#include "vlcode/nfa.hpp"
#include "vlcode/transducer.hpp"
#include "vlcode/words.hpp"

namespace vlcode {

// Relation { (w,w') : 1 <= prefix_distance(w,w') <= k }. Four-state machine:
// a loop copying the shared prefix, then one divergence block (both sides
// extend with different first letters / one side extends alone).
Transducer strict_prefix_relation(int k, int sigma);

// Same for the suffix distance, built by reversing every arc label of the
// prefix machine.
Transducer strict_suffix_relation(int k, int sigma);

// Relation union identity: membership means distance <= k.
Transducer with_identity(const Transducer& t);

// { w' : factor_distance(w, w') <= 1 for some w in X }; contains X.
Nfa factor_ball_step(const Nfa& x, long state_cap = kDefaultStateCap);
// k-fold iteration: the full <=k factor-distance ball image of X.
Nfa factor_ball_image(const Nfa& x, int k, long state_cap = kDefaultStateCap);

// A bounded rewrite of word borders: y is obtained from x by removing the
// prefix `drop_prefix` and suffix `drop_suffix`, then gluing `add_prefix` /
// `add_suffix` around the remaining core.
struct ContextRewrite {
    Word drop_prefix, add_prefix, drop_suffix, add_suffix;

    int weight() const {
        return static_cast<int>(drop_prefix.size() + add_prefix.size() + drop_suffix.size() +
                                add_suffix.size());
    }
    bool is_identity_shaped() const {
        return drop_prefix == add_prefix && drop_suffix == add_suffix;
    }
};

// All rewrites of total length <= k that are not identity-shaped, in a fixed
// (total length, component length-lex) order. The strict factor relation at
// tolerance k is exactly the union of their graphs minus the diagonal.
std::vector<ContextRewrite> enumerate_context_rewrites(int k, int sigma,
                                                       long count_cap = 1'000'000);

// Image of X under one rewrite: add_prefix . (drop_prefix^-1 X drop_suffix^-1) . add_suffix
Nfa rewrite_image(const ContextRewrite& rw, const Nfa& x);

// Three-state transducer with the same graph, for membership checks.
Transducer rewrite_transducer(const ContextRewrite& rw, int sigma);

// The words that a rewrite maps to themselves. Nonempty only when one side's
// drop/add pair is a rotation of the other's, which pins the core to the
// periodic family witnessed by conjugacy_splits.
Nfa rewrite_fixed_points(const ContextRewrite& rw, int sigma);

// { w' : 1 <= factor_distance(w, w') <= k for some w in X }, exact.
Nfa strict_factor_image(const Nfa& x, int k, long state_cap = kDefaultStateCap,
                        long count_cap = 1'000'000);

enum class MapDirection { forward, inverse };

// Set image of X under the morphism (or its inverse); regular for both kinds.
Nfa morphism_image(const PermMorphism& m, const Nfa& x, MapDirection dir);

// Relation { (w, m(w)) : m(w) != w }; only exists as a finite machine for
// automorphisms (throws otherwise).
Transducer strict_morphism_relation(const PermMorphism& m, int sigma);

// nullopt if every word of Z is fixed by the morphism; otherwise some word
// of Z that moves. For anti-automorphisms this runs a two-pointer search on
// the automaton (a word is fixed iff letters mirror around the center).
std::optional<Word> nonfixed_word(const Nfa& z, const PermMorphism& m);

} // namespace vlcode
