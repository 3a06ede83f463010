#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vlcode/alphabet.hpp"

namespace vlcode {

Word longest_common_prefix(const Word& w, const Word& w2);

// d(w,w') = |w| + |w'| - 2 * (longest shared prefix / suffix / factor).
// All three are symmetric; factor_distance uses O(|w| * |w'|) dynamic
// programming for the longest common factor.
int prefix_distance(const Word& w, const Word& w2);
int suffix_distance(const Word& w, const Word& w2);
int factor_distance(const Word& w, const Word& w2);

Word reversed(const Word& w);

// A word is unbordered iff no proper non-empty prefix is also a suffix,
// equivalently it cannot overlap a shifted copy of itself. Throws on the
// empty word (no meaningful answer).
bool is_unbordered(const Word& w);

// z0 extended to z0 a b^|z0| with a the initial letter of z0 and b the least
// other symbol; the result is always unbordered.
Word unbordered_extension(const Word& z0, int alphabet_size);

// All splits t = alpha.beta with beta nonempty such that v2 == beta.alpha.v.
// These witness the solutions g of the word equation t g = g t', t' = beta.alpha.
std::vector<std::pair<Word, Word>> conjugacy_splits(const Word& t, const Word& v,
                                                    const Word& v2);

enum class MorphismKind { automorphism, anti_automorphism };

// A permutation of the alphabet extended to all words, either letter-wise
// (automorphism) or letter-wise plus reversal (anti-automorphism, e.g. the
// Watson-Crick complement). `order` is the least n >= 1 with the n-fold
// letter permutation equal to the identity.
struct PermMorphism {
    MorphismKind kind;
    std::vector<Symbol> perm; // perm[s] = image of s
    int order;

    static PermMorphism make(MorphismKind kind, std::vector<Symbol> perm);
    bool fixes(Symbol s) const { return perm[static_cast<std::size_t>(s)] == s; }
};

std::vector<Symbol> inverse_permutation(const std::vector<Symbol>& perm);

Word morphism_apply(const PermMorphism& m, const Word& w);

// 0 iff w == w'; 1 iff w' == m(w) != w; 2 otherwise. A quasi-metric: it is
// symmetric only when the permutation is an involution.
int morphism_distance(const PermMorphism& m, const Word& w, const Word& w2);

} // namespace vlcode
