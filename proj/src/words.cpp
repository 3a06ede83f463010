#include "vlcode/words.hpp"

#include <algorithm>
#include <numeric>

namespace vlcode {

Word longest_common_prefix(const Word& w, const Word& w2) {
    std::size_t n = std::min(w.size(), w2.size());
    std::size_t i = 0;
    while (i < n && w[i] == w2[i]) ++i;
    return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
}

int prefix_distance(const Word& w, const Word& w2) {
    return static_cast<int>(w.size() + w2.size() - 2 * longest_common_prefix(w, w2).size());
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

int suffix_distance(const Word& w, const Word& w2) {
    return prefix_distance(reversed(w), reversed(w2));
}

int factor_distance(const Word& w, const Word& w2) {
    // longest common factor via the classic suffix-aligned DP table
    std::size_t best = 0;
    std::vector<std::size_t> row(w2.size() + 1, 0);
    for (std::size_t i = 1; i <= w.size(); ++i) {
        std::size_t diag = 0; // row[j-1] from the previous iteration of i
        for (std::size_t j = 1; j <= w2.size(); ++j) {
            std::size_t up = row[j];
            row[j] = (w[i - 1] == w2[j - 1]) ? diag + 1 : 0;
            best = std::max(best, row[j]);
            diag = up;
        }
    }
    return static_cast<int>(w.size() + w2.size() - 2 * best);
}

bool is_unbordered(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_unbordered: empty word");
    // failure function; w has a proper border iff fail[n] > 0
    std::vector<std::size_t> fail(w.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[k]) k = fail[k];
        if (w[i] == w[k]) ++k;
        fail[i + 1] = k;
    }
    return fail[w.size()] == 0;
}

Word unbordered_extension(const Word& z0, int alphabet_size) {
    if (z0.empty()) throw std::invalid_argument("unbordered_extension: empty seed");
    if (alphabet_size < 2) throw std::invalid_argument("unbordered_extension: |A| < 2");
    Symbol a = z0.front();
    Symbol b = (a == 0) ? 1 : 0;
    Word z = z0;
    z.push_back(a);
    z.insert(z.end(), z0.size(), b);
    return z;
}

std::vector<std::pair<Word, Word>> conjugacy_splits(const Word& t, const Word& v,
                                                    const Word& v2) {
    if (t.empty()) throw std::invalid_argument("conjugacy_splits: empty word");
    std::vector<std::pair<Word, Word>> out;
    for (std::size_t i = 0; i < t.size(); ++i) { // beta = t[i..] stays nonempty
        Word alpha(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
        Word beta(t.begin() + static_cast<std::ptrdiff_t>(i), t.end());
        Word cand = beta;
        cand.insert(cand.end(), alpha.begin(), alpha.end());
        cand.insert(cand.end(), v.begin(), v.end());
        if (cand == v2) out.emplace_back(std::move(alpha), std::move(beta));
    }
    return out;
}

std::vector<Symbol> inverse_permutation(const std::vector<Symbol>& perm) {
    std::vector<Symbol> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[static_cast<std::size_t>(perm[i])] = static_cast<Symbol>(i);
    return inv;
}

PermMorphism PermMorphism::make(MorphismKind kind, std::vector<Symbol> perm) {
    std::vector<char> seen(perm.size(), 0);
    for (Symbol s : perm) {
        if (s < 0 || static_cast<std::size_t>(s) >= perm.size() || seen[static_cast<std::size_t>(s)])
            throw std::invalid_argument("permutation is not a bijection");
        seen[static_cast<std::size_t>(s)] = 1;
    }
    // order = lcm of cycle lengths
    std::vector<char> done(perm.size(), 0);
    long long order = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (done[i]) continue;
        long long len = 0;
        std::size_t j = i;
        while (!done[j]) {
            done[j] = 1;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        order = std::lcm(order, len);
    }
    return PermMorphism{kind, std::move(perm), static_cast<int>(order)};
}

Word morphism_apply(const PermMorphism& m, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Symbol s : w) out.push_back(m.perm[static_cast<std::size_t>(s)]);
    if (m.kind == MorphismKind::anti_automorphism) std::reverse(out.begin(), out.end());
    return out;
}

int morphism_distance(const PermMorphism& m, const Word& w, const Word& w2) {
    if (w == w2) return 0;
    if (morphism_apply(m, w) == w2) return 1;
    return 2;
}

} // namespace vlcode
