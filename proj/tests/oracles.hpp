#pragma once

// Brute-force reference implementations used as test oracles. Everything in
// here works by exhaustive enumeration on short words and stays independent
// of the library's automata machinery (plain word arithmetic only).

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "vlcode/words.hpp"

namespace oracle {

using vlcode::Symbol;
using vlcode::Word;

inline std::vector<Word> words_up_to(int sigma, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (Symbol s = 0; s < sigma; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

inline std::set<Word> prefixes(const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.insert(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
    return out;
}

inline std::set<Word> suffixes(const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
    return out;
}

inline std::set<Word> factors(const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        for (std::size_t j = i; j <= w.size(); ++j)
            out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                            w.begin() + static_cast<std::ptrdiff_t>(j)));
    return out;
}

inline int longest_common(const std::set<Word>& a, const std::set<Word>& b) {
    int best = 0;
    for (const Word& w : a)
        if (b.count(w)) best = std::max(best, static_cast<int>(w.size()));
    return best;
}

inline int prefix_distance(const Word& w, const Word& w2) {
    return static_cast<int>(w.size() + w2.size()) -
           2 * longest_common(prefixes(w), prefixes(w2));
}

inline int suffix_distance(const Word& w, const Word& w2) {
    return static_cast<int>(w.size() + w2.size()) -
           2 * longest_common(suffixes(w), suffixes(w2));
}

inline int factor_distance(const Word& w, const Word& w2) {
    return static_cast<int>(w.size() + w2.size()) - 2 * longest_common(factors(w), factors(w2));
}

// Overlap check straight from the definition: some v with 1 <= |v| <= |w|-1
// and w.v ends with w.
inline bool has_overlap(const Word& w, int sigma) {
    for (int len = 1; len < static_cast<int>(w.size()); ++len)
        for (const Word& v : words_up_to(sigma, len)) {
            if (static_cast<int>(v.size()) != len) continue;
            Word wv = w;
            wv.insert(wv.end(), v.begin(), v.end());
            if (std::equal(w.rbegin(), w.rend(), wv.rbegin())) return true;
        }
    return false;
}

// All products of at most `depth` factors from the list.
inline std::set<Word> star_words(const std::vector<Word>& xs, int max_len, int depth) {
    std::set<Word> out{Word{}};
    for (int d = 0; d < depth; ++d) {
        std::set<Word> next = out;
        for (const Word& w : out)
            for (const Word& x : xs) {
                if (static_cast<int>(w.size() + x.size()) > max_len) continue;
                Word wx = w;
                wx.insert(wx.end(), x.begin(), x.end());
                next.insert(std::move(wx));
            }
        if (next == out) break;
        out.swap(next);
    }
    return out;
}

// Unique decipherability by exhaustive factorization search over all
// products of words of X up to the given total length: two distinct part
// lists producing one word refute the code property.
inline bool is_code_bruteforce(const std::vector<Word>& xs, int max_len) {
    for (const Word& x : xs)
        if (x.empty()) return xs.size() <= 1;
    std::map<Word, std::set<std::vector<std::size_t>>> reached;
    std::vector<std::pair<Word, std::vector<std::size_t>>> stack{{Word{}, {}}};
    while (!stack.empty()) {
        auto [w, parts] = stack.back();
        stack.pop_back();
        auto& entry = reached[w];
        if (!entry.insert(parts).second) continue;
        if (entry.size() > 1) return false;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (static_cast<int>(w.size() + xs[i].size()) > max_len) continue;
            Word wx = w;
            wx.insert(wx.end(), xs[i].begin(), xs[i].end());
            auto np = parts;
            np.push_back(i);
            stack.emplace_back(std::move(wx), std::move(np));
        }
    }
    return true;
}

} // namespace oracle
