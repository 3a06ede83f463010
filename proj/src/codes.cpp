#include "vlcode/codes.hpp"

#include <algorithm>
#include <map>

namespace vlcode {

SpResult sardinas_patterson(const Nfa& x, long state_cap, int max_iterations) {
    SpResult res;
    if (accepts(x, {})) {
        if (language_equal(x, Nfa::epsilon_word(x.alphabet_size), state_cap))
            throw std::invalid_argument("sardinas_patterson: input is exactly { _ }");
        res.is_code = false;
        res.eps_in_input = true;
        return res;
    }
    Nfa eps = Nfa::epsilon_word(x.alphabet_size);
    Nfa u = difference(quotient(x, x, QuotientSide::left), eps, state_cap);
    std::map<std::string, int> seen;
    for (int n = 0; n <= max_iterations; ++n) {
        Dfa d = to_min_dfa(u, state_cap);
        res.chain.push_back(d);
        if (dfa_accepts(d, {})) {
            res.is_code = false;
            res.eps_index = n;
            return res;
        }
        auto [it, fresh] = seen.emplace(canonical_key(d), n);
        if (!fresh) {
            res.is_code = true;
            res.repeat_of = it->second;
            return res;
        }
        Nfa un = to_nfa(d);
        u = nfa_union(quotient(x, un, QuotientSide::left), quotient(un, x, QuotientSide::left));
    }
    throw ResourceLimitError("sardinas_patterson: iteration cap exceeded");
}

Measure bernoulli_measure(const Nfa& x, long state_cap) {
    Nfa t = trim(to_nfa(to_min_dfa(x, state_cap)));
    int n = t.num_states();
    if (n == 0) return Measure::of(Rational(0));
    Rational per_letter(BigInt(1), BigInt(t.alphabet_size));
    // generalized-automaton weights on states 0..n-1 plus source n, sink n+1
    std::map<std::pair<int, int>, Rational> w;
    auto add = [&](int p, int q, const Rational& r) {
        auto [it, fresh] = w.emplace(std::make_pair(p, q), r);
        if (!fresh) it->second = it->second + r;
    };
    int src = n, snk = n + 1;
    Rational one(1);
    for (int q = 0; q < n; ++q) {
        if (t.initial[static_cast<std::size_t>(q)]) add(src, q, one);
        if (t.accepting[static_cast<std::size_t>(q)]) add(q, snk, one);
        for (auto [lbl, to] : t.out[static_cast<std::size_t>(q)]) {
            (void)lbl;
            add(q, to, per_letter);
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        Rational loop(0);
        if (auto it = w.find({r, r}); it != w.end()) loop = it->second;
        // every state of the trimmed automaton lies on an accepting path, so a
        // loop of mass >= 1 makes the whole series diverge
        if (one <= loop) return Measure::inf();
        Rational boost = one / (one - loop);
        std::vector<std::pair<int, Rational>> in, out;
        for (auto& [key, val] : w) {
            if (key.second == r && key.first != r) in.emplace_back(key.first, val);
            if (key.first == r && key.second != r) out.emplace_back(key.second, val);
        }
        for (auto& [p, win] : in)
            for (auto& [q, wout] : out) add(p, q, win * boost * wout);
        for (auto it = w.begin(); it != w.end();)
            if (it->first.first == r || it->first.second == r)
                it = w.erase(it);
            else
                ++it;
    }
    if (auto it = w.find({src, snk}); it != w.end()) return Measure::of(it->second);
    return Measure::of(Rational(0));
}

bool is_complete(const Nfa& x, long state_cap) {
    return is_empty(complement(factor_closure(star(x)), state_cap));
}

Word shortest_non_factor(const Nfa& x, int min_len, long state_cap) {
    Nfa rest = complement(factor_closure(star(x)), state_cap);
    std::optional<Word> w = shortest_word(rest, state_cap);
    if (!w) throw std::invalid_argument("shortest_non_factor: language is complete");
    while (static_cast<int>(w->size()) < min_len) w->push_back(0);
    return *w;
}

} // namespace vlcode
