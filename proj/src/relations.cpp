#include "vlcode/relations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace vlcode {

namespace {

// all words of length exactly `len`, lexicographic
void words_of_length(int sigma, int len, std::vector<Word>& out) {
    Word w(static_cast<std::size_t>(len), 0);
    for (;;) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == sigma - 1) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
}

RawTransducer raw_strict_prefix(int k, int sigma) {
    RawTransducer raw;
    raw.alphabet_size = sigma;
    for (int i = 0; i < 4; ++i) raw.add_state();
    raw.initial[0] = 1;
    raw.accepting[1] = raw.accepting[2] = raw.accepting[3] = 1;
    for (Symbol a = 0; a < sigma; ++a) raw.add_arc(0, {a}, {a}, 0);
    // one-sided tails
    for (int len = 1; len <= k; ++len) {
        std::vector<Word> ws;
        words_of_length(sigma, len, ws);
        for (const Word& u : ws) {
            raw.add_arc(0, u, {}, 1);
            raw.add_arc(0, {}, u, 3);
        }
    }
    // two-sided tails with distinct first letters
    for (int lu = 1; lu < k; ++lu)
        for (int lv = 1; lu + lv <= k; ++lv) {
            std::vector<Word> us, vs;
            words_of_length(sigma, lu, us);
            words_of_length(sigma, lv, vs);
            for (const Word& u : us)
                for (const Word& v : vs)
                    if (u.front() != v.front()) raw.add_arc(0, u, v, 2);
        }
    return raw;
}

} // namespace

Transducer strict_prefix_relation(int k, int sigma) {
    if (k < 1) throw std::invalid_argument("strict_prefix_relation: k < 1");
    return normalize(raw_strict_prefix(k, sigma));
}

Transducer strict_suffix_relation(int k, int sigma) {
    if (k < 1) throw std::invalid_argument("strict_suffix_relation: k < 1");
    return normalize(reverse_raw(raw_strict_prefix(k, sigma)));
}

Transducer with_identity(const Transducer& t) {
    return t_union(t, identity_transducer(t.alphabet_size));
}

Nfa factor_ball_step(const Nfa& x, long state_cap) {
    Transducer p1 = strict_prefix_relation(1, x.alphabet_size);
    Transducer s1 = strict_suffix_relation(1, x.alphabet_size);
    Nfa result = nfa_union(x, nfa_union(image(p1, x), image(s1, x)));
    return to_nfa(to_min_dfa(result, state_cap));
}

Nfa factor_ball_image(const Nfa& x, int k, long state_cap) {
    if (k < 1) throw std::invalid_argument("factor_ball_image: k < 1");
    Nfa cur = x;
    for (int i = 0; i < k; ++i) cur = factor_ball_step(cur, state_cap);
    return cur;
}

std::vector<ContextRewrite> enumerate_context_rewrites(int k, int sigma, long count_cap) {
    if (k < 1) throw std::invalid_argument("enumerate_context_rewrites: k < 1");
    std::vector<ContextRewrite> out;
    for (int total = 0; total <= k; ++total)
        for (int l1 = 0; l1 <= total; ++l1)
            for (int l2 = 0; l1 + l2 <= total; ++l2)
                for (int l3 = 0; l1 + l2 + l3 <= total; ++l3) {
                    int l4 = total - l1 - l2 - l3;
                    std::vector<Word> w1, w2, w3, w4;
                    words_of_length(sigma, l1, w1);
                    words_of_length(sigma, l2, w2);
                    words_of_length(sigma, l3, w3);
                    words_of_length(sigma, l4, w4);
                    for (const Word& a : w1)
                        for (const Word& b : w2)
                            for (const Word& c : w3)
                                for (const Word& d : w4) {
                                    ContextRewrite rw{a, b, c, d};
                                    if (rw.is_identity_shaped()) continue;
                                    if (static_cast<long>(out.size()) >= count_cap)
                                        throw ResourceLimitError(
                                            "context rewrite count exceeds cap " +
                                            std::to_string(count_cap));
                                    out.push_back(std::move(rw));
                                }
                }
    return out;
}

Nfa rewrite_image(const ContextRewrite& rw, const Nfa& x) {
    int sigma = x.alphabet_size;
    Nfa core = x;
    if (!rw.drop_prefix.empty())
        core = quotient(core, Nfa::single_word(rw.drop_prefix, sigma), QuotientSide::left);
    if (!rw.drop_suffix.empty())
        core = quotient(core, Nfa::single_word(rw.drop_suffix, sigma), QuotientSide::right);
    Nfa y = concat(Nfa::single_word(rw.add_prefix, sigma),
                   concat(core, Nfa::single_word(rw.add_suffix, sigma)));
    return trim(y);
}

Transducer rewrite_transducer(const ContextRewrite& rw, int sigma) {
    RawTransducer raw;
    raw.alphabet_size = sigma;
    for (int i = 0; i < 3; ++i) raw.add_state();
    raw.initial[0] = 1;
    raw.accepting[2] = 1;
    raw.add_arc(0, rw.drop_prefix, rw.add_prefix, 1);
    for (Symbol a = 0; a < sigma; ++a) raw.add_arc(1, {a}, {a}, 1);
    raw.add_arc(1, rw.drop_suffix, rw.add_suffix, 2);
    return normalize(raw);
}

namespace {

Nfa periodic_family(const Word& head, const Word& loop, const Word& mid, const Word& tail,
                    int sigma) {
    // head . loop* . mid . tail
    Nfa l = star(Nfa::single_word(loop, sigma));
    Word mt = mid;
    mt.insert(mt.end(), tail.begin(), tail.end());
    return concat(Nfa::single_word(head, sigma), concat(l, Nfa::single_word(mt, sigma)));
}

std::optional<Word> strip_prefix(const Word& longer, const Word& prefix) {
    if (prefix.size() > longer.size()) return std::nullopt;
    if (!std::equal(prefix.begin(), prefix.end(), longer.begin())) return std::nullopt;
    return Word(longer.begin() + static_cast<std::ptrdiff_t>(prefix.size()), longer.end());
}

} // namespace

Nfa rewrite_fixed_points(const ContextRewrite& rw, int sigma) {
    Nfa acc = Nfa::empty_language(sigma);
    // side one: add_prefix a proper prefix of drop_prefix
    if (auto t = strip_prefix(rw.drop_prefix, rw.add_prefix); t && !t->empty()) {
        for (auto& [alpha, beta] : conjugacy_splits(*t, rw.drop_suffix, rw.add_suffix)) {
            Word ab = alpha;
            ab.insert(ab.end(), beta.begin(), beta.end());
            acc = nfa_union(acc, periodic_family(rw.drop_prefix, ab, alpha, rw.drop_suffix,
                                                 sigma));
        }
    }
    // side two: drop_prefix a proper prefix of add_prefix
    if (auto t = strip_prefix(rw.add_prefix, rw.drop_prefix); t && !t->empty()) {
        for (auto& [alpha, beta] : conjugacy_splits(*t, rw.add_suffix, rw.drop_suffix)) {
            Word ab = alpha;
            ab.insert(ab.end(), beta.begin(), beta.end());
            acc = nfa_union(acc, periodic_family(rw.add_prefix, ab, alpha, rw.add_suffix,
                                                 sigma));
        }
    }
    return acc;
}

Nfa strict_factor_image(const Nfa& x, int k, long state_cap, long count_cap) {
    int sigma = x.alphabet_size;
    Nfa acc = Nfa::empty_language(sigma);
    for (const ContextRewrite& rw : enumerate_context_rewrites(k, sigma, count_cap)) {
        Nfa fixed = rewrite_fixed_points(rw, sigma);
        Nfa src = is_empty(fixed) ? x : difference(x, fixed, state_cap);
        acc = nfa_union(acc, rewrite_image(rw, src));
    }
    return to_nfa(to_min_dfa(acc, state_cap));
}

Nfa morphism_image(const PermMorphism& m, const Nfa& x, MapDirection dir) {
    const std::vector<Symbol> perm =
        dir == MapDirection::forward ? m.perm : inverse_permutation(m.perm);
    if (m.kind == MorphismKind::automorphism) return map_letters(x, perm);
    return map_letters(reverse(x), perm);
}

Transducer strict_morphism_relation(const PermMorphism& m, int sigma) {
    if (m.kind != MorphismKind::automorphism)
        throw std::invalid_argument(
            "strict_morphism_relation: the graph of an anti-automorphism is not a "
            "finite-state relation");
    Transducer t(sigma);
    int s0 = t.add_state(), s1 = t.add_state();
    t.initial[static_cast<std::size_t>(s0)] = 1;
    t.accepting[static_cast<std::size_t>(s1)] = 1;
    for (Symbol a = 0; a < sigma; ++a) {
        if (m.fixes(a))
            t.add_transition(s0, a, a, s0);
        else
            t.add_transition(s0, a, m.perm[static_cast<std::size_t>(a)], s1);
        t.add_transition(s1, a, m.perm[static_cast<std::size_t>(a)], s1);
    }
    return t;
}

namespace {

std::optional<Word> nonfixed_word_auto(const Nfa& z, const PermMorphism& m) {
    Nfa fix = Nfa::epsilon_word(z.alphabet_size);
    for (Symbol a = 0; a < z.alphabet_size; ++a)
        if (m.fixes(a)) fix.add_transition(0, a, 0);
    Nfa moved = difference(z, fix);
    return shortest_word(moved);
}

// Mirror search on the automaton of Z: walk a prefix p forward from an
// initial state and a suffix s backward from an accepting state, keeping
// |p| = |s|. A word p a q b s of Z is non-fixed as soon as the mirrored
// letter pair violates a = perm(b) or b = perm(a); a word p a s violates
// the center condition when a != perm(a).
std::optional<Word> nonfixed_word_anti(const Nfa& z0, const PermMorphism& m) {
    Nfa z = remove_epsilon(trim(z0));
    int n = z.num_states();
    if (n == 0) return std::nullopt;
    auto perm = [&](Symbol s) { return m.perm[static_cast<std::size_t>(s)]; };

    std::vector<std::vector<std::pair<Symbol, int>>> fwd(static_cast<std::size_t>(n)),
        bwd(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        fwd[static_cast<std::size_t>(q)] = z.out[static_cast<std::size_t>(q)];
        std::sort(fwd[static_cast<std::size_t>(q)].begin(), fwd[static_cast<std::size_t>(q)].end());
        for (auto [a, to] : z.out[static_cast<std::size_t>(q)])
            bwd[static_cast<std::size_t>(to)].emplace_back(a, q);
    }
    for (auto& v : bwd) std::sort(v.begin(), v.end());

    // word-reachability closure (reflexive), any length
    std::vector<std::vector<char>> reach(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int q = 0; q < n; ++q) {
        std::vector<int> stack{q};
        reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)] = 1;
        while (!stack.empty()) {
            int r = stack.back();
            stack.pop_back();
            for (auto [a, to] : fwd[static_cast<std::size_t>(r)]) {
                (void)a;
                if (!reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(to)]) {
                    reach[static_cast<std::size_t>(q)][static_cast<std::size_t>(to)] = 1;
                    stack.push_back(to);
                }
            }
        }
    }

    struct ParentStep {
        int px, py;
        Symbol a, b; // a extends the prefix, b extends the suffix (front)
    };
    std::map<std::pair<int, int>, ParentStep> parent;
    std::vector<std::pair<int, int>> order; // BFS discovery order
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> todo;
    for (int i = 0; i < n; ++i)
        for (int f = 0; f < n; ++f)
            if (z.initial[static_cast<std::size_t>(i)] &&
                z.accepting[static_cast<std::size_t>(f)])
                if (seen.emplace(i, f).second) {
                    todo.emplace_back(i, f);
                    order.emplace_back(i, f);
                }
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        for (auto [a, x2] : fwd[static_cast<std::size_t>(x)])
            for (auto [b, y2] : bwd[static_cast<std::size_t>(y)])
                if (seen.emplace(x2, y2).second) {
                    parent[{x2, y2}] = ParentStep{x, y, a, b};
                    todo.emplace_back(x2, y2);
                    order.emplace_back(x2, y2);
                }
    }

    auto outer_words = [&](int x, int y) {
        Word p, s;
        std::pair<int, int> cur{x, y};
        while (true) {
            auto it = parent.find(cur);
            if (it == parent.end()) break;
            p.push_back(it->second.a);
            s.push_back(it->second.b);
            cur = {it->second.px, it->second.py};
        }
        std::reverse(p.begin(), p.end()); // s is already outermost-last
        return std::make_pair(p, s);
    };
    auto connecting_word = [&](int from, int to) {
        std::map<int, std::pair<int, Symbol>> par;
        std::deque<int> q{from};
        std::set<int> vis{from};
        while (!q.empty()) {
            int r = q.front();
            q.pop_front();
            if (r == to) {
                Word w;
                int cur = to;
                while (cur != from) {
                    auto [pr, a] = par.at(cur);
                    w.push_back(a);
                    cur = pr;
                }
                std::reverse(w.begin(), w.end());
                return w;
            }
            for (auto [a, t] : fwd[static_cast<std::size_t>(r)])
                if (vis.insert(t).second) {
                    par[t] = {r, a};
                    q.push_back(t);
                }
        }
        throw std::logic_error("connecting_word: unreachable target");
    };

    for (auto [x, y] : order) {
        for (auto [a, x2] : fwd[static_cast<std::size_t>(x)]) {
            if (x2 == y && a != perm(a)) { // odd-length center violation
                auto [p, s] = outer_words(x, y);
                Word w = p;
                w.push_back(a);
                w.insert(w.end(), s.begin(), s.end());
                return w;
            }
            for (auto [b, y2] : bwd[static_cast<std::size_t>(y)]) {
                if (!reach[static_cast<std::size_t>(x2)][static_cast<std::size_t>(y2)]) continue;
                if (a == perm(b) && b == perm(a)) continue;
                auto [p, s] = outer_words(x, y);
                Word w = p;
                w.push_back(a);
                Word q = connecting_word(x2, y2);
                w.insert(w.end(), q.begin(), q.end());
                w.push_back(b);
                w.insert(w.end(), s.begin(), s.end());
                return w;
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Word> nonfixed_word(const Nfa& z, const PermMorphism& m) {
    if (m.kind == MorphismKind::automorphism) return nonfixed_word_auto(z, m);
    return nonfixed_word_anti(z, m);
}

} // namespace vlcode
