#include "vlcode/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace vlcode {

int Nfa::add_state() {
    out.emplace_back();
    initial.push_back(0);
    accepting.push_back(0);
    return num_states() - 1;
}

void Nfa::add_transition(int from, Symbol label, int to) {
    out[static_cast<std::size_t>(from)].emplace_back(label, to);
}

Nfa Nfa::empty_language(int sigma) { return Nfa(sigma); }

Nfa Nfa::epsilon_word(int sigma) {
    Nfa a(sigma);
    int q = a.add_state();
    a.initial[static_cast<std::size_t>(q)] = 1;
    a.accepting[static_cast<std::size_t>(q)] = 1;
    return a;
}

Nfa Nfa::universal(int sigma) {
    Nfa a = epsilon_word(sigma);
    for (Symbol s = 0; s < sigma; ++s) a.add_transition(0, s, 0);
    return a;
}

Nfa Nfa::single_word(const Word& w, int sigma) {
    Nfa a(sigma);
    int q = a.add_state();
    a.initial[static_cast<std::size_t>(q)] = 1;
    for (Symbol s : w) {
        int r = a.add_state();
        a.add_transition(q, s, r);
        q = r;
    }
    a.accepting[static_cast<std::size_t>(q)] = 1;
    return a;
}

Nfa Nfa::from_words(const std::vector<Word>& ws, int sigma) {
    Nfa a(sigma);
    for (const Word& w : ws) {
        int q = a.add_state();
        a.initial[static_cast<std::size_t>(q)] = 1;
        for (Symbol s : w) {
            int r = a.add_state();
            a.add_transition(q, s, r);
            q = r;
        }
        a.accepting[static_cast<std::size_t>(q)] = 1;
    }
    return a;
}

namespace {

std::vector<int> eps_closure(const Nfa& a, const std::vector<int>& seed) {
    std::vector<char> in(static_cast<std::size_t>(a.num_states()), 0);
    std::vector<int> stack = seed, result;
    for (int q : seed) in[static_cast<std::size_t>(q)] = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        result.push_back(q);
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
            if (lbl == Nfa::kEps && !in[static_cast<std::size_t>(to)]) {
                in[static_cast<std::size_t>(to)] = 1;
                stack.push_back(to);
            }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<int> mask_to_list(const std::vector<char>& mask) {
    std::vector<int> v;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) v.push_back(static_cast<int>(i));
    return v;
}

} // namespace

Nfa remove_epsilon(const Nfa& a) {
    Nfa b(a.alphabet_size);
    for (int q = 0; q < a.num_states(); ++q) b.add_state();
    b.initial = a.initial;
    for (int q = 0; q < a.num_states(); ++q) {
        auto cl = eps_closure(a, {q});
        std::set<std::pair<Symbol, int>> arcs;
        bool acc = false;
        for (int r : cl) {
            if (a.accepting[static_cast<std::size_t>(r)]) acc = true;
            for (auto [lbl, to] : a.out[static_cast<std::size_t>(r)])
                if (lbl != Nfa::kEps) arcs.emplace(lbl, to);
        }
        b.accepting[static_cast<std::size_t>(q)] = acc ? 1 : 0;
        for (auto [lbl, to] : arcs) b.add_transition(q, lbl, to);
    }
    return b;
}

Nfa trim(const Nfa& a) {
    int n = a.num_states();
    std::vector<char> fwd(static_cast<std::size_t>(n), 0), bwd(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> stack = mask_to_list(a.initial);
        for (int q : stack) fwd[static_cast<std::size_t>(q)] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)]) {
                (void)lbl;
                if (!fwd[static_cast<std::size_t>(to)]) {
                    fwd[static_cast<std::size_t>(to)] = 1;
                    stack.push_back(to);
                }
            }
        }
    }
    {
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q)
            for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)]) {
                (void)lbl;
                rev[static_cast<std::size_t>(to)].push_back(q);
            }
        std::vector<int> stack = mask_to_list(a.accepting);
        for (int q : stack) bwd[static_cast<std::size_t>(q)] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int p : rev[static_cast<std::size_t>(q)])
                if (!bwd[static_cast<std::size_t>(p)]) {
                    bwd[static_cast<std::size_t>(p)] = 1;
                    stack.push_back(p);
                }
        }
    }
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    Nfa b(a.alphabet_size);
    for (int q = 0; q < n; ++q)
        if (fwd[static_cast<std::size_t>(q)] && bwd[static_cast<std::size_t>(q)])
            remap[static_cast<std::size_t>(q)] = b.add_state();
    for (int q = 0; q < n; ++q) {
        int nq = remap[static_cast<std::size_t>(q)];
        if (nq < 0) continue;
        b.initial[static_cast<std::size_t>(nq)] = a.initial[static_cast<std::size_t>(q)];
        b.accepting[static_cast<std::size_t>(nq)] = a.accepting[static_cast<std::size_t>(q)];
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
            if (remap[static_cast<std::size_t>(to)] >= 0)
                b.add_transition(nq, lbl, remap[static_cast<std::size_t>(to)]);
    }
    return b;
}

Nfa reverse(const Nfa& a) {
    Nfa b(a.alphabet_size);
    for (int q = 0; q < a.num_states(); ++q) b.add_state();
    b.initial = a.accepting;
    b.accepting = a.initial;
    for (int q = 0; q < a.num_states(); ++q)
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)]) b.add_transition(to, lbl, q);
    return b;
}

namespace {

// Copies `src` into `dst` with fresh state numbers; returns the offset.
int splice(Nfa& dst, const Nfa& src) {
    int base = dst.num_states();
    for (int q = 0; q < src.num_states(); ++q) dst.add_state();
    for (int q = 0; q < src.num_states(); ++q)
        for (auto [lbl, to] : src.out[static_cast<std::size_t>(q)])
            dst.add_transition(base + q, lbl, base + to);
    return base;
}

} // namespace

Nfa star(const Nfa& a) {
    Nfa b(a.alphabet_size);
    int hub = b.add_state();
    b.initial[static_cast<std::size_t>(hub)] = 1;
    b.accepting[static_cast<std::size_t>(hub)] = 1;
    int base = splice(b, a);
    for (int q = 0; q < a.num_states(); ++q) {
        if (a.initial[static_cast<std::size_t>(q)]) b.add_transition(hub, Nfa::kEps, base + q);
        if (a.accepting[static_cast<std::size_t>(q)]) b.add_transition(base + q, Nfa::kEps, hub);
    }
    return b;
}

Nfa concat(const Nfa& a, const Nfa& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("concat: alphabet mismatch");
    Nfa c(a.alphabet_size);
    int ba = splice(c, a);
    int bb = splice(c, b);
    for (int q = 0; q < a.num_states(); ++q)
        if (a.initial[static_cast<std::size_t>(q)]) c.initial[static_cast<std::size_t>(ba + q)] = 1;
    for (int q = 0; q < b.num_states(); ++q)
        if (b.accepting[static_cast<std::size_t>(q)])
            c.accepting[static_cast<std::size_t>(bb + q)] = 1;
    for (int q = 0; q < a.num_states(); ++q)
        if (a.accepting[static_cast<std::size_t>(q)])
            for (int r = 0; r < b.num_states(); ++r)
                if (b.initial[static_cast<std::size_t>(r)])
                    c.add_transition(ba + q, Nfa::kEps, bb + r);
    return c;
}

Nfa nfa_union(const Nfa& a, const Nfa& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("union: alphabet mismatch");
    Nfa c(a.alphabet_size);
    int ba = splice(c, a);
    int bb = splice(c, b);
    for (int q = 0; q < a.num_states(); ++q) {
        c.initial[static_cast<std::size_t>(ba + q)] = a.initial[static_cast<std::size_t>(q)];
        c.accepting[static_cast<std::size_t>(ba + q)] = a.accepting[static_cast<std::size_t>(q)];
    }
    for (int q = 0; q < b.num_states(); ++q) {
        c.initial[static_cast<std::size_t>(bb + q)] = b.initial[static_cast<std::size_t>(q)];
        c.accepting[static_cast<std::size_t>(bb + q)] = b.accepting[static_cast<std::size_t>(q)];
    }
    return c;
}

Nfa intersect(const Nfa& a0, const Nfa& b0) {
    if (a0.alphabet_size != b0.alphabet_size)
        throw std::invalid_argument("intersect: alphabet mismatch");
    Nfa a = remove_epsilon(a0), b = remove_epsilon(b0);
    Nfa c(a.alphabet_size);
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> todo;
    auto get = [&](int p, int q) {
        auto key = std::make_pair(p, q);
        auto it = id.find(key);
        if (it != id.end()) return it->second;
        int s = c.add_state();
        id.emplace(key, s);
        c.accepting[static_cast<std::size_t>(s)] =
            (a.accepting[static_cast<std::size_t>(p)] && b.accepting[static_cast<std::size_t>(q)])
                ? 1
                : 0;
        todo.emplace_back(p, q);
        return s;
    };
    for (int p = 0; p < a.num_states(); ++p)
        for (int q = 0; q < b.num_states(); ++q)
            if (a.initial[static_cast<std::size_t>(p)] && b.initial[static_cast<std::size_t>(q)])
                c.initial[static_cast<std::size_t>(get(p, q))] = 1;
    while (!todo.empty()) {
        auto [p, q] = todo.front();
        todo.pop_front();
        int s = id.at({p, q});
        for (auto [la, pa] : a.out[static_cast<std::size_t>(p)])
            for (auto [lb, qb] : b.out[static_cast<std::size_t>(q)])
                if (la == lb) c.add_transition(s, la, get(pa, qb));
    }
    return c;
}

Nfa map_letters(const Nfa& a, const std::vector<Symbol>& perm) {
    Nfa b(a.alphabet_size);
    for (int q = 0; q < a.num_states(); ++q) b.add_state();
    b.initial = a.initial;
    b.accepting = a.accepting;
    for (int q = 0; q < a.num_states(); ++q)
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
            b.add_transition(q, lbl == Nfa::kEps ? Nfa::kEps : perm[static_cast<std::size_t>(lbl)],
                             to);
    return b;
}

namespace {

// Pairs (p, q) such that some word leads from (an initial of a, an initial
// of b) to (p, q) reading the same letters in both automata (both eps-free).
std::set<std::pair<int, int>> synchronized_reach(const Nfa& a, const Nfa& b) {
    std::set<std::pair<int, int>> seen;
    std::deque<std::pair<int, int>> todo;
    for (int p = 0; p < a.num_states(); ++p)
        for (int q = 0; q < b.num_states(); ++q)
            if (a.initial[static_cast<std::size_t>(p)] && b.initial[static_cast<std::size_t>(q)])
                if (seen.emplace(p, q).second) todo.emplace_back(p, q);
    while (!todo.empty()) {
        auto [p, q] = todo.front();
        todo.pop_front();
        for (auto [la, pa] : a.out[static_cast<std::size_t>(p)])
            for (auto [lb, qb] : b.out[static_cast<std::size_t>(q)])
                if (la == lb)
                    if (seen.emplace(pa, qb).second) todo.emplace_back(pa, qb);
    }
    return seen;
}

} // namespace

Nfa quotient(const Nfa& lang, const Nfa& by, QuotientSide side) {
    if (lang.alphabet_size != by.alphabet_size)
        throw std::invalid_argument("quotient: alphabet mismatch");
    Nfa a = remove_epsilon(lang);
    Nfa b = remove_epsilon(by);
    if (side == QuotientSide::left) {
        auto reach = synchronized_reach(a, b);
        Nfa c = a;
        std::fill(c.initial.begin(), c.initial.end(), 0);
        for (auto [p, q] : reach)
            if (b.accepting[static_cast<std::size_t>(q)])
                c.initial[static_cast<std::size_t>(p)] = 1;
        return c;
    }
    // right quotient via the left quotient of the reversals
    Nfa r = quotient(reverse(a), reverse(b), QuotientSide::left);
    return reverse(r);
}

Nfa factor_closure(const Nfa& a) {
    Nfa b = trim(a);
    std::fill(b.initial.begin(), b.initial.end(), 1);
    std::fill(b.accepting.begin(), b.accepting.end(), 1);
    return b;
}

bool accepts(const Nfa& a, const Word& w) {
    std::vector<int> cur = eps_closure(a, mask_to_list(a.initial));
    for (Symbol s : w) {
        std::set<int> next;
        for (int q : cur)
            for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
                if (lbl == s) next.insert(to);
        cur = eps_closure(a, std::vector<int>(next.begin(), next.end()));
        if (cur.empty()) return false;
    }
    for (int q : cur)
        if (a.accepting[static_cast<std::size_t>(q)]) return true;
    return false;
}

bool is_empty(const Nfa& a) {
    std::vector<int> stack = mask_to_list(a.initial);
    std::vector<char> seen(static_cast<std::size_t>(a.num_states()), 0);
    for (int q : stack) seen[static_cast<std::size_t>(q)] = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        if (a.accepting[static_cast<std::size_t>(q)]) return false;
        for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)]) {
            (void)lbl;
            if (!seen[static_cast<std::size_t>(to)]) {
                seen[static_cast<std::size_t>(to)] = 1;
                stack.push_back(to);
            }
        }
    }
    return true;
}

Dfa determinize(const Nfa& a0, long state_cap) {
    Nfa a = remove_epsilon(a0);
    int sigma = a.alphabet_size;
    Dfa d;
    d.alphabet_size = sigma;
    std::map<std::vector<int>, int> id;
    std::deque<std::vector<int>> todo;
    auto get = [&](std::vector<int> subset) {
        auto it = id.find(subset);
        if (it != id.end()) return it->second;
        int s = static_cast<int>(id.size());
        if (s >= state_cap)
            throw ResourceLimitError("determinize: state cap " + std::to_string(state_cap) +
                                     " exceeded");
        id.emplace(subset, s);
        bool acc = false;
        for (int q : subset)
            if (a.accepting[static_cast<std::size_t>(q)]) acc = true;
        d.accepting.push_back(acc ? 1 : 0);
        d.delta.resize(static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(sigma), -1);
        todo.push_back(std::move(subset));
        return s;
    };
    d.initial = get(mask_to_list(a.initial));
    while (!todo.empty()) {
        std::vector<int> subset = std::move(todo.front());
        todo.pop_front();
        int s = id.at(subset);
        for (Symbol c = 0; c < sigma; ++c) {
            std::set<int> next;
            for (int q : subset)
                for (auto [lbl, to] : a.out[static_cast<std::size_t>(q)])
                    if (lbl == c) next.insert(to);
            int t = get(std::vector<int>(next.begin(), next.end()));
            d.delta[static_cast<std::size_t>(s) * static_cast<std::size_t>(sigma) +
                    static_cast<std::size_t>(c)] = t;
        }
    }
    d.num_states = static_cast<int>(id.size());
    return d;
}

Dfa minimize(const Dfa& d) {
    int n = d.num_states, sigma = d.alphabet_size;
    // Moore partition refinement
    std::vector<int> cls(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) cls[static_cast<std::size_t>(q)] = d.accepting[static_cast<std::size_t>(q)] ? 1 : 0;
    int num_classes = 2;
    for (;;) {
        std::map<std::vector<int>, int> sig_id;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(sigma) + 1);
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (Symbol c = 0; c < sigma; ++c)
                sig.push_back(cls[static_cast<std::size_t>(d.step(q, c))]);
            auto it = sig_id.find(sig);
            if (it == sig_id.end())
                it = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size())).first;
            next_cls[static_cast<std::size_t>(q)] = it->second;
        }
        int next_num = static_cast<int>(sig_id.size());
        cls.swap(next_cls);
        if (next_num == num_classes) break;
        num_classes = next_num;
    }
    // BFS renumber from the initial class; unreachable classes drop out
    Dfa m;
    m.alphabet_size = sigma;
    std::vector<int> renum(static_cast<std::size_t>(num_classes), -1);
    std::vector<int> rep; // representative state per new index
    std::deque<int> todo;
    auto visit = [&](int q) {
        int c = cls[static_cast<std::size_t>(q)];
        if (renum[static_cast<std::size_t>(c)] >= 0) return renum[static_cast<std::size_t>(c)];
        int s = static_cast<int>(rep.size());
        renum[static_cast<std::size_t>(c)] = s;
        rep.push_back(q);
        todo.push_back(q);
        return s;
    };
    if (n == 0) { // degenerate; represent the empty language with one sink
        m.num_states = 1;
        m.initial = 0;
        m.accepting = {0};
        m.delta.assign(static_cast<std::size_t>(sigma), 0);
        return m;
    }
    m.initial = visit(d.initial);
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (Symbol c = 0; c < sigma; ++c) visit(d.step(q, c));
    }
    m.num_states = static_cast<int>(rep.size());
    m.accepting.resize(static_cast<std::size_t>(m.num_states));
    m.delta.resize(static_cast<std::size_t>(m.num_states) * static_cast<std::size_t>(sigma));
    for (int s = 0; s < m.num_states; ++s) {
        int q = rep[static_cast<std::size_t>(s)];
        m.accepting[static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(q)];
        for (Symbol c = 0; c < sigma; ++c)
            m.delta[static_cast<std::size_t>(s) * static_cast<std::size_t>(sigma) +
                    static_cast<std::size_t>(c)] =
                renum[static_cast<std::size_t>(cls[static_cast<std::size_t>(d.step(q, c))])];
    }
    return m;
}

Dfa to_min_dfa(const Nfa& a, long state_cap) { return minimize(determinize(a, state_cap)); }

Nfa to_nfa(const Dfa& d) {
    Nfa a(d.alphabet_size);
    for (int q = 0; q < d.num_states; ++q) a.add_state();
    a.initial[static_cast<std::size_t>(d.initial)] = 1;
    for (int q = 0; q < d.num_states; ++q) {
        a.accepting[static_cast<std::size_t>(q)] = d.accepting[static_cast<std::size_t>(q)];
        for (Symbol c = 0; c < d.alphabet_size; ++c) a.add_transition(q, c, d.step(q, c));
    }
    return a;
}

Nfa complement(const Nfa& a, long state_cap) {
    Dfa d = to_min_dfa(a, state_cap);
    for (auto& f : d.accepting) f = f ? 0 : 1;
    return to_nfa(d);
}

Nfa difference(const Nfa& a, const Nfa& b, long state_cap) {
    return intersect(a, complement(b, state_cap));
}

bool dfa_accepts(const Dfa& d, const Word& w) {
    int q = d.initial;
    for (Symbol s : w) q = d.step(q, s);
    return d.accepting[static_cast<std::size_t>(q)];
}

bool dfa_is_empty(const Dfa& d) {
    std::vector<char> seen(static_cast<std::size_t>(d.num_states), 0);
    std::vector<int> stack{d.initial};
    seen[static_cast<std::size_t>(d.initial)] = 1;
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        if (d.accepting[static_cast<std::size_t>(q)]) return false;
        for (Symbol c = 0; c < d.alphabet_size; ++c) {
            int t = d.step(q, c);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                stack.push_back(t);
            }
        }
    }
    return true;
}

std::string canonical_key(const Dfa& min_dfa) {
    std::string key = std::to_string(min_dfa.num_states) + ";" + std::to_string(min_dfa.initial);
    for (int q = 0; q < min_dfa.num_states; ++q) {
        key += min_dfa.accepting[static_cast<std::size_t>(q)] ? "|F" : "|.";
        for (Symbol c = 0; c < min_dfa.alphabet_size; ++c)
            key += "," + std::to_string(min_dfa.step(q, c));
    }
    return key;
}

bool dfa_equal(const Dfa& d1, const Dfa& d2) {
    return canonical_key(minimize(d1)) == canonical_key(minimize(d2));
}

bool language_equal(const Nfa& a, const Nfa& b, long state_cap) {
    return dfa_equal(determinize(a, state_cap), determinize(b, state_cap));
}

bool language_subset(const Nfa& a, const Nfa& b, long state_cap) {
    return is_empty(difference(a, b, state_cap));
}

std::optional<Word> shortest_word(const Nfa& a, long state_cap) {
    Dfa d = to_min_dfa(a, state_cap);
    std::vector<int> parent(static_cast<std::size_t>(d.num_states), -1);
    std::vector<Symbol> via(static_cast<std::size_t>(d.num_states), -1);
    std::vector<char> seen(static_cast<std::size_t>(d.num_states), 0);
    std::deque<int> todo{d.initial};
    seen[static_cast<std::size_t>(d.initial)] = 1;
    auto path_to = [&](int q) {
        Word w;
        while (parent[static_cast<std::size_t>(q)] >= 0) {
            w.push_back(via[static_cast<std::size_t>(q)]);
            q = parent[static_cast<std::size_t>(q)];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    if (d.accepting[static_cast<std::size_t>(d.initial)]) return Word{};
    while (!todo.empty()) {
        int q = todo.front();
        todo.pop_front();
        for (Symbol c = 0; c < d.alphabet_size; ++c) {
            int t = d.step(q, c);
            if (seen[static_cast<std::size_t>(t)]) continue;
            seen[static_cast<std::size_t>(t)] = 1;
            parent[static_cast<std::size_t>(t)] = q;
            via[static_cast<std::size_t>(t)] = c;
            if (d.accepting[static_cast<std::size_t>(t)]) return path_to(t);
            todo.push_back(t);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Word>> finite_language(const Dfa& d) {
    // restrict to useful states; the language is finite iff that part is acyclic
    int n = d.num_states;
    std::vector<char> fwd(static_cast<std::size_t>(n), 0), useful(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> stack{d.initial};
        fwd[static_cast<std::size_t>(d.initial)] = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (Symbol c = 0; c < d.alphabet_size; ++c) {
                int t = d.step(q, c);
                if (!fwd[static_cast<std::size_t>(t)]) {
                    fwd[static_cast<std::size_t>(t)] = 1;
                    stack.push_back(t);
                }
            }
        }
    }
    {
        std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
        std::vector<int> stack;
        for (int q = 0; q < n; ++q) {
            for (Symbol c = 0; c < d.alphabet_size; ++c)
                rev[static_cast<std::size_t>(d.step(q, c))].push_back(q);
            if (d.accepting[static_cast<std::size_t>(q)] && fwd[static_cast<std::size_t>(q)]) {
                useful[static_cast<std::size_t>(q)] = 1;
                stack.push_back(q);
            }
        }
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int p : rev[static_cast<std::size_t>(q)])
                if (fwd[static_cast<std::size_t>(p)] && !useful[static_cast<std::size_t>(p)]) {
                    useful[static_cast<std::size_t>(p)] = 1;
                    stack.push_back(p);
                }
        }
    }
    // cycle detection on useful states
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, Symbol>> stack;
    for (int start = 0; start < n; ++start) {
        if (!useful[static_cast<std::size_t>(start)] || color[static_cast<std::size_t>(start)])
            continue;
        stack.emplace_back(start, 0);
        color[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& [q, c] = stack.back();
            if (c >= d.alphabet_size) {
                color[static_cast<std::size_t>(q)] = 2;
                stack.pop_back();
                continue;
            }
            int t = d.step(q, c++);
            if (!useful[static_cast<std::size_t>(t)]) continue;
            if (color[static_cast<std::size_t>(t)] == 1) return std::nullopt; // cycle
            if (color[static_cast<std::size_t>(t)] == 0) {
                color[static_cast<std::size_t>(t)] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }
    // enumerate by DFS; sort length-lex
    std::vector<Word> words;
    Word cur;
    auto dfs = [&](auto&& self, int q) -> void {
        if (d.accepting[static_cast<std::size_t>(q)]) words.push_back(cur);
        for (Symbol c = 0; c < d.alphabet_size; ++c) {
            int t = d.step(q, c);
            if (!useful[static_cast<std::size_t>(t)]) continue;
            cur.push_back(c);
            self(self, t);
            cur.pop_back();
        }
    };
    if (useful[static_cast<std::size_t>(d.initial)]) dfs(dfs, d.initial);
    std::sort(words.begin(), words.end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return words;
}

} // namespace vlcode
