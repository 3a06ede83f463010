#include "vlcode/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace vlcode {

int Transducer::add_state() {
    out.emplace_back();
    initial.push_back(0);
    accepting.push_back(0);
    return num_states() - 1;
}

void Transducer::add_transition(int from, Symbol in, Symbol out_sym, int to) {
    out[static_cast<std::size_t>(from)].emplace_back(in, out_sym, to);
}

int RawTransducer::add_state() {
    ++num_states;
    initial.push_back(0);
    accepting.push_back(0);
    return num_states - 1;
}

void RawTransducer::add_arc(int from, Word in, Word out, int to) {
    arcs.push_back(Arc{from, std::move(in), std::move(out), to});
}

Transducer normalize(const RawTransducer& raw) {
    Transducer t(raw.alphabet_size);
    for (int q = 0; q < raw.num_states; ++q) t.add_state();
    t.initial = raw.initial;
    t.accepting = raw.accepting;
    std::vector<std::vector<int>> silent(static_cast<std::size_t>(raw.num_states));
    for (const auto& arc : raw.arcs) {
        std::size_t steps = std::max(arc.in.size(), arc.out.size());
        if (steps == 0) {
            if (arc.from != arc.to) silent[static_cast<std::size_t>(arc.from)].push_back(arc.to);
            continue; // a silent self-loop adds nothing
        }
        int cur = arc.from;
        for (std::size_t i = 0; i < steps; ++i) {
            Symbol in = i < arc.in.size() ? arc.in[i] : Transducer::kEps;
            Symbol out = i < arc.out.size() ? arc.out[i] : Transducer::kEps;
            int next = (i + 1 == steps) ? arc.to : t.add_state();
            if (next >= static_cast<int>(silent.size())) silent.emplace_back();
            t.add_transition(cur, in, out, next);
            cur = next;
        }
    }
    if (std::none_of(silent.begin(), silent.end(), [](const auto& v) { return !v.empty(); }))
        return t;
    // eliminate silent edges exactly like nfa epsilon removal
    Transducer u(t.alphabet_size);
    for (int q = 0; q < t.num_states(); ++q) u.add_state();
    u.initial = t.initial;
    for (int q = 0; q < t.num_states(); ++q) {
        std::vector<char> in_cl(static_cast<std::size_t>(t.num_states()), 0);
        std::vector<int> stack{q};
        in_cl[static_cast<std::size_t>(q)] = 1;
        bool acc = false;
        std::set<std::tuple<Symbol, Symbol, int>> arcs;
        while (!stack.empty()) {
            int r = stack.back();
            stack.pop_back();
            if (t.accepting[static_cast<std::size_t>(r)]) acc = true;
            for (auto [a, b, to] : t.out[static_cast<std::size_t>(r)]) arcs.emplace(a, b, to);
            if (r < static_cast<int>(silent.size()))
                for (int to : silent[static_cast<std::size_t>(r)])
                    if (!in_cl[static_cast<std::size_t>(to)]) {
                        in_cl[static_cast<std::size_t>(to)] = 1;
                        stack.push_back(to);
                    }
        }
        u.accepting[static_cast<std::size_t>(q)] = acc ? 1 : 0;
        for (auto [a, b, to] : arcs) u.add_transition(q, a, b, to);
    }
    return u;
}

RawTransducer reverse_raw(const RawTransducer& raw) {
    RawTransducer r;
    r.alphabet_size = raw.alphabet_size;
    r.num_states = raw.num_states;
    r.initial = raw.accepting;
    r.accepting = raw.initial;
    for (const auto& arc : raw.arcs)
        r.add_arc(arc.to, Word(arc.in.rbegin(), arc.in.rend()),
                  Word(arc.out.rbegin(), arc.out.rend()), arc.from);
    return r;
}

Transducer identity_transducer(int sigma) {
    Transducer t(sigma);
    int q = t.add_state();
    t.initial[static_cast<std::size_t>(q)] = 1;
    t.accepting[static_cast<std::size_t>(q)] = 1;
    for (Symbol s = 0; s < sigma; ++s) t.add_transition(q, s, s, q);
    return t;
}

Transducer t_union(const Transducer& a, const Transducer& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("t_union: alphabet mismatch");
    Transducer c(a.alphabet_size);
    for (int q = 0; q < a.num_states() + b.num_states(); ++q) c.add_state();
    for (int q = 0; q < a.num_states(); ++q) {
        c.initial[static_cast<std::size_t>(q)] = a.initial[static_cast<std::size_t>(q)];
        c.accepting[static_cast<std::size_t>(q)] = a.accepting[static_cast<std::size_t>(q)];
        for (auto [x, y, to] : a.out[static_cast<std::size_t>(q)]) c.add_transition(q, x, y, to);
    }
    int off = a.num_states();
    for (int q = 0; q < b.num_states(); ++q) {
        c.initial[static_cast<std::size_t>(off + q)] = b.initial[static_cast<std::size_t>(q)];
        c.accepting[static_cast<std::size_t>(off + q)] = b.accepting[static_cast<std::size_t>(q)];
        for (auto [x, y, to] : b.out[static_cast<std::size_t>(q)])
            c.add_transition(off + q, x, y, off + to);
    }
    return c;
}

Transducer t_inverse(const Transducer& a) {
    Transducer c(a.alphabet_size);
    for (int q = 0; q < a.num_states(); ++q) c.add_state();
    c.initial = a.initial;
    c.accepting = a.accepting;
    for (int q = 0; q < a.num_states(); ++q)
        for (auto [x, y, to] : a.out[static_cast<std::size_t>(q)]) c.add_transition(q, y, x, to);
    return c;
}

Transducer t_compose(const Transducer& a, const Transducer& b) {
    if (a.alphabet_size != b.alphabet_size)
        throw std::invalid_argument("t_compose: alphabet mismatch");
    RawTransducer c;
    c.alphabet_size = a.alphabet_size;
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> todo;
    auto get = [&](int p, int q) {
        auto it = id.find({p, q});
        if (it != id.end()) return it->second;
        int s = c.add_state();
        id.emplace(std::make_pair(p, q), s);
        c.initial[static_cast<std::size_t>(s)] =
            (a.initial[static_cast<std::size_t>(p)] && b.initial[static_cast<std::size_t>(q)]) ? 1
                                                                                               : 0;
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
                get(p, q);
    auto to_word = [](Symbol s) { return s == Transducer::kEps ? Word{} : Word{s}; };
    while (!todo.empty()) {
        auto [p, q] = todo.front();
        todo.pop_front();
        int s = id.at({p, q});
        for (auto [x, y, pa] : a.out[static_cast<std::size_t>(p)]) {
            if (y == Transducer::kEps) { // advance the left machine alone
                c.add_arc(s, to_word(x), {}, get(pa, q));
            } else {
                for (auto [y2, z, qb] : b.out[static_cast<std::size_t>(q)])
                    if (y2 == y) c.add_arc(s, to_word(x), to_word(z), get(pa, qb));
            }
        }
        for (auto [y2, z, qb] : b.out[static_cast<std::size_t>(q)])
            if (y2 == Transducer::kEps) c.add_arc(s, {}, to_word(z), get(p, qb));
    }
    return normalize(c);
}

bool relation_contains(const Transducer& t, const Word& w, const Word& w2) {
    std::size_t n = w.size(), m = w2.size();
    auto idx = [&](int q, std::size_t i, std::size_t j) {
        return (static_cast<std::size_t>(q) * (n + 1) + i) * (m + 1) + j;
    };
    std::vector<char> seen(static_cast<std::size_t>(t.num_states()) * (n + 1) * (m + 1), 0);
    std::vector<std::tuple<int, std::size_t, std::size_t>> stack;
    for (int q = 0; q < t.num_states(); ++q)
        if (t.initial[static_cast<std::size_t>(q)]) {
            seen[idx(q, 0, 0)] = 1;
            stack.emplace_back(q, 0, 0);
        }
    while (!stack.empty()) {
        auto [q, i, j] = stack.back();
        stack.pop_back();
        if (i == n && j == m && t.accepting[static_cast<std::size_t>(q)]) return true;
        for (auto [x, y, to] : t.out[static_cast<std::size_t>(q)]) {
            std::size_t ni = i, nj = j;
            if (x != Transducer::kEps) {
                if (i >= n || w[i] != x) continue;
                ni = i + 1;
            }
            if (y != Transducer::kEps) {
                if (j >= m || w2[j] != y) continue;
                nj = j + 1;
            }
            if (!seen[idx(to, ni, nj)]) {
                seen[idx(to, ni, nj)] = 1;
                stack.emplace_back(to, ni, nj);
            }
        }
    }
    return false;
}

Nfa image(const Transducer& t, const Nfa& x0) {
    if (t.alphabet_size != x0.alphabet_size)
        throw std::invalid_argument("image: alphabet mismatch");
    Nfa x = remove_epsilon(x0);
    Nfa r(t.alphabet_size);
    std::map<std::pair<int, int>, int> id;
    std::deque<std::pair<int, int>> todo;
    auto get = [&](int p, int q) {
        auto it = id.find({p, q});
        if (it != id.end()) return it->second;
        int s = r.add_state();
        id.emplace(std::make_pair(p, q), s);
        r.initial[static_cast<std::size_t>(s)] =
            (t.initial[static_cast<std::size_t>(p)] && x.initial[static_cast<std::size_t>(q)]) ? 1
                                                                                               : 0;
        r.accepting[static_cast<std::size_t>(s)] =
            (t.accepting[static_cast<std::size_t>(p)] && x.accepting[static_cast<std::size_t>(q)])
                ? 1
                : 0;
        todo.emplace_back(p, q);
        return s;
    };
    for (int p = 0; p < t.num_states(); ++p)
        for (int q = 0; q < x.num_states(); ++q)
            if (t.initial[static_cast<std::size_t>(p)] && x.initial[static_cast<std::size_t>(q)])
                get(p, q);
    while (!todo.empty()) {
        auto [p, q] = todo.front();
        todo.pop_front();
        int s = id.at({p, q});
        for (auto [in, out, pa] : t.out[static_cast<std::size_t>(p)]) {
            if (in == Transducer::kEps) {
                r.add_transition(s, out == Transducer::kEps ? Nfa::kEps : out, get(pa, q));
            } else {
                for (auto [lbl, qb] : x.out[static_cast<std::size_t>(q)])
                    if (lbl == in)
                        r.add_transition(s, out == Transducer::kEps ? Nfa::kEps : out,
                                         get(pa, qb));
            }
        }
    }
    return trim(r);
}

} // namespace vlcode
