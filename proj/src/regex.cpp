#include "vlcode/regex.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace vlcode {

namespace {

struct Parser {
    const std::string& text;
    const Alphabet& alphabet;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Nfa parse_expr() {
        Nfa acc = parse_term();
        while (peek() == '+') {
            ++pos;
            acc = nfa_union(acc, parse_term());
        }
        return acc;
    }

    Nfa parse_term() {
        Nfa acc = parse_factor();
        while (!at_end() && peek() != '+' && peek() != ')') acc = concat(acc, parse_factor());
        return acc;
    }

    Nfa parse_factor() {
        Nfa a = parse_atom();
        while (peek() == '*') {
            ++pos;
            a = star(a);
        }
        return a;
    }

    Nfa parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            std::size_t open = pos++;
            Nfa a = parse_expr();
            if (peek() != ')') throw ParseError("unbalanced '(' at position " + std::to_string(open), open);
            ++pos;
            return a;
        }
        if (c == ')') throw ParseError("unexpected ')' at position " + std::to_string(pos), pos);
        if (c == '*') throw ParseError("'*' needs an operand at position " + std::to_string(pos), pos);
        if (c == '_') {
            ++pos;
            return Nfa::epsilon_word(alphabet.size());
        }
        // longest declared symbol name at this position
        std::optional<Symbol> best;
        std::size_t best_len = 0;
        for (Symbol s = 0; s < alphabet.size(); ++s) {
            const std::string& name = alphabet.name(s);
            if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
                best = s;
                best_len = name.size();
            }
        }
        if (!best)
            throw ParseError("unknown symbol at position " + std::to_string(pos) + " in regex",
                             pos);
        pos += best_len;
        return Nfa::single_word({*best}, alphabet.size());
    }
};

// Expression tree used by the printer; simplifications applied on build.
struct Re;
using ReP = std::shared_ptr<const Re>;
struct Re {
    enum Kind { none, word, alt, cat, star_ } kind = none;
    Word w;          // kind == word
    ReP lhs, rhs;    // alt / cat
    ReP sub;         // star_
};

ReP re_none() {
    static ReP n = std::make_shared<Re>(Re{Re::none, {}, nullptr, nullptr, nullptr});
    return n;
}
ReP re_word(Word w) {
    auto r = std::make_shared<Re>();
    r->kind = Re::word;
    r->w = std::move(w);
    return r;
}
ReP re_alt(ReP a, ReP b) {
    if (a->kind == Re::none) return b;
    if (b->kind == Re::none) return a;
    auto r = std::make_shared<Re>();
    r->kind = Re::alt;
    r->lhs = std::move(a);
    r->rhs = std::move(b);
    return r;
}
ReP re_cat(ReP a, ReP b) {
    if (a->kind == Re::none || b->kind == Re::none) return re_none();
    if (a->kind == Re::word && a->w.empty()) return b;
    if (b->kind == Re::word && b->w.empty()) return a;
    if (a->kind == Re::word && b->kind == Re::word) {
        Word w = a->w;
        w.insert(w.end(), b->w.begin(), b->w.end());
        return re_word(std::move(w));
    }
    auto r = std::make_shared<Re>();
    r->kind = Re::cat;
    r->lhs = std::move(a);
    r->rhs = std::move(b);
    return r;
}
ReP re_star(ReP a) {
    if (a->kind == Re::none || (a->kind == Re::word && a->w.empty())) return re_word({});
    if (a->kind == Re::star_) return a;
    auto r = std::make_shared<Re>();
    r->kind = Re::star_;
    r->sub = std::move(a);
    return r;
}

// precedence: alt(0) < cat(1) < star(2) < atom(3)
void print_re(const Re& r, const Alphabet& ab, int parent_prec, std::string& out) {
    switch (r.kind) {
    case Re::none:
        out += "#";
        return;
    case Re::word:
        if (r.w.empty()) {
            out += "_";
        } else if (parent_prec >= 2 && r.w.size() > 1) {
            out += "(";
            for (Symbol s : r.w) out += ab.name(s);
            out += ")";
        } else {
            for (Symbol s : r.w) out += ab.name(s);
        }
        return;
    case Re::alt: {
        bool paren = parent_prec > 0;
        if (paren) out += "(";
        print_re(*r.lhs, ab, 0, out);
        out += "+";
        print_re(*r.rhs, ab, 0, out);
        if (paren) out += ")";
        return;
    }
    case Re::cat: {
        bool paren = parent_prec > 1;
        if (paren) out += "(";
        print_re(*r.lhs, ab, 1, out);
        print_re(*r.rhs, ab, 1, out);
        if (paren) out += ")";
        return;
    }
    case Re::star_: {
        print_re(*r.sub, ab, 2, out);
        out += "*";
        return;
    }
    }
}

} // namespace

Nfa compile_regex(const std::string& expr, const Alphabet& alphabet) {
    Parser p{expr, alphabet};
    if (p.at_end()) throw ParseError("empty regular expression", 0);
    Nfa a = p.parse_expr();
    if (!p.at_end())
        throw ParseError("trailing input at position " + std::to_string(p.pos), p.pos);
    return a;
}

std::string regex_of(const Nfa& a, const Alphabet& alphabet, long state_cap) {
    Dfa dm = to_min_dfa(a, state_cap);
    Nfa d = trim(to_nfa(dm)); // drop the dead sink
    int n = d.num_states();
    if (n == 0) return "#";
    // generalized automaton on states 0..n-1 plus source n and sink n+1
    int src = n, snk = n + 1;
    std::map<std::pair<int, int>, ReP> edge;
    auto get = [&](int p, int q) {
        auto it = edge.find({p, q});
        return it == edge.end() ? re_none() : it->second;
    };
    auto add = [&](int p, int q, ReP r) {
        auto& slot = edge[{p, q}];
        slot = slot ? re_alt(slot, std::move(r)) : std::move(r);
    };
    for (int q = 0; q < n; ++q) {
        if (d.initial[static_cast<std::size_t>(q)]) add(src, q, re_word({}));
        if (d.accepting[static_cast<std::size_t>(q)]) add(q, snk, re_word({}));
        for (auto [lbl, to] : d.out[static_cast<std::size_t>(q)]) add(q, to, re_word({lbl}));
    }
    for (int r = n - 1; r >= 0; --r) {
        ReP loop = re_star(get(r, r));
        std::vector<std::pair<int, ReP>> in, outgoing;
        for (auto& [key, re] : edge) {
            if (key.second == r && key.first != r) in.emplace_back(key.first, re);
            if (key.first == r && key.second != r) outgoing.emplace_back(key.second, re);
        }
        for (auto& [p, rin] : in)
            for (auto& [q, rout] : outgoing) add(p, q, re_cat(rin, re_cat(loop, rout)));
        for (auto it = edge.begin(); it != edge.end();)
            if (it->first.first == r || it->first.second == r)
                it = edge.erase(it);
            else
                ++it;
    }
    ReP final_re = get(src, snk);
    std::string out;
    print_re(*final_re, alphabet, 0, out);
    return out;
}

} // namespace vlcode
