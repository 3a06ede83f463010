#include "vlcode/embedding.hpp"

#include <algorithm>

namespace vlcode {

namespace {

void require_embeddable(const Nfa& x, const Caps& caps) {
    if (!sardinas_patterson(x, caps.states).is_code)
        throw EmbedError(EmbedFailure::not_a_code, "embedding needs a code as input");
    if (is_complete(x, caps.states))
        throw EmbedError(EmbedFailure::already_complete, "input code is already complete");
}

// U = A* minus (X* union A* z A*), Y = (zU)*z, Z = X union Y.
EmbeddingResult assemble(const Nfa& x, Word z0, Word z, RelationSpec spec, const Caps& caps) {
    int sigma = x.alphabet_size;
    Nfa z_nfa = Nfa::single_word(z, sigma);
    Nfa around_z = concat(Nfa::universal(sigma), concat(z_nfa, Nfa::universal(sigma)));
    Nfa filler = difference(Nfa::universal(sigma), nfa_union(star(x), around_z), caps.states);
    Nfa added = concat(star(concat(z_nfa, filler)), z_nfa);
    Nfa completed = to_nfa(to_min_dfa(nfa_union(x, added), caps.states));
    return EmbeddingResult{std::move(z0), std::move(z), std::move(filler), std::move(added),
                           std::move(completed), std::move(spec)};
}

} // namespace

EmbeddingResult embed_generic(const Nfa& x, const Caps& caps) {
    require_embeddable(x, caps);
    Word z0 = shortest_non_factor(x, 1, caps.states);
    Word z = unbordered_extension(z0, x.alphabet_size);
    return assemble(x, std::move(z0), std::move(z), RelationSpec{}, caps);
}

EmbeddingResult embed_prefix(const Nfa& x, int k, const Caps& caps) {
    RelationSpec spec{Family::prefix, k, std::nullopt};
    require_embeddable(x, caps);
    if (!check_c1(x, spec, caps).holds)
        throw EmbedError(EmbedFailure::not_independent,
                         "input code does not satisfy c1 for the requested relation");
    Word z0 = shortest_non_factor(x, k, caps.states);
    Word z = unbordered_extension(z0, x.alphabet_size);
    return assemble(x, std::move(z0), std::move(z), spec, caps);
}

EmbeddingResult embed_factor(const Nfa& x, int k, const Caps& caps) {
    RelationSpec spec{Family::factor, k, std::nullopt};
    require_embeddable(x, caps);
    if (!check_c1(x, spec, caps).holds)
        throw EmbedError(EmbedFailure::not_independent,
                         "input code does not satisfy c1 for the requested relation");
    Word z0 = shortest_non_factor(x, k, caps.states);
    Word z = unbordered_extension(z0, x.alphabet_size);
    // anchor a^|z| b z: immune to factor-distance-k edits on either side
    Symbol a = z0.front();
    Symbol b = (a == 0) ? 1 : 0;
    Word z1(z.size(), a);
    z1.push_back(b);
    z1.insert(z1.end(), z.begin(), z.end());
    return assemble(x, std::move(z0), std::move(z1), spec, caps);
}

EmbeddingResult embed_theta(const Nfa& x, const PermMorphism& m, const Caps& caps) {
    RelationSpec spec{Family::theta, 1, m};
    require_embeddable(x, caps);
    if (!check_c1(x, spec, caps).holds)
        throw EmbedError(EmbedFailure::not_independent,
                         "input code does not satisfy c1 for the requested relation");
    if (m.kind == MorphismKind::automorphism) {
        // letter renaming cannot map the added part back onto the code
        EmbeddingResult r = embed_generic(x, caps);
        r.spec = spec;
        return r;
    }
    Word z0 = shortest_non_factor(x, 1, caps.states);
    // need |z0| >= 2 and at least two distinct letters, else the mirror image
    // of the anchor tail could reproduce z0
    bool uniform = std::all_of(z0.begin(), z0.end(), [&](Symbol s) { return s == z0.front(); });
    if (z0.size() < 2 || uniform) {
        Symbol fix = (z0.front() == 0) ? 1 : 0;
        z0.push_back(fix);
    }
    Symbol a = z0.front();
    Symbol b = (a == 0) ? 1 : 0;
    Word z2;
    Word piece = z0;
    for (int i = 0; i < m.order; ++i) {
        z2.insert(z2.end(), piece.begin(), piece.end());
        piece = morphism_apply(m, piece);
    }
    z2.push_back(a);
    z2.insert(z2.end(), static_cast<std::size_t>(m.order) * z0.size(), b);
    return assemble(x, std::move(z0), std::move(z2), spec, caps);
}

} // namespace vlcode
