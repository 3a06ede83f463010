#include "vlcode/conditions.hpp"

namespace vlcode {

namespace {

void require_code(const Nfa& x, const Caps& caps) {
    if (!sardinas_patterson(x, caps.states).is_code)
        throw NotACodeError("input set is not a code");
}

void check_factor_k(int k, const Caps& caps) {
    if (k > caps.max_factor_k)
        throw ResourceLimitError("factor tolerance " + std::to_string(k) +
                                 " exceeds the cap (" + std::to_string(caps.max_factor_k) +
                                 "); raise --max-factor-k");
}

int family_distance(const RelationSpec& spec, const Word& a, const Word& b) {
    switch (spec.family) {
    case Family::prefix: return prefix_distance(a, b);
    case Family::suffix: return suffix_distance(a, b);
    case Family::factor: return factor_distance(a, b);
    case Family::theta: return morphism_distance(*spec.morphism, a, b);
    }
    return 0;
}

// c1 at the given tolerance, assuming X is already known to be a code.
ConditionResult detection_at(const Nfa& x, const RelationSpec& spec, int k, const Caps& caps) {
    int sigma = x.alphabet_size;
    if (spec.family == Family::theta) {
        const PermMorphism& m = *spec.morphism;
        Nfa z = intersect(x, morphism_image(m, x, MapDirection::inverse));
        std::optional<Word> moved = nonfixed_word(z, m);
        if (!moved) return ConditionResult{true, std::nullopt};
        Word y = morphism_apply(m, *moved);
        return ConditionResult{false, WitnessPair{*moved, y, 1}};
    }
    RelationSpec at = spec;
    at.k = k;
    Nfa img = strict_image(x, at, caps);
    Nfa bad = intersect(img, x);
    std::optional<Word> y = shortest_word(bad, caps.states);
    if (!y) return ConditionResult{true, std::nullopt};
    Nfa yl = Nfa::single_word(*y, sigma);
    Nfa partners(sigma);
    switch (spec.family) {
    case Family::prefix:
        partners = image(t_inverse(strict_prefix_relation(k, sigma)), yl);
        break;
    case Family::suffix:
        partners = reverse(image(t_inverse(strict_prefix_relation(k, sigma)),
                                 Nfa::single_word(reversed(*y), sigma)));
        break;
    case Family::factor:
        partners = strict_factor_image(yl, k, caps.states, caps.rewrite_count);
        break;
    case Family::theta: break; // handled above
    }
    Word xw = *shortest_word(intersect(partners, x), caps.states);
    return ConditionResult{false, WitnessPair{xw, *y, family_distance(spec, xw, *y)}};
}

std::pair<ConditionResult, SpResult> c4_of(const Nfa& x, const RelationSpec& spec,
                                           const Caps& caps) {
    Nfa ball(x.alphabet_size);
    if (spec.family == Family::theta)
        ball = nfa_union(x, morphism_image(*spec.morphism, x, MapDirection::forward));
    else
        ball = nfa_union(x, strict_image(x, spec, caps));
    SpResult sp = sardinas_patterson(ball, caps.states);
    return {ConditionResult{sp.is_code, std::nullopt}, sp};
}

} // namespace

Nfa strict_image(const Nfa& x, const RelationSpec& spec, const Caps& caps) {
    int sigma = x.alphabet_size;
    switch (spec.family) {
    case Family::prefix:
        return image(strict_prefix_relation(spec.k, sigma), x);
    case Family::suffix:
        return reverse(image(strict_prefix_relation(spec.k, sigma), reverse(x)));
    case Family::factor:
        check_factor_k(spec.k, caps);
        return strict_factor_image(x, spec.k, caps.states, caps.rewrite_count);
    case Family::theta:
        throw std::invalid_argument("strict_image: not defined for the morphism family");
    }
    throw std::logic_error("strict_image: bad family");
}

ConditionResult check_c1(const Nfa& x, const RelationSpec& spec, const Caps& caps) {
    require_code(x, caps);
    return detection_at(x, spec, spec.k, caps);
}

ConditionResult check_c2(const Nfa& x, const RelationSpec& spec, const Caps& caps) {
    require_code(x, caps);
    if (spec.family == Family::theta) return detection_at(x, spec, 1, caps);
    return detection_at(x, spec, 2 * spec.k, caps);
}

ConditionResult check_c3(const Nfa& x, const RelationSpec& spec, const Caps& caps) {
    require_code(x, caps);
    ConditionResult det = detection_at(x, spec, spec.k, caps);
    bool holds = det.holds && is_complete(x, caps.states);
    return ConditionResult{holds, det.witness};
}

std::pair<ConditionResult, SpResult> check_c4(const Nfa& x, const RelationSpec& spec,
                                              const Caps& caps) {
    require_code(x, caps);
    return c4_of(x, spec, caps);
}

Report analyze(const Nfa& x, const RelationSpec& spec, const Caps& caps, unsigned mask) {
    Report rep;
    rep.spec = spec;
    rep.sp = sardinas_patterson(x, caps.states);
    rep.is_code = rep.sp.is_code;
    rep.mu = bernoulli_measure(x, caps.states);
    rep.complete = is_complete(x, caps.states);
    if (!rep.is_code) return rep;
    std::optional<ConditionResult> det;
    auto detection = [&]() -> const ConditionResult& {
        if (!det) det = detection_at(x, spec, spec.k, caps);
        return *det;
    };
    if (mask & 0x1) rep.c1 = detection();
    if (mask & 0x2)
        rep.c2 = (spec.family == Family::theta) ? detection()
                                                : detection_at(x, spec, 2 * spec.k, caps);
    if (mask & 0x4)
        rep.c3 = ConditionResult{detection().holds && rep.complete, detection().witness};
    if (mask & 0x8) {
        auto [c4, trace] = c4_of(x, spec, caps);
        rep.c4 = c4;
        rep.c4_trace = std::move(trace);
    }
    return rep;
}

} // namespace vlcode
