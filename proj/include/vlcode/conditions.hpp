#pragma once

#include <optional>

#include "vlcode/codes.hpp"
#include "vlcode/nfa.hpp"
#include "vlcode/relations.hpp"

namespace vlcode {

enum class Family { prefix, suffix, factor, theta };

struct RelationSpec {
    Family family = Family::prefix;
    int k = 1; // fixed at 1 for the morphism family
    std::optional<PermMorphism> morphism;
};

struct Caps {
    long states = kDefaultStateCap;
    int max_factor_k = 4; // context rewrites grow steeply in k
    long rewrite_count = 1'000'000;
};

struct WitnessPair {
    Word x, y;
    int distance = 0;
};

struct ConditionResult {
    bool holds = false;
    std::optional<WitnessPair> witness; // present on failure for c1/c2
};

// Verdicts for one input set against one relation. When the input is not a
// code the four conditions are not applicable and stay empty.
struct Report {
    RelationSpec spec;
    bool is_code = false;
    SpResult sp;
    std::optional<ConditionResult> c1, c2, c3, c4;
    std::optional<SpResult> c4_trace;
    Measure mu;
    bool complete = false;
};

// { y : 1 <= d(x, y) <= k for some x in X } for the requested metric family;
// rejects the morphism family (no distance image there, see check_c1).
Nfa strict_image(const Nfa& x, const RelationSpec& spec, const Caps& caps = {});

// Error detection: no two distinct words of X within distance k. Witness on
// failure: the length-lex least offending y in X plus a matching partner.
ConditionResult check_c1(const Nfa& x, const RelationSpec& spec, const Caps& caps = {});

// Error correction: distance balls of radius k around distinct words of X
// are disjoint; decided as detection at tolerance 2k (morphism family:
// identical to c1).
ConditionResult check_c2(const Nfa& x, const RelationSpec& spec, const Caps& caps = {});

// X is maximal among the codes satisfying c1: equivalent to c1 plus
// completeness.
ConditionResult check_c3(const Nfa& x, const RelationSpec& spec, const Caps& caps = {});

// The <=k-ball image of X (including X) is itself a code.
std::pair<ConditionResult, SpResult> check_c4(const Nfa& x, const RelationSpec& spec,
                                              const Caps& caps = {});

// Full pipeline: code test first, then the requested conditions (bit n of
// `mask` enables c(n+1)), plus measure and completeness diagnostics.
Report analyze(const Nfa& x, const RelationSpec& spec, const Caps& caps = {},
               unsigned mask = 0xF);

} // namespace vlcode
