#pragma once

#include "vlcode/conditions.hpp"

namespace vlcode {

enum class EmbedFailure { not_a_code, not_independent, already_complete };

class EmbedError : public std::runtime_error {
public:
    EmbedError(EmbedFailure kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    EmbedFailure kind() const { return kind_; }

private:
    EmbedFailure kind_;
};

// Completion of a non-complete code X: an unbordered word z outside the
// factors of X* is fixed, filler words U = A* minus (X* union A* z A*) are
// collected, and Z = X union (zU)*z is a complete code containing X. The
// family-specific variants pick z so that Z additionally keeps the
// detection condition c1 of X.
struct EmbeddingResult {
    Word z0, z;     // non-factor seed and the unbordered anchor built from it
    Nfa filler;     // U
    Nfa added;      // Y
    Nfa completed;  // Z = X union Y
    RelationSpec spec;
};

EmbeddingResult embed_generic(const Nfa& x, const Caps& caps = {});
EmbeddingResult embed_prefix(const Nfa& x, int k, const Caps& caps = {});
EmbeddingResult embed_factor(const Nfa& x, int k, const Caps& caps = {});
EmbeddingResult embed_theta(const Nfa& x, const PermMorphism& m, const Caps& caps = {});

} // namespace vlcode
