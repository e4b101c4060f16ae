#pragma once

#include <optional>

#include "ascheme/scheme.hpp"

namespace ascheme {

// A scheme isomorphism: a point bijection together with the induced relation
// bijection (always derived from the point map, never supplied).
struct Isomorphism {
    std::vector<int> point_bij;
    std::vector<int> rel_bij;
    bool based = false;
};

// Backtracking search over point images with pruning by relation
// fingerprints (valency plus sorted nonzero constant-row signatures).
// Deterministic: returns the first witness under ascending point order.
std::optional<Isomorphism> find_isomorphism(const Scheme& a, const Scheme& b,
                                            bool based = false);

// All relation permutations fixing 0, commuting with star and preserving
// the intersection numbers; sorted lexicographically (identity first).
std::vector<std::vector<int>> algebraic_automorphisms(const Scheme& s);

// True iff every relation is self-paired (star is the identity).
bool is_symmetric(const Scheme& s);

} // namespace ascheme
