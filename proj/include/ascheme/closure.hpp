#pragma once

#include "ascheme/scheme.hpp"

namespace ascheme {

// A closed relation subset of a fixed scheme (contains 0, closed under star
// and complex products).
struct ClosedSubset {
    SchemePtr scheme;
    RelSet members;
};

// Partition of the point set into cosets xT of a closed subset. Blocks are
// sorted ascending and listed by their smallest member, so blocks[i][0] is
// the canonical representative of block i.
struct PointPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;
};

// Subscheme induced on one coset. point_embed maps subscheme points to
// parent points; rel_embed maps subscheme relations to the parent relations
// they restrict (ascending, so parent relation 0 stays 0).
struct SubschemeResult {
    Scheme scheme;
    std::vector<int> point_embed;
    RelSet rel_embed;
};

// Quotient scheme S//T. rel_map sends each parent relation to its quotient
// relation; partition is the coset partition; quotient point i is block i.
struct QuotientScheme {
    Scheme scheme;
    std::vector<int> rel_map;
    PointPartition partition;
    SchemePtr parent;
};

bool is_closed(const Scheme& s, const RelSet& t);
bool is_normal(const Scheme& s, const RelSet& t); // pT == Tp for every p

// Smallest closed subset containing the seed (0 is always added).
ClosedSubset closure_of(const SchemePtr& s, const RelSet& seed);

// All closed subsets, sorted by size then lexicographically. Enumerates
// closures of all 2^r seeds when r <= 12, otherwise BFS over joins of
// single-relation closures.
std::vector<ClosedSubset> enumerate_closed_subsets(const SchemePtr& s);

// Coset partition of the points under a closed subset.
PointPartition cosets(const Scheme& s, const RelSet& t);

// Subscheme on the coset xT; basepoint is x's position in the coset.
SubschemeResult subscheme(const Scheme& s, const RelSet& t, int x);

// Quotient by any closed subset; revalidates via from_color_matrix.
// Quotient relation indices are assigned by first occurrence scanning block
// pairs in representative order, so the identity is 0.
QuotientScheme quotient(const SchemePtr& s, const RelSet& t);

} // namespace ascheme
