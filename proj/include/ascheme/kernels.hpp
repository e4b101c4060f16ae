#pragma once

#include <optional>
#include <vector>

// Hot loops shared by the library: regularity verification over all point
// pairs and relation labeling over all composite pairs. Each kernel has a
// serial reference implementation and an OpenMP variant; both produce
// identical results (the parallel verifier reports the lexicographically
// least witness, like the serial one). Callers outside the tests and the
// benchmark should use the dispatching wrappers.

namespace ascheme::kernels {

struct RegularityViolation {
    int p, q, s;       // relation triple
    int x, y;          // offending pair (x,y) in s
    long long expected; // witness-pair count stored in the table
    long long actual;   // count observed at (x,y)
};

// Intersection numbers computed by scanning one witness pair per relation.
// Returns a dense r*r*r table; requires every relation index to occur.
std::vector<int> constants_from_witnesses(const std::vector<int>& color, int n, int r);

// Checks the table against every pair (x,y); nullopt means regular.
std::optional<RegularityViolation> verify_constants_serial(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants);
std::optional<RegularityViolation> verify_constants_parallel(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants);
std::optional<RegularityViolation> verify_constants(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants);

// Fills an N x N composite color matrix. For the composite pair
// ((y1,x1),(y2,x2)) with N = m*n points encoded y*n+x, the relation index is
// pair_table[y1*m+y2][ qrel(y1,y2,x1,x2) ] where
//   qrel = qcolor[y1*m+y2][ dom_image_block[y1*m+y2][x1] * qn(y1,y2) + cod_block[y1*m+y2][x2] ].
// All per-pair tables are supplied flattened by the caller (see semidirect.cpp).
struct LabelTables {
    int m = 0, n = 0;
    // per ordered (y1,y2): x1 -> image block index in the codomain quotient
    std::vector<std::vector<int>> dom_image_block;
    // per ordered (y1,y2): x2 -> block index in the codomain quotient
    std::vector<std::vector<int>> cod_block;
    // per ordered (y1,y2): flattened qb x qb quotient color matrix
    std::vector<std::vector<int>> qcolor;
    std::vector<int> qn; // per ordered (y1,y2): block count of the codomain quotient
    // per ordered (y1,y2): quotient relation -> final product relation index
    std::vector<std::vector<int>> rel_index;
};

std::vector<int> fill_labels_serial(const LabelTables& t);
std::vector<int> fill_labels_parallel(const LabelTables& t);
std::vector<int> fill_labels(const LabelTables& t);

} // namespace ascheme::kernels
