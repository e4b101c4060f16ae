#pragma once

#include "ascheme/action.hpp"
#include "ascheme/semidirect.hpp"

namespace ascheme::fixtures {

// Rank-2 scheme on 3 points (identity + everything else).
SchemePtr triangle_scheme();

// Cayley table of Z/m and the thin scheme it generates
// (color(y1,y2) = (y2-y1) mod m).
std::vector<std::vector<int>> cyclic_group_table(int m);
SchemePtr cyclic_scheme(int m);

// Cayley table of the Klein four-group.
std::vector<std::vector<int>> klein_four_table();

// The motivating order-12 example: Z/4 acting on the triangle scheme with
// trivial morphisms on the order-2 relation and full morphisms on the two
// generators.
Action cyclic4_on_triangle_action();

// Its semidirect product (order 12, rank 6).
SemidirectScheme order12_product();

// The same scheme under the reference relabeling used by the published
// order-12 classification tables (points and relations permuted).
SchemePtr order12_reference_relabeling();

// Rank-3 scheme on groups*block_size points: identity / same block / other
// block. Used by the kernel benchmark and kernel equivalence tests.
SchemePtr group_divisible_scheme(int groups, int block_size);

} // namespace ascheme::fixtures
