#pragma once

#include <optional>

#include "ascheme/action.hpp"
#include "ascheme/iso.hpp"

namespace ascheme {

// The semidirect product of an action: a scheme on Y x X (composite point
// (y,x) encoded y*n+x) whose relations are labeled [u, tau-class]: u a
// U-relation and the class a coset of tau''_u. Relation 0 is [1_Y, 1];
// the rest are sorted by (u, smallest class member).
struct SemidirectScheme {
    SchemePtr scheme;
    SchemePtr u_scheme, t_scheme;

    struct Label {
        int u = 0;
        RelSet t_class;
    };
    std::vector<Label> label_of;        // relation -> label
    std::vector<int> label_lookup;      // (u * tau.r + t) -> relation index
    int tau_r = 0;

    int lookup(int u, int t) const { return label_lookup[u * tau_r + t]; }
};

// The label of one composite pair: (u, smallest member of the tau-class).
std::pair<int, int> relation_label(const Action& act, int p1, int p2);

// Builds the product and fully revalidates it via from_color_matrix.
SemidirectScheme semidirect_product(const Action& act);

// A candidate splitting of a scheme S: a closed subset playing the diagonal
// copy of T, a point embedding i of Y, the factor schemes, and an optional
// based isomorphism gamma from T to the basepoint-coset subscheme.
struct SplitData {
    SchemePtr s;
    RelSet t_tilde;
    std::vector<int> i_map;   // Y -> points of S
    SchemePtr u_scheme;
    SchemePtr t_scheme;
    std::optional<Isomorphism> t_iso_witness;

    // cached by validation:
    std::vector<int> i_rel;   // u -> S-relation of (ui)
    QuotientScheme quo;       // S // t_tilde
    std::vector<int> y_of_block; // quotient block -> the y with (yi) in it
};

// The distinguished splitting of a product: t_tilde = the [1_Y,*] relations,
// i(y) = (y, x*), gamma = the canonical copy of T inside the basepoint coset.
SplitData canonical_split(const SemidirectScheme& sd);

// Checks |(ui) t| == 1 and |t (ui)| == 1 for every U-relation u and every
// t in t_tilde.
bool verify_split_condition(const SplitData& sd);

} // namespace ascheme
