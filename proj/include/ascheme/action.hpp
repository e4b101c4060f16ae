#pragma once

#include "ascheme/morphism.hpp"

namespace ascheme {

// An action of a based scheme U on Y upon a based scheme T on X: one
// relabeled copy of T per point of Y and one category morphism per ordered
// pair of points, subject to five coherence conditions:
//   (1) the basepoint copy is T itself with the identity relabeling,
//   (2) diagonal morphisms are identities,
//   (3) the reverse of a pair morphism is its star,
//   (4) the induced singleton-image table depends only on the U-relation of
//       the pair,
//   (5) morphisms satisfy the triangle inequality over composition.
struct Action {
    SchemePtr u_scheme; // on Y
    SchemePtr t_scheme; // on X
    LabellingSet tau;   // = tau_of(*t_scheme)
    std::vector<TauScheme> per_point;  // |Y| entries
    std::vector<CMorphism> per_pair;   // |Y|^2 entries, row-major

    int m() const { return u_scheme->n; }
    int n() const { return t_scheme->n; }
    const CMorphism& pair(int y1, int y2) const { return per_pair[y1 * m() + y2]; }
    const TauScheme& point(int y) const { return per_point[y]; }

    // u_table[u][t] = image of {t} under any pair in relation u (condition 4).
    std::vector<std::vector<RelSet>> u_table;

    // kernel of the u-level map and image of the unit; both closed + normal.
    RelSet tau_primed(int u) const;  // {t : image of {t} == image of {0}}
    RelSet tau_doubled(int u) const; // image of {0}
};

// Validates everything; throws ConditionFailed(k, witness) with aux = k,
// or DomainMismatch/MismatchedTauScheme on shape errors.
Action build_action(SchemePtr u_scheme, SchemePtr t_scheme,
                    std::vector<TauScheme> per_point,
                    std::vector<CMorphism> per_pair);

// Every pair morphism trivial ({0},{0}, identity): the direct product action.
Action trivial_action(SchemePtr u_scheme, SchemePtr t_scheme);

// Off-diagonal morphisms carry the full subsets: the wreath-style action.
Action full_action(SchemePtr u_scheme, SchemePtr t_scheme);

} // namespace ascheme
