#pragma once

#include <map>

#include "ascheme/semidirect.hpp"

namespace ascheme {

// Validates a candidate splitting: i must be a based morphism whose
// composite with the quotient map is an isomorphism U -> S//t_tilde
// (SplitNotIso), the one-sided product condition |t (ui)| == 1 must hold
// (ConditionViolated, aux = u), and t_tilde must come out normal (NotNormal).
// If t_scheme is null, the basepoint-coset subscheme itself is used as T
// with the identity witness. A supplied gamma witness is verified.
SplitData validate_split_data(SchemePtr s, RelSet t_tilde, std::vector<int> i_map,
                              SchemePtr u_scheme, SchemePtr t_scheme = nullptr,
                              std::optional<Isomorphism> gamma = std::nullopt);

// The boundary subsets of t_tilde at u:
//   first  = { t : {t}(ui) == {(ui)} }   (left-stabilizer side)
//   second = { t : (ui){t} == {(ui)} }   (right-stabilizer side)
std::pair<RelSet, RelSet> boundary_subsets(const SplitData& sd, int u);

struct RecoveryOptions {
    // test hook: replace the deterministic coset bijection gamma^y for
    // selected y != y* (values are X -> coset-point maps sending x* to yi)
    std::map<int, std::vector<int>> gamma_y_override;
};

struct RecoveredAction {
    Action action;
    Isomorphism gamma;                        // T -> basepoint-coset subscheme
    std::vector<std::vector<int>> gamma_y;    // per y: X -> coset points
    std::vector<int> eta;                     // S-point -> composite y*n+x
};

// Rebuilds an action from a validated splitting: per-coset subschemes pulled
// back along gamma^y, boundary subsets as the pair subsets, and pair isos by
// chasing (ui)-neighbors between cosets. If no gamma witness is present one
// is found by based isomorphism search (NoBasedIso when none exists).
RecoveredAction recover_action(const SplitData& sd, const RecoveryOptions& opts = {});

struct ReconstructResult {
    RecoveredAction recovered;
    SemidirectScheme product;
    bool eta_is_isomorphism = false;
};

// recover_action + semidirect_product + pointwise verification that eta is a
// based isomorphism from S onto the rebuilt product.
ReconstructResult reconstruct(const SplitData& sd, const RecoveryOptions& opts = {});

} // namespace ascheme
