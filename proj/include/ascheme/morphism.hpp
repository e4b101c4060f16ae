#pragma once

#include "ascheme/closure.hpp"
#include "ascheme/labelling.hpp"

namespace ascheme {

// A color-respecting map between schemes: every pair of one dom relation
// lands in a single cod relation.
struct SchemeMorphism {
    SchemePtr dom, cod;
    std::vector<int> point_map;
    std::vector<int> rel_map;
    bool based = false;   // point_map[dom basepoint] == cod basepoint
    RelSet kernel;        // relations mapped to the cod identity (closed)
};

// Derives rel_map from point_map and verifies it on every pair; throws
// NotAMorphism with a witness pair otherwise.
SchemeMorphism validate_morphism(SchemePtr dom, SchemePtr cod, std::vector<int> point_map);

// A category morphism between based schemes: a pair of normal closed subsets
// (t_sub in dom, u_sub in cod) together with a based isomorphism of the two
// quotient schemes. Equality is at coset level: same subsets, same block map.
struct CMorphism {
    SchemePtr dom, cod;
    RelSet t_sub, u_sub;
    QuotientScheme dom_q, cod_q;
    std::vector<int> block_iso; // dom_q block -> cod_q block
    std::vector<int> rel_iso;   // dom_q relation -> cod_q relation
};

// point_map sends each dom point into the cod coset its own coset maps to;
// it must be constant on t_sub-cosets at block level. Validates normality
// (NotNormal), basedness (NotBased) and the quotient isomorphism (NotIso).
CMorphism make_cmorphism(SchemePtr dom, SchemePtr cod, const RelSet& t_sub,
                         const RelSet& u_sub, const std::vector<int>& point_map);

// Identity morphism: both subsets {0}, identity block map.
CMorphism identity_cmorphism(SchemePtr s);

bool cmorphism_equal(const CMorphism& a, const CMorphism& b);

// Categorical composition: subsets grown per the residue characterization,
// quotient iso by representative chasing (smallest representative at each
// step). Requires cod(phi) == dom(psi) structurally (DomainMismatch).
CMorphism compose(const CMorphism& phi, const CMorphism& psi);

// The adjoint: swaps dom/cod and subsets, inverts the iso.
CMorphism star(const CMorphism& phi);

// Partial order: t/u subsets contained and every phi-image coset contained
// in the psi-image coset of the same point. Same dom/cod required.
bool leq(const CMorphism& phi, const CMorphism& psi);

// Induced map on labelled subsets: P ⊆ tau pushes forward through the
// quotient iso, pulled back along the cod relabeling. Both TauSchemes must
// sit on phi's dom/cod and share tau (MismatchedTauScheme).
RelSet tau_apply(const CMorphism& phi, const TauScheme& dom_ts,
                 const TauScheme& cod_ts, const RelSet& p);

} // namespace ascheme
