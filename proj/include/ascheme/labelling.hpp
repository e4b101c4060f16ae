#pragma once

#include "ascheme/error.hpp"
#include "ascheme/scheme.hpp"

namespace ascheme {

// The point-free shadow of a scheme: relation names with unit 0, the star
// involution and the intersection numbers, but no point set. Values are only
// produced from a validated scheme, so realizability always has a witness.
struct LabellingSet {
    int r = 0;
    std::vector<int> star;
    std::vector<int> constants;

    int a(int p, int q, int s) const { return constants[(p * r + q) * r + s]; }
    int valency(int s) const { return a(s, star[s], 0); }
};

bool operator==(const LabellingSet& a, const LabellingSet& b);

LabellingSet tau_of(const Scheme& s);

// Complex product and subset star at the labelling level.
RelSet tau_product(const LabellingSet& tau, const RelSet& p, const RelSet& q);
RelSet tau_star(const LabellingSet& tau, const RelSet& p);
bool tau_closed(const LabellingSet& tau, const RelSet& t);
bool tau_normal(const LabellingSet& tau, const RelSet& t);
std::vector<RelSet> tau_closed_subsets(const LabellingSet& tau);

// A scheme together with a relabeling alpha : tau -> relations of the scheme
// preserving unit, star and intersection numbers.
struct TauScheme {
    LabellingSet tau;
    SchemePtr scheme;
    std::vector<int> alpha;
};

// Validates the relabeling; throws MismatchedTauScheme with a witness.
TauScheme make_tau_scheme(LabellingSet tau, SchemePtr scheme, std::vector<int> alpha);

bool tau_scheme_equal(const TauScheme& a, const TauScheme& b);

} // namespace ascheme
