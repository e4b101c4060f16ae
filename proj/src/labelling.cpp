#include "ascheme/labelling.hpp"

#include <algorithm>
#include <string>

namespace ascheme {

bool operator==(const LabellingSet& a, const LabellingSet& b) {
    return a.r == b.r && a.star == b.star && a.constants == b.constants;
}

LabellingSet tau_of(const Scheme& s) {
    return {s.r, s.star, s.constants};
}

RelSet tau_product(const LabellingSet& tau, const RelSet& p, const RelSet& q) {
    std::vector<char> in(tau.r, 0);
    for (int a : p)
        for (int b : q)
            for (int c = 0; c < tau.r; ++c)
                if (tau.a(a, b, c) > 0) in[c] = 1;
    RelSet out;
    for (int c = 0; c < tau.r; ++c)
        if (in[c]) out.push_back(c);
    return out;
}

RelSet tau_star(const LabellingSet& tau, const RelSet& p) {
    RelSet out;
    out.reserve(p.size());
    for (int a : p) out.push_back(tau.star[a]);
    return normalized(std::move(out));
}

bool tau_closed(const LabellingSet& tau, const RelSet& t) {
    if (!is_normalized(t) || t.empty() || t[0] != 0) return false;
    for (int p : t)
        if (!std::binary_search(t.begin(), t.end(), tau.star[p])) return false;
    for (int p : t)
        for (int q : t)
            for (int c = 0; c < tau.r; ++c)
                if (tau.a(p, q, c) > 0 && !std::binary_search(t.begin(), t.end(), c))
                    return false;
    return true;
}

bool tau_normal(const LabellingSet& tau, const RelSet& t) {
    for (int p = 0; p < tau.r; ++p)
        if (tau_product(tau, {p}, t) != tau_product(tau, t, {p})) return false;
    return true;
}

std::vector<RelSet> tau_closed_subsets(const LabellingSet& tau) {
    std::vector<RelSet> out;
    if (tau.r > 20) return out; // desk scale only
    for (unsigned mask = 0; mask < (1u << tau.r); ++mask) {
        if (!(mask & 1u)) continue;
        RelSet t;
        for (int p = 0; p < tau.r; ++p)
            if (mask & (1u << p)) t.push_back(p);
        if (tau_closed(tau, t)) out.push_back(std::move(t));
    }
    return out;
}

TauScheme make_tau_scheme(LabellingSet tau, SchemePtr scheme, std::vector<int> alpha) {
    if (!scheme || tau.r != scheme->r || static_cast<int>(alpha.size()) != tau.r)
        throw SchemeError(ErrorKind::MismatchedTauScheme, "rank mismatch");
    std::vector<char> hit(tau.r, 0);
    for (int v : alpha) {
        if (v < 0 || v >= tau.r || hit[v]++)
            throw SchemeError(ErrorKind::MismatchedTauScheme, "alpha is not a bijection");
    }
    if (alpha[0] != 0)
        throw SchemeError(ErrorKind::MismatchedTauScheme, "alpha does not fix the unit");
    for (int p = 0; p < tau.r; ++p)
        if (alpha[tau.star[p]] != scheme->star[alpha[p]])
            throw SchemeError(ErrorKind::MismatchedTauScheme,
                              "alpha does not commute with star at " + std::to_string(p));
    for (int p = 0; p < tau.r; ++p)
        for (int q = 0; q < tau.r; ++q)
            for (int s = 0; s < tau.r; ++s)
                if (tau.a(p, q, s) != scheme->a(alpha[p], alpha[q], alpha[s]))
                    throw SchemeError(ErrorKind::MismatchedTauScheme,
                                      "intersection numbers differ at (" + std::to_string(p) +
                                          "," + std::to_string(q) + "," + std::to_string(s) + ")");
    return {std::move(tau), std::move(scheme), std::move(alpha)};
}

bool tau_scheme_equal(const TauScheme& a, const TauScheme& b) {
    return a.tau == b.tau && same_scheme(*a.scheme, *b.scheme) && a.alpha == b.alpha;
}

} // namespace ascheme
