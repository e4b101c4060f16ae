#include "ascheme/action.hpp"

#include <algorithm>
#include <string>

#include "ascheme/error.hpp"

namespace ascheme {

RelSet Action::tau_primed(int u) const {
    RelSet out;
    for (int t = 0; t < tau.r; ++t)
        if (u_table[u][t] == u_table[u][0]) out.push_back(t);
    return out;
}

RelSet Action::tau_doubled(int u) const {
    return u_table[u][0];
}

namespace {

std::string pair_name(int y1, int y2) {
    return "(" + std::to_string(y1) + "," + std::to_string(y2) + ")";
}

void condition_failed(int k, const std::string& witness) {
    throw SchemeError(ErrorKind::ConditionFailed,
                      "condition (" + std::to_string(k) + ") fails: " + witness, k);
}

} // namespace

Action build_action(SchemePtr u_scheme, SchemePtr t_scheme,
                    std::vector<TauScheme> per_point, std::vector<CMorphism> per_pair) {
    if (!u_scheme || !t_scheme)
        throw SchemeError(ErrorKind::DomainMismatch, "null scheme");
    int m = u_scheme->n;
    if (static_cast<int>(per_point.size()) != m ||
        static_cast<int>(per_pair.size()) != m * m)
        throw SchemeError(ErrorKind::DomainMismatch, "per-point/per-pair table sizes");

    Action act;
    act.tau = tau_of(*t_scheme);
    for (int y = 0; y < m; ++y) {
        if (!(per_point[y].tau == act.tau))
            throw SchemeError(ErrorKind::MismatchedTauScheme,
                              "labelling set of point " + std::to_string(y) +
                                  " differs from tau(T)");
        if (per_point[y].scheme->n != t_scheme->n)
            throw SchemeError(ErrorKind::DomainMismatch,
                              "copy at point " + std::to_string(y) + " is not on X");
    }
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2) {
            const CMorphism& f = per_pair[y1 * m + y2];
            if (!same_scheme(*f.dom, *per_point[y1].scheme) ||
                !same_scheme(*f.cod, *per_point[y2].scheme))
                throw SchemeError(ErrorKind::DomainMismatch,
                                  "pair morphism " + pair_name(y1, y2) +
                                      " does not run between the copies at its endpoints");
        }

    int ystar = u_scheme->basepoint;
    // (1) basepoint copy is T with the identity relabeling
    if (!same_scheme(*per_point[ystar].scheme, *t_scheme))
        condition_failed(1, "copy at the basepoint is not T itself");
    for (int t = 0; t < act.tau.r; ++t)
        if (per_point[ystar].alpha[t] != t)
            condition_failed(1, "basepoint relabeling is not the identity at " +
                                    std::to_string(t));

    // (2) diagonal morphisms are identities
    for (int y = 0; y < m; ++y)
        if (!cmorphism_equal(per_pair[y * m + y], identity_cmorphism(per_point[y].scheme)))
            condition_failed(2, "diagonal morphism at " + std::to_string(y));

    // (3) reverse pair = star
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = y1; y2 < m; ++y2)
            if (!cmorphism_equal(per_pair[y2 * m + y1], star(per_pair[y1 * m + y2])))
                condition_failed(3, "pair " + pair_name(y1, y2));

    // (4) singleton-image tables depend only on the U-relation of the pair
    act.u_table.assign(u_scheme->r, {});
    std::vector<std::pair<int, int>> table_source(u_scheme->r, {-1, -1});
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2) {
            int u = u_scheme->color_at(y1, y2);
            std::vector<RelSet> tbl(act.tau.r);
            for (int t = 0; t < act.tau.r; ++t)
                tbl[t] = tau_apply(per_pair[y1 * m + y2], per_point[y1], per_point[y2], {t});
            if (act.u_table[u].empty()) {
                act.u_table[u] = std::move(tbl);
                table_source[u] = {y1, y2};
            } else if (act.u_table[u] != tbl) {
                condition_failed(4, "pairs " + pair_name(table_source[u].first,
                                                         table_source[u].second) +
                                        " and " + pair_name(y1, y2) +
                                        " share relation " + std::to_string(u) +
                                        " but induce different singleton images");
            }
        }

    // (5) triangle inequality over composition
    {
        int fail_k = -1;
        std::string fail_witness;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int y1 = 0; y1 < m; ++y1) {
            for (int y2 = 0; y2 < m; ++y2)
                for (int y3 = 0; y3 < m; ++y3) {
                    // exceptions must not escape the parallel region
                    bool ok;
                    std::string extra;
                    try {
                        CMorphism through =
                            compose(per_pair[y1 * m + y2], per_pair[y2 * m + y3]);
                        ok = leq(per_pair[y1 * m + y3], through);
                    } catch (const SchemeError& e) {
                        ok = false;
                        extra = std::string(": ") + e.what();
                    }
                    if (!ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
                        {
                            std::string w = "triple (" + std::to_string(y1) + "," +
                                            std::to_string(y2) + "," + std::to_string(y3) +
                                            ")" + extra;
                            if (fail_k < 0 || w < fail_witness) {
                                fail_k = 5;
                                fail_witness = w;
                            }
                        }
                    }
                }
        }
        if (fail_k >= 0) condition_failed(5, fail_witness);
    }

    act.u_scheme = std::move(u_scheme);
    act.t_scheme = std::move(t_scheme);
    act.per_point = std::move(per_point);
    act.per_pair = std::move(per_pair);
    return act;
}

Action trivial_action(SchemePtr u_scheme, SchemePtr t_scheme) {
    int m = u_scheme->n;
    LabellingSet tau = tau_of(*t_scheme);
    std::vector<int> id_alpha(tau.r);
    for (int t = 0; t < tau.r; ++t) id_alpha[t] = t;
    std::vector<TauScheme> pts(m, make_tau_scheme(tau, t_scheme, id_alpha));
    std::vector<CMorphism> prs(static_cast<size_t>(m) * m, identity_cmorphism(t_scheme));
    return build_action(std::move(u_scheme), std::move(t_scheme), std::move(pts),
                        std::move(prs));
}

Action full_action(SchemePtr u_scheme, SchemePtr t_scheme) {
    int m = u_scheme->n;
    LabellingSet tau = tau_of(*t_scheme);
    std::vector<int> id_alpha(tau.r);
    for (int t = 0; t < tau.r; ++t) id_alpha[t] = t;
    std::vector<TauScheme> pts(m, make_tau_scheme(tau, t_scheme, id_alpha));

    RelSet full(t_scheme->r);
    for (int t = 0; t < t_scheme->r; ++t) full[t] = t;
    std::vector<int> id_pts(t_scheme->n);
    for (int x = 0; x < t_scheme->n; ++x) id_pts[x] = x;
    CMorphism full_morph = make_cmorphism(t_scheme, t_scheme, full, full, id_pts);
    CMorphism id_morph = identity_cmorphism(t_scheme);

    std::vector<CMorphism> prs;
    prs.reserve(static_cast<size_t>(m) * m);
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2)
            prs.push_back(y1 == y2 ? id_morph : full_morph);
    return build_action(std::move(u_scheme), std::move(t_scheme), std::move(pts),
                        std::move(prs));
}

} // namespace ascheme
