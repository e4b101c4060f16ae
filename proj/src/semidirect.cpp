#include "ascheme/semidirect.hpp"

#include <algorithm>
#include <string>

#include "ascheme/error.hpp"
#include "ascheme/kernels.hpp"
#include "ascheme/recovery.hpp"

namespace ascheme {

namespace {

// the tau''_u-coset of t (the label class [u,t] collapses to)
RelSet label_class(const Action& act, int u, int t) {
    return tau_product(act.tau, {t}, act.tau_doubled(u));
}

} // namespace

std::pair<int, int> relation_label(const Action& act, int p1, int p2) {
    int n = act.n();
    int total = act.m() * n;
    if (p1 < 0 || p1 >= total || p2 < 0 || p2 >= total)
        throw SchemeError(ErrorKind::BadIndex, "composite point out of range");
    int y1 = p1 / n, x1 = p1 % n;
    int y2 = p2 / n, x2 = p2 % n;
    int u = act.u_scheme->color_at(y1, y2);
    const CMorphism& phi = act.pair(y1, y2);
    int ib = phi.block_iso[phi.dom_q.partition.block_of[x1]];
    int cb = phi.cod_q.partition.block_of[x2];
    int qrel = phi.cod_q.scheme.color_at(ib, cb);
    const std::vector<int>& alpha2 = act.point(y2).alpha;
    int rep = -1;
    for (int t = 0; t < act.tau.r; ++t)
        if (phi.cod_q.rel_map[alpha2[t]] == qrel) {
            rep = t;
            break;
        }
    if (rep < 0)
        throw SchemeError(ErrorKind::BadIndex, "internal: composite pair with no label");
    return {u, rep};
}

SemidirectScheme semidirect_product(const Action& act) {
    int m = act.m(), n = act.n(), ru = act.u_scheme->r, rt = act.tau.r;

    // global relation indices: identity first automatically, since labels are
    // sorted by (u, smallest class member) and [0,0] is least
    std::vector<int> lookup(static_cast<size_t>(ru) * rt, -1);
    std::vector<SemidirectScheme::Label> label_of;
    for (int u = 0; u < ru; ++u) {
        for (int t = 0; t < rt; ++t) {
            if (lookup[u * rt + t] >= 0) continue;
            RelSet cls = label_class(act, u, t);
            if (cls.empty() || cls[0] != t) continue; // not the smallest member
            int idx = static_cast<int>(label_of.size());
            for (int member : cls) lookup[u * rt + member] = idx;
            label_of.push_back({u, cls});
        }
        for (int t = 0; t < rt; ++t)
            if (lookup[u * rt + t] < 0)
                throw SchemeError(ErrorKind::BadIndex,
                                  "internal: label classes do not partition tau at u=" +
                                      std::to_string(u));
    }

    // per-ordered-pair lookup tables feeding the labeling kernel
    kernels::LabelTables lt;
    lt.m = m;
    lt.n = n;
    lt.dom_image_block.resize(static_cast<size_t>(m) * m);
    lt.cod_block.resize(static_cast<size_t>(m) * m);
    lt.qcolor.resize(static_cast<size_t>(m) * m);
    lt.qn.resize(static_cast<size_t>(m) * m);
    lt.rel_index.resize(static_cast<size_t>(m) * m);
    for (int y1 = 0; y1 < m; ++y1)
        for (int y2 = 0; y2 < m; ++y2) {
            int pr = y1 * m + y2;
            int u = act.u_scheme->color_at(y1, y2);
            const CMorphism& phi = act.pair(y1, y2);
            const std::vector<int>& alpha2 = act.point(y2).alpha;
            auto& dib = lt.dom_image_block[pr];
            auto& cbv = lt.cod_block[pr];
            dib.resize(n);
            cbv.resize(n);
            for (int x = 0; x < n; ++x) {
                dib[x] = phi.block_iso[phi.dom_q.partition.block_of[x]];
                cbv[x] = phi.cod_q.partition.block_of[x];
            }
            lt.qcolor[pr] = phi.cod_q.scheme.color;
            lt.qn[pr] = phi.cod_q.scheme.n;
            auto& ri = lt.rel_index[pr];
            ri.assign(phi.cod_q.scheme.r, -1);
            for (int qrel = 0; qrel < phi.cod_q.scheme.r; ++qrel) {
                RelSet cls;
                for (int t = 0; t < rt; ++t)
                    if (phi.cod_q.rel_map[alpha2[t]] == qrel) cls.push_back(t);
                if (cls.empty())
                    throw SchemeError(ErrorKind::BadIndex,
                                      "internal: quotient relation without labels");
                if (cls != label_class(act, u, cls[0]))
                    throw SchemeError(ErrorKind::BadIndex,
                                      "internal: label class at pair (" +
                                          std::to_string(y1) + "," + std::to_string(y2) +
                                          ") is not a tau''-coset");
                ri[qrel] = lookup[u * rt + cls[0]];
            }
        }

    std::vector<int> color = kernels::fill_labels(lt);
    int base = act.u_scheme->basepoint * n + act.t_scheme->basepoint;

    SemidirectScheme sd;
    sd.scheme = make_scheme(from_flat_color_matrix(std::move(color), m * n, base));
    if (sd.scheme->r != static_cast<int>(label_of.size()))
        throw SchemeError(ErrorKind::BadIndex, "internal: some label never occurs");
    sd.u_scheme = act.u_scheme;
    sd.t_scheme = act.t_scheme;
    sd.label_of = std::move(label_of);
    sd.label_lookup = std::move(lookup);
    sd.tau_r = rt;
    return sd;
}

SplitData canonical_split(const SemidirectScheme& sd) {
    int n = sd.t_scheme->n;
    RelSet t_tilde;
    for (size_t i = 0; i < sd.label_of.size(); ++i)
        if (sd.label_of[i].u == 0) t_tilde.push_back(static_cast<int>(i));

    std::vector<int> i_map(sd.u_scheme->n);
    for (int y = 0; y < sd.u_scheme->n; ++y)
        i_map[y] = y * n + sd.t_scheme->basepoint;

    // the canonical copy of T inside the basepoint coset
    SubschemeResult sub = subscheme(*sd.scheme, t_tilde, sd.scheme->basepoint);
    int ystar = sd.u_scheme->basepoint;
    Isomorphism gamma;
    gamma.point_bij.resize(n);
    for (int x = 0; x < n; ++x) {
        int z = ystar * n + x;
        auto it = std::find(sub.point_embed.begin(), sub.point_embed.end(), z);
        if (it == sub.point_embed.end())
            throw SchemeError(ErrorKind::NotIso, "internal: basepoint coset is not {y*} x X");
        gamma.point_bij[x] = static_cast<int>(it - sub.point_embed.begin());
    }
    gamma.rel_bij.resize(sd.t_scheme->r);
    for (int t = 0; t < sd.t_scheme->r; ++t) {
        int parent = sd.lookup(0, t);
        auto it = std::lower_bound(sub.rel_embed.begin(), sub.rel_embed.end(), parent);
        if (it == sub.rel_embed.end() || *it != parent)
            throw SchemeError(ErrorKind::NotIso, "internal: [1,t] missing from the coset");
        gamma.rel_bij[t] = static_cast<int>(it - sub.rel_embed.begin());
    }
    gamma.based = gamma.point_bij[sd.t_scheme->basepoint] == sub.scheme.basepoint;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            if (sub.scheme.color_at(gamma.point_bij[x1], gamma.point_bij[x2]) !=
                gamma.rel_bij[sd.t_scheme->color_at(x1, x2)])
                throw SchemeError(ErrorKind::NotIso,
                                  "internal: canonical copy of T is not an isomorphism");

    return validate_split_data(sd.scheme, t_tilde, i_map, sd.u_scheme, sd.t_scheme, gamma);
}

bool verify_split_condition(const SplitData& sd) {
    for (int u = 0; u < sd.u_scheme->r; ++u)
        for (int t : sd.t_tilde) {
            if (complex_product(*sd.s, {sd.i_rel[u]}, {t}).size() != 1) return false;
            if (complex_product(*sd.s, {t}, {sd.i_rel[u]}).size() != 1) return false;
        }
    return true;
}

} // namespace ascheme
