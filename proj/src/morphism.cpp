#include "ascheme/morphism.hpp"

#include <algorithm>
#include <string>

#include "ascheme/error.hpp"

namespace ascheme {

SchemeMorphism validate_morphism(SchemePtr dom, SchemePtr cod, std::vector<int> point_map) {
    if (!dom || !cod || static_cast<int>(point_map.size()) != dom->n)
        throw SchemeError(ErrorKind::DomainMismatch, "point map has wrong length");
    for (int v : point_map)
        if (v < 0 || v >= cod->n)
            throw SchemeError(ErrorKind::NotAMorphism, "point image out of range");

    std::vector<int> rel_map(dom->r, -1);
    for (int x = 0; x < dom->n; ++x)
        for (int y = 0; y < dom->n; ++y) {
            int s = dom->color_at(x, y);
            int c = cod->color_at(point_map[x], point_map[y]);
            if (rel_map[s] < 0)
                rel_map[s] = c;
            else if (rel_map[s] != c)
                throw SchemeError(ErrorKind::NotAMorphism,
                                  "relation " + std::to_string(s) +
                                      " maps to two relations: witness (" +
                                      std::to_string(x) + "," + std::to_string(y) + ")");
        }
    SchemeMorphism f;
    f.based = point_map[dom->basepoint] == cod->basepoint;
    for (int s = 0; s < dom->r; ++s)
        if (rel_map[s] == 0) f.kernel.push_back(s);
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.point_map = std::move(point_map);
    f.rel_map = std::move(rel_map);
    return f;
}

namespace {

// normality first, then the quotient iso; shared by make_cmorphism
void require_normal_closed(const Scheme& s, const RelSet& t, const char* side) {
    if (!is_closed(s, t))
        throw SchemeError(ErrorKind::NotNormal, std::string(side) + " subset is not closed");
    if (!is_normal(s, t))
        throw SchemeError(ErrorKind::NotNormal, std::string(side) + " subset is not normal");
}

} // namespace

CMorphism make_cmorphism(SchemePtr dom, SchemePtr cod, const RelSet& t_sub,
                         const RelSet& u_sub, const std::vector<int>& point_map) {
    if (!dom || !cod)
        throw SchemeError(ErrorKind::DomainMismatch, "null scheme");
    if (static_cast<int>(point_map.size()) != dom->n)
        throw SchemeError(ErrorKind::DomainMismatch, "point map has wrong length");
    require_normal_closed(*dom, t_sub, "dom");
    require_normal_closed(*cod, u_sub, "cod");

    CMorphism f;
    f.dom_q = quotient(dom, t_sub);
    f.cod_q = quotient(cod, u_sub);
    const auto& dp = f.dom_q.partition;
    const auto& cp = f.cod_q.partition;
    int db = static_cast<int>(dp.blocks.size());
    int cb = static_cast<int>(cp.blocks.size());
    if (db != cb)
        throw SchemeError(ErrorKind::NotIso,
                          "quotients have " + std::to_string(db) + " vs " +
                              std::to_string(cb) + " cosets");

    // reduce the point map to blocks; it must be constant per coset
    f.block_iso.assign(db, -1);
    for (int x = 0; x < dom->n; ++x) {
        int v = point_map[x];
        if (v < 0 || v >= cod->n)
            throw SchemeError(ErrorKind::NotIso, "point image out of range");
        int b = dp.block_of[x], ib = cp.block_of[v];
        if (f.block_iso[b] < 0)
            f.block_iso[b] = ib;
        else if (f.block_iso[b] != ib)
            throw SchemeError(ErrorKind::NotIso,
                              "point map is not constant on the coset of point " +
                                  std::to_string(x));
    }
    std::vector<char> used(cb, 0);
    for (int b = 0; b < db; ++b) {
        if (f.block_iso[b] < 0)
            throw SchemeError(ErrorKind::NotIso, "coset with no image");
        if (used[f.block_iso[b]]++)
            throw SchemeError(ErrorKind::NotIso, "coset map is not a bijection");
    }
    if (f.block_iso[dp.block_of[dom->basepoint]] != cp.block_of[cod->basepoint])
        throw SchemeError(ErrorKind::NotBased, "basepoint coset does not map to basepoint coset");

    // relation part of the iso, derived then verified everywhere
    const Scheme& dq = f.dom_q.scheme;
    const Scheme& cq = f.cod_q.scheme;
    if (dq.r != cq.r)
        throw SchemeError(ErrorKind::NotIso,
                          "quotient ranks differ: " + std::to_string(dq.r) + " vs " +
                              std::to_string(cq.r));
    f.rel_iso.assign(dq.r, -1);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) {
            int s = dq.color_at(i, j);
            int c = cq.color_at(f.block_iso[i], f.block_iso[j]);
            if (f.rel_iso[s] < 0)
                f.rel_iso[s] = c;
            else if (f.rel_iso[s] != c)
                throw SchemeError(ErrorKind::NotIso,
                                  "coset map does not respect quotient relation " +
                                      std::to_string(s));
        }
    std::vector<char> rused(cq.r, 0);
    for (int s = 0; s < dq.r; ++s)
        if (f.rel_iso[s] < 0 || rused[f.rel_iso[s]]++)
            throw SchemeError(ErrorKind::NotIso, "quotient relation map is not a bijection");
    for (int p = 0; p < dq.r; ++p)
        for (int q = 0; q < dq.r; ++q)
            for (int s = 0; s < dq.r; ++s)
                if (dq.a(p, q, s) != cq.a(f.rel_iso[p], f.rel_iso[q], f.rel_iso[s]))
                    throw SchemeError(ErrorKind::NotIso,
                                      "quotient intersection numbers differ at (" +
                                          std::to_string(p) + "," + std::to_string(q) + "," +
                                          std::to_string(s) + ")");

    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.t_sub = t_sub;
    f.u_sub = u_sub;
    return f;
}

CMorphism identity_cmorphism(SchemePtr s) {
    std::vector<int> id(s->n);
    for (int x = 0; x < s->n; ++x) id[x] = x;
    return make_cmorphism(s, s, {0}, {0}, id);
}

bool cmorphism_equal(const CMorphism& a, const CMorphism& b) {
    return same_scheme(*a.dom, *b.dom) && same_scheme(*a.cod, *b.cod) &&
           a.t_sub == b.t_sub && a.u_sub == b.u_sub && a.block_iso == b.block_iso;
}

CMorphism compose(const CMorphism& phi, const CMorphism& psi) {
    if (!same_scheme(*phi.cod, *psi.dom))
        throw SchemeError(ErrorKind::DomainMismatch, "cod of left factor != dom of right factor");
    const Scheme& mid = *phi.cod;

    // residue characterization of the composite subsets:
    // t survives iff its phi-image class contains some u that psi kills.
    auto psi_kills = [&](int u) {
        return psi.rel_iso[psi.dom_q.rel_map[u]] == 0;
    };
    auto phi_creates = [&](int u) { // u-class is a phi-image of the dom identity class
        return phi.cod_q.rel_map[u] == 0;
    };
    RelSet t_sub, u_sub;
    for (int t = 0; t < phi.dom->r; ++t) {
        int img = phi.rel_iso[phi.dom_q.rel_map[t]];
        for (int u = 0; u < mid.r; ++u)
            if (phi.cod_q.rel_map[u] == img && psi_kills(u)) {
                t_sub.push_back(t);
                break;
            }
    }
    for (int v = 0; v < psi.cod->r; ++v) {
        int vcls = psi.cod_q.rel_map[v];
        for (int u = 0; u < mid.r; ++u)
            if (phi_creates(u) && psi.rel_iso[psi.dom_q.rel_map[u]] == vcls) {
                u_sub.push_back(v);
                break;
            }
    }

    // representative chasing: smallest representative at each step
    std::vector<int> pm(phi.dom->n);
    for (int x = 0; x < phi.dom->n; ++x) {
        int ib = phi.block_iso[phi.dom_q.partition.block_of[x]];
        int y = phi.cod_q.partition.blocks[ib][0];
        int jb = psi.block_iso[psi.dom_q.partition.block_of[y]];
        pm[x] = psi.cod_q.partition.blocks[jb][0];
    }
    return make_cmorphism(phi.dom, psi.cod, t_sub, u_sub, pm);
}

CMorphism star(const CMorphism& phi) {
    std::vector<int> pm(phi.cod->n);
    const auto& cp = phi.cod_q.partition;
    const auto& dp = phi.dom_q.partition;
    std::vector<int> inv(phi.block_iso.size());
    for (size_t b = 0; b < phi.block_iso.size(); ++b) inv[phi.block_iso[b]] = static_cast<int>(b);
    for (int y = 0; y < phi.cod->n; ++y) pm[y] = dp.blocks[inv[cp.block_of[y]]][0];
    return make_cmorphism(phi.cod, phi.dom, phi.u_sub, phi.t_sub, pm);
}

bool leq(const CMorphism& phi, const CMorphism& psi) {
    if (!same_scheme(*phi.dom, *psi.dom) || !same_scheme(*phi.cod, *psi.cod))
        throw SchemeError(ErrorKind::DomainMismatch, "leq requires equal dom and cod");
    if (!std::includes(psi.t_sub.begin(), psi.t_sub.end(), phi.t_sub.begin(), phi.t_sub.end()))
        return false;
    if (!std::includes(psi.u_sub.begin(), psi.u_sub.end(), phi.u_sub.begin(), phi.u_sub.end()))
        return false;
    // every phi-image coset must sit inside the psi-image coset of the same point
    for (int x = 0; x < phi.dom->n; ++x) {
        int small = phi.block_iso[phi.dom_q.partition.block_of[x]];
        int big = psi.block_iso[psi.dom_q.partition.block_of[x]];
        for (int y : phi.cod_q.partition.blocks[small])
            if (psi.cod_q.partition.block_of[y] != big) return false;
    }
    return true;
}

RelSet tau_apply(const CMorphism& phi, const TauScheme& dom_ts,
                 const TauScheme& cod_ts, const RelSet& p) {
    if (!(dom_ts.tau == cod_ts.tau))
        throw SchemeError(ErrorKind::MismatchedTauScheme, "labelling sets differ");
    if (!same_scheme(*dom_ts.scheme, *phi.dom) || !same_scheme(*cod_ts.scheme, *phi.cod))
        throw SchemeError(ErrorKind::MismatchedTauScheme,
                          "tau-schemes do not sit on the morphism's dom/cod");
    std::vector<char> img(phi.cod_q.scheme.r, 0);
    for (int t : p) {
        if (t < 0 || t >= dom_ts.tau.r)
            throw SchemeError(ErrorKind::BadIndex, "label out of range");
        img[phi.rel_iso[phi.dom_q.rel_map[dom_ts.alpha[t]]]] = 1;
    }
    RelSet out;
    for (int u = 0; u < cod_ts.tau.r; ++u)
        if (img[phi.cod_q.rel_map[cod_ts.alpha[u]]]) out.push_back(u);
    return out;
}

} // namespace ascheme
