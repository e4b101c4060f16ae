#include "ascheme/iso.hpp"

#include <algorithm>

namespace ascheme {

namespace {

// Relabeling-invariant signature of one relation: valency, self-pairedness,
// and the sorted nonzero rows of its constants slab.
struct Fingerprint {
    int valency;
    bool self_paired;
    std::vector<std::vector<int>> rows;

    bool operator==(const Fingerprint&) const = default;
    bool operator<(const Fingerprint& o) const {
        if (valency != o.valency) return valency < o.valency;
        if (self_paired != o.self_paired) return self_paired < o.self_paired;
        return rows < o.rows;
    }
};

Fingerprint fingerprint(const Scheme& s, int p) {
    Fingerprint f;
    f.valency = s.valency(p);
    f.self_paired = s.star[p] == p;
    f.rows.reserve(s.r);
    for (int q = 0; q < s.r; ++q) {
        std::vector<int> row;
        for (int c = 0; c < s.r; ++c)
            if (int v = s.a(p, q, c); v > 0) row.push_back(v);
        std::sort(row.begin(), row.end());
        f.rows.push_back(std::move(row));
    }
    std::sort(f.rows.begin(), f.rows.end());
    return f;
}

std::vector<Fingerprint> fingerprints(const Scheme& s) {
    std::vector<Fingerprint> f;
    f.reserve(s.r);
    for (int p = 0; p < s.r; ++p) f.push_back(fingerprint(s, p));
    return f;
}

struct IsoSearch {
    const Scheme& a;
    const Scheme& b;
    bool based;
    std::vector<Fingerprint> fa, fb;
    std::vector<int> pmap;   // a-point -> b-point or -1
    std::vector<char> pused; // b-point taken
    std::vector<int> ra2b, rb2a;
    std::vector<int> trail;  // a-relations paired at the current depth

    IsoSearch(const Scheme& a_, const Scheme& b_, bool based_)
        : a(a_), b(b_), based(based_), fa(fingerprints(a_)), fb(fingerprints(b_)),
          pmap(a_.n, -1), pused(b_.n, 0), ra2b(a_.r, -1), rb2a(b_.r, -1) {}

    bool pair_rels(int ra, int rb, std::vector<int>& local) {
        if (ra2b[ra] >= 0) return ra2b[ra] == rb;
        if (rb2a[rb] >= 0) return false;
        if (!(fa[ra] == fb[rb])) return false;
        ra2b[ra] = rb;
        rb2a[rb] = ra;
        local.push_back(ra);
        // star partner comes along for free; record it so undo is symmetric
        int sa = a.star[ra], sb = b.star[rb];
        if (ra2b[sa] < 0 && rb2a[sb] < 0) {
            if (!(fa[sa] == fb[sb])) return false;
            ra2b[sa] = sb;
            rb2a[sb] = sa;
            local.push_back(sa);
        } else if (ra2b[sa] != sb) {
            return false;
        }
        return true;
    }

    void undo(const std::vector<int>& local) {
        for (int ra : local) {
            rb2a[ra2b[ra]] = -1;
            ra2b[ra] = -1;
        }
    }

    bool extend(int x) {
        if (x == a.n) return true;
        for (int cand = 0; cand < b.n; ++cand) {
            if (pused[cand]) continue;
            if (based && x == a.basepoint && cand != b.basepoint) continue;
            if (based && x != a.basepoint && cand == b.basepoint) continue;
            std::vector<int> local;
            bool ok = true;
            for (int x2 = 0; x2 < x && ok; ++x2) {
                ok = pair_rels(a.color_at(x2, x), b.color_at(pmap[x2], cand), local) &&
                     pair_rels(a.color_at(x, x2), b.color_at(cand, pmap[x2]), local);
            }
            if (ok) {
                pmap[x] = cand;
                pused[cand] = 1;
                if (extend(x + 1)) return true;
                pused[cand] = 0;
                pmap[x] = -1;
            }
            undo(local);
        }
        return false;
    }
};

} // namespace

std::optional<Isomorphism> find_isomorphism(const Scheme& a, const Scheme& b, bool based) {
    if (a.n != b.n || a.r != b.r) return std::nullopt;
    {
        auto fa = fingerprints(a), fb = fingerprints(b);
        auto sa = fa, sb = fb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (!(sa == sb)) return std::nullopt;
    }
    IsoSearch search(a, b, based);
    if (!search.extend(0)) return std::nullopt;
    Isomorphism iso;
    iso.point_bij = search.pmap;
    // derive the relation bijection from the completed point map; the search
    // only ever pairs relations it meets off the diagonal, so the identity
    // relation (and nothing else) would otherwise stay unassigned
    iso.rel_bij.assign(a.r, -1);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
            iso.rel_bij[a.color_at(x, y)] =
                b.color_at(iso.point_bij[x], iso.point_bij[y]);
    iso.based = iso.point_bij[a.basepoint] == b.basepoint;
    return iso;
}

std::vector<std::vector<int>> algebraic_automorphisms(const Scheme& s) {
    auto fp = fingerprints(s);
    std::vector<std::vector<int>> result;
    std::vector<int> sigma(s.r, -1);
    std::vector<char> used(s.r, 0);

    auto consistent = [&](int p) {
        // verify all triples whose entries are all assigned and involve p
        for (int q = 0; q < s.r; ++q) {
            if (sigma[q] < 0) continue;
            for (int c = 0; c < s.r; ++c) {
                if (sigma[c] < 0) continue;
                if (s.a(p, q, c) != s.a(sigma[p], sigma[q], sigma[c])) return false;
                if (s.a(q, p, c) != s.a(sigma[q], sigma[p], sigma[c])) return false;
                if (s.a(q, c, p) != s.a(sigma[q], sigma[c], sigma[p])) return false;
            }
        }
        return true;
    };

    // backtrack over relations ascending; candidates ascending gives lex order
    auto rec = [&](auto&& self, int p) -> void {
        while (p < s.r && sigma[p] >= 0) ++p;
        if (p == s.r) {
            result.push_back(sigma);
            return;
        }
        for (int q = 0; q < s.r; ++q) {
            if (used[q] || !(fp[p] == fp[q])) continue;
            int ps = s.star[p], qs = s.star[q];
            bool star_free = sigma[ps] < 0;
            if (star_free && used[qs]) continue;
            if (!star_free && sigma[ps] != qs) continue;
            if (star_free && ps != p && !(fp[ps] == fp[qs])) continue;
            sigma[p] = q;
            used[q] = 1;
            if (star_free && ps != p) {
                sigma[ps] = qs;
                used[qs] = 1;
            }
            if (consistent(p) && (ps == p || sigma[ps] == qs) &&
                (ps == p || consistent(ps)))
                self(self, p + 1);
            sigma[p] = -1;
            used[q] = 0;
            if (star_free && ps != p) {
                sigma[ps] = -1;
                used[qs] = 0;
            }
        }
    };
    sigma[0] = 0;
    used[0] = 1;
    rec(rec, 1);
    std::sort(result.begin(), result.end());
    return result;
}

bool is_symmetric(const Scheme& s) {
    for (int p = 0; p < s.r; ++p)
        if (s.star[p] != p) return false;
    return true;
}

} // namespace ascheme
