#include "ascheme/closure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ascheme/error.hpp"

namespace ascheme {

bool is_closed(const Scheme& s, const RelSet& t) {
    if (!is_normalized(t) || t.empty() || t[0] != 0) return false;
    for (int p : t)
        if (p < 0 || p >= s.r) return false;
    for (int p : t)
        if (!std::binary_search(t.begin(), t.end(), s.star[p])) return false;
    for (int p : t)
        for (int q : t)
            for (int c = 0; c < s.r; ++c)
                if (s.a(p, q, c) > 0 && !std::binary_search(t.begin(), t.end(), c))
                    return false;
    return true;
}

bool is_normal(const Scheme& s, const RelSet& t) {
    for (int p = 0; p < s.r; ++p)
        if (complex_product(s, {p}, t) != complex_product(s, t, {p})) return false;
    return true;
}

ClosedSubset closure_of(const SchemePtr& s, const RelSet& seed) {
    std::vector<char> in(s->r, 0);
    in[0] = 1;
    for (int p : seed) {
        if (p < 0 || p >= s->r)
            throw SchemeError(ErrorKind::BadIndex,
                              "relation index " + std::to_string(p) + " out of range");
        in[p] = 1;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int p = 0; p < s->r; ++p) {
            if (!in[p]) continue;
            if (!in[s->star[p]]) {
                in[s->star[p]] = 1;
                grew = true;
            }
            for (int q = 0; q < s->r; ++q) {
                if (!in[q]) continue;
                for (int c = 0; c < s->r; ++c)
                    if (s->a(p, q, c) > 0 && !in[c]) {
                        in[c] = 1;
                        grew = true;
                    }
            }
        }
    }
    RelSet members;
    for (int p = 0; p < s->r; ++p)
        if (in[p]) members.push_back(p);
    return {s, members};
}

std::vector<ClosedSubset> enumerate_closed_subsets(const SchemePtr& s) {
    std::set<RelSet> found;
    if (s->r <= 12) {
        for (unsigned mask = 0; mask < (1u << s->r); ++mask) {
            RelSet seed;
            for (int p = 0; p < s->r; ++p)
                if (mask & (1u << p)) seed.push_back(p);
            found.insert(closure_of(s, seed).members);
        }
    } else {
        // lattice BFS: every closed subset is a join of single-relation closures
        std::vector<RelSet> singles;
        for (int p = 0; p < s->r; ++p) singles.push_back(closure_of(s, {p}).members);
        std::vector<RelSet> frontier{closure_of(s, {}).members};
        found.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<RelSet> next;
            for (const RelSet& k : frontier)
                for (const RelSet& d : singles) {
                    RelSet seed = k;
                    seed.insert(seed.end(), d.begin(), d.end());
                    RelSet j = closure_of(s, normalized(std::move(seed))).members;
                    if (found.insert(j).second) next.push_back(std::move(j));
                }
            frontier = std::move(next);
        }
    }
    std::vector<ClosedSubset> out;
    out.reserve(found.size());
    for (const RelSet& m : found) out.push_back({s, m});
    std::sort(out.begin(), out.end(), [](const ClosedSubset& a, const ClosedSubset& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

PointPartition cosets(const Scheme& s, const RelSet& t) {
    if (!is_closed(s, t))
        throw SchemeError(ErrorKind::BadIndex, "subset is not closed");
    PointPartition p;
    p.block_of.assign(s.n, -1);
    for (int x = 0; x < s.n; ++x) {
        if (p.block_of[x] >= 0) continue;
        int id = static_cast<int>(p.blocks.size());
        std::vector<int> block;
        for (int y = 0; y < s.n; ++y)
            if (std::binary_search(t.begin(), t.end(), s.color_at(x, y))) {
                block.push_back(y);
                p.block_of[y] = id;
            }
        p.blocks.push_back(std::move(block));
    }
    return p;
}

SubschemeResult subscheme(const Scheme& s, const RelSet& t, int x) {
    if (x < 0 || x >= s.n)
        throw SchemeError(ErrorKind::BadIndex, "point " + std::to_string(x) + " out of range");
    if (!is_closed(s, t))
        throw SchemeError(ErrorKind::BadIndex, "subset is not closed");
    std::vector<int> pts;
    for (int y = 0; y < s.n; ++y)
        if (std::binary_search(t.begin(), t.end(), s.color_at(x, y))) pts.push_back(y);
    int k = static_cast<int>(pts.size());

    // parent relations seen inside the coset, relabeled densely ascending
    std::set<int> present;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) present.insert(s.color_at(pts[i], pts[j]));
    RelSet rel_embed(present.begin(), present.end());
    std::vector<int> to_sub(s.r, -1);
    for (size_t i = 0; i < rel_embed.size(); ++i) to_sub[rel_embed[i]] = static_cast<int>(i);

    std::vector<int> flat(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            flat[static_cast<size_t>(i) * k + j] = to_sub[s.color_at(pts[i], pts[j])];
    int base = static_cast<int>(std::find(pts.begin(), pts.end(), x) - pts.begin());

    SubschemeResult out;
    out.scheme = from_flat_color_matrix(std::move(flat), k, base);
    out.point_embed = std::move(pts);
    out.rel_embed = std::move(rel_embed);
    return out;
}

QuotientScheme quotient(const SchemePtr& s, const RelSet& t) {
    PointPartition part = cosets(*s, t);
    int nb = static_cast<int>(part.blocks.size());
    std::vector<int> rel_map(s->r, -1);
    std::vector<int> qflat(static_cast<size_t>(nb) * nb, -1);
    int next = 0;
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) {
            // all parent relations meeting block pair (i,j) share one class
            int idx = -1;
            std::vector<int> seen;
            for (int x : part.blocks[i])
                for (int y : part.blocks[j]) {
                    int c = s->color_at(x, y);
                    if (rel_map[c] >= 0) {
                        if (idx >= 0 && rel_map[c] != idx)
                            throw SchemeError(ErrorKind::BadIndex,
                                              "internal: inconsistent quotient classes");
                        idx = rel_map[c];
                    } else {
                        seen.push_back(c);
                    }
                }
            if (idx < 0) idx = next++;
            for (int c : seen) rel_map[c] = idx;
            qflat[static_cast<size_t>(i) * nb + j] = idx;
        }
    QuotientScheme q;
    q.scheme = from_flat_color_matrix(std::move(qflat), nb, part.block_of[s->basepoint]);
    q.rel_map = std::move(rel_map);
    q.partition = std::move(part);
    q.parent = s;
    return q;
}

} // namespace ascheme
