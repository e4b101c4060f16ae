#include "ascheme/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace ascheme::kernels {

namespace {

// Scratch for one pair's counts: dense r*r array plus the touched indices so
// resets stay O(touched) and the per-pair cost is O(n), independent of r.
struct PairCounter {
    std::vector<long long> cnt;
    std::vector<int> touched;

    explicit PairCounter(int r) : cnt(static_cast<size_t>(r) * r, 0) {}

    void reset() {
        for (int idx : touched) cnt[idx] = 0;
        touched.clear();
    }
};

// Checks one pair (x,y) against the table; fills out on mismatch.
bool pair_ok(const std::vector<int>& color, int n, int r,
             const std::vector<int>& constants, int x, int y,
             PairCounter& pc, RegularityViolation& out) {
    pc.reset();
    const int* rowx = color.data() + static_cast<size_t>(x) * n;
    int s = rowx[y];
    for (int z = 0; z < n; ++z) {
        int p = rowx[z];
        int q = color[static_cast<size_t>(z) * n + y];
        int idx = p * r + q;
        if (pc.cnt[idx] == 0) pc.touched.push_back(idx);
        ++pc.cnt[idx];
    }
    // Only the touched (p,q) are compared here (smallest first for a
    // canonical witness); entries the pair never touches are covered by the
    // slice pre-pass below, which pins every slice's total mass to n.
    std::sort(pc.touched.begin(), pc.touched.end());
    for (int idx : pc.touched) {
        int p = idx / r, q = idx % r;
        long long expect = constants[(static_cast<size_t>(p) * r + q) * r + s];
        if (pc.cnt[idx] != expect) {
            out = {p, q, s, x, y, expect, pc.cnt[idx]};
            return false;
        }
    }
    return true;
}

// Each (. , . , s) slice must be nonnegative and sum to n: combined with the
// touched-entry checks this forces the untouched entries to zero, so a
// corrupt value in a never-realized (p,q) slot cannot slip through. On a bad
// slice the witness is recomputed exactly at the least pair of that relation.
bool slices_ok(const std::vector<int>& color, int n, int r,
               const std::vector<int>& constants, RegularityViolation& out) {
    for (int s = 0; s < r; ++s) {
        long long mass = 0;
        bool negative = false;
        for (int p = 0; p < r && !negative; ++p)
            for (int q = 0; q < r; ++q) {
                int v = constants[(static_cast<size_t>(p) * r + q) * r + s];
                if (v < 0) {
                    negative = true;
                    break;
                }
                mass += v;
            }
        if (!negative && mass == n) continue;

        // locate the least pair in relation s and report the first mismatch
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (color[static_cast<size_t>(x) * n + y] != s) continue;
                std::vector<long long> cnt(static_cast<size_t>(r) * r, 0);
                for (int z = 0; z < n; ++z)
                    ++cnt[static_cast<size_t>(color[static_cast<size_t>(x) * n + z]) * r +
                          color[static_cast<size_t>(z) * n + y]];
                for (int p = 0; p < r; ++p)
                    for (int q = 0; q < r; ++q) {
                        long long expect =
                            constants[(static_cast<size_t>(p) * r + q) * r + s];
                        if (cnt[static_cast<size_t>(p) * r + q] != expect) {
                            out = {p, q, s, x, y, expect,
                                   cnt[static_cast<size_t>(p) * r + q]};
                            return false;
                        }
                    }
                // counts sum to n, the slice does not: unreachable
                out = {0, 0, s, x, y, constants[s], cnt[0]};
                return false;
            }
        // the relation never occurs, so its slice must be all zero
        for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q) {
                int v = constants[(static_cast<size_t>(p) * r + q) * r + s];
                if (v != 0) {
                    out = {p, q, s, -1, -1, v, 0};
                    return false;
                }
            }
    }
    return true;
}

} // namespace

std::vector<int> constants_from_witnesses(const std::vector<int>& color, int n, int r) {
    std::vector<int> witness_x(r, -1), witness_y(r, -1);
    int found = 0;
    for (int x = 0; x < n && found < r; ++x)
        for (int y = 0; y < n && found < r; ++y) {
            int s = color[static_cast<size_t>(x) * n + y];
            if (witness_x[s] < 0) {
                witness_x[s] = x;
                witness_y[s] = y;
                ++found;
            }
        }
    std::vector<int> constants(static_cast<size_t>(r) * r * r, 0);
    for (int s = 0; s < r; ++s) {
        int x = witness_x[s], y = witness_y[s];
        for (int z = 0; z < n; ++z) {
            int p = color[static_cast<size_t>(x) * n + z];
            int q = color[static_cast<size_t>(z) * n + y];
            ++constants[(static_cast<size_t>(p) * r + q) * r + s];
        }
    }
    return constants;
}

std::optional<RegularityViolation> verify_constants_serial(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants) {
    PairCounter pc(r);
    RegularityViolation v{};
    if (!slices_ok(color, n, r, constants, v)) return v;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!pair_ok(color, n, r, constants, x, y, pc, v)) return v;
    return std::nullopt;
}

std::optional<RegularityViolation> verify_constants_parallel(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants) {
#ifdef _OPENMP
    {
        // the slice pre-pass is cheap; run it serially either way
        RegularityViolation v{};
        if (!slices_ok(color, n, r, constants, v)) return v;
    }
    // Reduce to the violation at the lexicographically least (x,y) so the
    // verdict matches the serial reference exactly.
    long long best_pair = -1;
    RegularityViolation best{};
#pragma omp parallel
    {
        PairCounter pc(r);
        RegularityViolation v{};
        long long local_pair = -1;
        RegularityViolation local{};
#pragma omp for schedule(static)
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                long long id = static_cast<long long>(x) * n + y;
                if (local_pair >= 0 && id > local_pair) continue;
                if (!pair_ok(color, n, r, constants, x, y, pc, v)) {
                    local_pair = id;
                    local = v;
                }
            }
        }
        if (local_pair >= 0) {
#pragma omp critical
            {
                if (best_pair < 0 || local_pair < best_pair) {
                    best_pair = local_pair;
                    best = local;
                }
            }
        }
    }
    if (best_pair >= 0) return best;
    return std::nullopt;
#else
    return verify_constants_serial(color, n, r, constants);
#endif
}

std::optional<RegularityViolation> verify_constants(
    const std::vector<int>& color, int n, int r, const std::vector<int>& constants) {
    if (n >= 64) return verify_constants_parallel(color, n, r, constants);
    return verify_constants_serial(color, n, r, constants);
}

namespace {

inline int label_at(const LabelTables& t, int z1, int z2) {
    int y1 = z1 / t.n, x1 = z1 % t.n;
    int y2 = z2 / t.n, x2 = z2 % t.n;
    int pr = y1 * t.m + y2;
    int qb = t.qn[pr];
    int qrel = t.qcolor[pr][t.dom_image_block[pr][x1] * qb + t.cod_block[pr][x2]];
    return t.rel_index[pr][qrel];
}

} // namespace

std::vector<int> fill_labels_serial(const LabelTables& t) {
    int total = t.m * t.n;
    std::vector<int> color(static_cast<size_t>(total) * total);
    for (int z1 = 0; z1 < total; ++z1)
        for (int z2 = 0; z2 < total; ++z2)
            color[static_cast<size_t>(z1) * total + z2] = label_at(t, z1, z2);
    return color;
}

std::vector<int> fill_labels_parallel(const LabelTables& t) {
#ifdef _OPENMP
    int total = t.m * t.n;
    std::vector<int> color(static_cast<size_t>(total) * total);
#pragma omp parallel for schedule(static)
    for (int z1 = 0; z1 < total; ++z1)
        for (int z2 = 0; z2 < total; ++z2)
            color[static_cast<size_t>(z1) * total + z2] = label_at(t, z1, z2);
    return color;
#else
    return fill_labels_serial(t);
#endif
}

std::vector<int> fill_labels(const LabelTables& t) {
    if (t.m * t.n >= 64) return fill_labels_parallel(t);
    return fill_labels_serial(t);
}

} // namespace ascheme::kernels
