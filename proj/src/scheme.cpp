#include "ascheme/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ascheme/error.hpp"
#include "ascheme/kernels.hpp"

namespace ascheme {

RelSet normalized(RelSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool is_normalized(const RelSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

namespace {

std::string pair_str(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

Scheme from_flat_color_matrix(std::vector<int> color, int n, int basepoint) {
    if (n <= 0 || color.size() != static_cast<size_t>(n) * n)
        throw SchemeError(ErrorKind::BadIndex, "color matrix is not square");
    if (basepoint < 0 || basepoint >= n)
        throw SchemeError(ErrorKind::BadIndex,
                          "basepoint " + std::to_string(basepoint) + " out of range");

    int maxc = 0;
    for (int c : color) {
        if (c < 0)
            throw SchemeError(ErrorKind::BadIndex, "negative relation index");
        maxc = std::max(maxc, c);
    }
    int r = maxc + 1;
    std::vector<char> seen(r, 0);
    for (int c : color) seen[c] = 1;
    for (int s = 0; s < r; ++s)
        if (!seen[s])
            throw SchemeError(ErrorKind::BadIndex,
                              "relation indices not contiguous: " + std::to_string(s) +
                                  " missing below " + std::to_string(maxc));

    for (int x = 0; x < n; ++x)
        if (color[static_cast<size_t>(x) * n + x] != 0)
            throw SchemeError(ErrorKind::BadIndex,
                              "diagonal entry at point " + std::to_string(x) +
                                  " is labeled " +
                                  std::to_string(color[static_cast<size_t>(x) * n + x]) +
                                  ", expected 0");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && color[static_cast<size_t>(x) * n + y] == 0)
                throw SchemeError(ErrorKind::NotAPartitionOfDiagonal,
                                  "relation 0 contains off-diagonal pair " + pair_str(x, y));

    // star from one witness per relation, then verified on every pair
    std::vector<int> star(r, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int s = color[static_cast<size_t>(x) * n + y];
            if (star[s] < 0) star[s] = color[static_cast<size_t>(y) * n + x];
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int s = color[static_cast<size_t>(x) * n + y];
            if (color[static_cast<size_t>(y) * n + x] != star[s])
                throw SchemeError(ErrorKind::NoInvolution,
                                  "transpose of relation " + std::to_string(s) +
                                      " is not a single relation: witness " + pair_str(x, y));
        }
    for (int s = 0; s < r; ++s)
        if (star[star[s]] != s)
            throw SchemeError(ErrorKind::NoInvolution,
                              "star is not an involution at relation " + std::to_string(s));

    std::vector<int> constants = kernels::constants_from_witnesses(color, n, r);
    if (auto v = kernels::verify_constants(color, n, r, constants))
        throw SchemeError(ErrorKind::NotRegular,
                          "a(" + std::to_string(v->p) + "," + std::to_string(v->q) + "," +
                              std::to_string(v->s) + ") is " + std::to_string(v->expected) +
                              " at the witness pair but " + std::to_string(v->actual) +
                              " at " + pair_str(v->x, v->y));

    Scheme s;
    s.n = n;
    s.r = r;
    s.basepoint = basepoint;
    s.color = std::move(color);
    s.star = std::move(star);
    s.constants = std::move(constants);
    return s;
}

Scheme from_color_matrix(const std::vector<std::vector<int>>& matrix, int basepoint) {
    int n = static_cast<int>(matrix.size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != n)
            throw SchemeError(ErrorKind::BadIndex, "color matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_flat_color_matrix(std::move(flat), n, basepoint);
}

Scheme thin_from_group(const std::vector<std::vector<int>>& cayley) {
    int m = static_cast<int>(cayley.size());
    if (m <= 0) throw SchemeError(ErrorKind::NotAGroup, "empty table");
    for (const auto& row : cayley) {
        if (static_cast<int>(row.size()) != m)
            throw SchemeError(ErrorKind::NotAGroup, "table is not square");
        for (int v : row)
            if (v < 0 || v >= m)
                throw SchemeError(ErrorKind::NotAGroup, "entry out of range");
    }
    for (int g = 0; g < m; ++g)
        if (cayley[0][g] != g || cayley[g][0] != g)
            throw SchemeError(ErrorKind::NotAGroup,
                              "element 0 is not a two-sided identity at " + std::to_string(g));
    // Latin square (gives inverses once associativity holds)
    for (int g = 0; g < m; ++g) {
        std::vector<char> row_seen(m, 0), col_seen(m, 0);
        for (int h = 0; h < m; ++h) {
            if (row_seen[cayley[g][h]]++)
                throw SchemeError(ErrorKind::NotAGroup,
                                  "row " + std::to_string(g) + " is not a permutation");
            if (col_seen[cayley[h][g]]++)
                throw SchemeError(ErrorKind::NotAGroup,
                                  "column " + std::to_string(g) + " is not a permutation");
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    throw SchemeError(ErrorKind::NotAGroup,
                                      "not associative at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");

    // color[x][y] = the g with y = x*g
    std::vector<int> gpos(static_cast<size_t>(m) * m);
    for (int x = 0; x < m; ++x)
        for (int g = 0; g < m; ++g) gpos[static_cast<size_t>(x) * m + cayley[x][g]] = g;
    return from_flat_color_matrix(std::move(gpos), m, 0);
}

bool is_thin(const Scheme& s) {
    for (int p = 0; p < s.r; ++p)
        if (s.valency(p) != 1) return false;
    return true;
}

std::vector<int> valencies(const Scheme& s) {
    std::vector<int> v(s.r);
    for (int p = 0; p < s.r; ++p) v[p] = s.valency(p);
    return v;
}

RelSet complex_product(const Scheme& s, const RelSet& p, const RelSet& q) {
    std::vector<char> in(s.r, 0);
    for (int a : p)
        for (int b : q)
            for (int c = 0; c < s.r; ++c)
                if (s.a(a, b, c) > 0) in[c] = 1;
    RelSet out;
    for (int c = 0; c < s.r; ++c)
        if (in[c]) out.push_back(c);
    return out;
}

RelSet rel_star(const Scheme& s, const RelSet& p) {
    RelSet out;
    out.reserve(p.size());
    for (int a : p) out.push_back(s.star[a]);
    return normalized(std::move(out));
}

bool same_scheme(const Scheme& a, const Scheme& b) {
    return a.n == b.n && a.r == b.r && a.basepoint == b.basepoint && a.color == b.color;
}

} // namespace ascheme
