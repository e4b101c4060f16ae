#pragma once

#include <memory>
#include <vector>

namespace ascheme {

// A relation subset: sorted, duplicate-free relation indices.
using RelSet = std::vector<int>;

RelSet normalized(RelSet s);
bool is_normalized(const RelSet& s);

// A finite association scheme on points {0..n-1} with relations {0..r-1}.
// color[x*n+y] is the relation containing the pair (x,y); relation 0 is the
// diagonal. star maps each relation to its transpose. constants holds the
// intersection numbers a(p,q,s) = |{z : (x,z) in p, (z,y) in q}| for any
// (and by validation every) pair (x,y) in s, laid out at (p*r+q)*r+s.
// Values are immutable once built; construct via from_color_matrix.
struct Scheme {
    int n = 0;
    int r = 0;
    int basepoint = 0;
    std::vector<int> color;
    std::vector<int> star;
    std::vector<int> constants;

    int color_at(int x, int y) const { return color[x * n + y]; }
    int a(int p, int q, int s) const { return constants[(p * r + q) * r + s]; }
    int valency(int s) const { return a(s, star[s], 0); }
};

using SchemePtr = std::shared_ptr<const Scheme>;

inline SchemePtr make_scheme(Scheme s) {
    return std::make_shared<const Scheme>(std::move(s));
}

// Builds and fully validates a scheme from an n x n relation-index table.
// Indices must be contiguous from 0 with the diagonal labeled 0. Throws
// SchemeError (BadIndex, NotAPartitionOfDiagonal, NoInvolution, NotRegular)
// with a witness message on any axiom failure.
Scheme from_color_matrix(const std::vector<std::vector<int>>& matrix, int basepoint = 0);

// Same, but from a flat row-major table.
Scheme from_flat_color_matrix(std::vector<int> color, int n, int basepoint = 0);

// The thin scheme of a finite group given by its Cayley table (identity must
// be element 0): color[x][y] is the g with y = x*g. Throws NotAGroup.
Scheme thin_from_group(const std::vector<std::vector<int>>& cayley);

// True iff every relation has valency 1 (i.e. the scheme is a group in
// disguise).
bool is_thin(const Scheme& s);

std::vector<int> valencies(const Scheme& s);

// Complex product PQ = { s : a(p,q,s) > 0 for some p in P, q in Q }.
RelSet complex_product(const Scheme& s, const RelSet& p, const RelSet& q);

// Elementwise transpose { p* : p in P }.
RelSet rel_star(const Scheme& s, const RelSet& p);

// Structural equality: same points, relations, coloring and basepoint.
bool same_scheme(const Scheme& a, const Scheme& b);

} // namespace ascheme
