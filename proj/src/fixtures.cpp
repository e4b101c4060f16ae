#include "ascheme/fixtures.hpp"

namespace ascheme::fixtures {

SchemePtr triangle_scheme() {
    return make_scheme(from_color_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 0));
}

std::vector<std::vector<int>> cyclic_group_table(int m) {
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    return t;
}

SchemePtr cyclic_scheme(int m) {
    return make_scheme(thin_from_group(cyclic_group_table(m)));
}

std::vector<std::vector<int>> klein_four_table() {
    return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

Action cyclic4_on_triangle_action() {
    SchemePtr u4 = cyclic_scheme(4);
    SchemePtr t3 = triangle_scheme();
    LabellingSet tau = tau_of(*t3);
    std::vector<int> id_alpha{0, 1};
    std::vector<TauScheme> pts(4, make_tau_scheme(tau, t3, id_alpha));

    std::vector<int> id_pts{0, 1, 2};
    CMorphism id_m = identity_cmorphism(t3);
    CMorphism full_m = make_cmorphism(t3, t3, {0, 1}, {0, 1}, id_pts);

    // trivial morphisms across the order-2 relation, full across the generators
    std::vector<CMorphism> prs;
    prs.reserve(16);
    for (int y1 = 0; y1 < 4; ++y1)
        for (int y2 = 0; y2 < 4; ++y2) {
            int d = (y2 - y1 + 4) % 4;
            prs.push_back(d == 1 || d == 3 ? full_m : id_m);
        }
    return build_action(u4, t3, std::move(pts), std::move(prs));
}

SemidirectScheme order12_product() {
    return semidirect_product(cyclic4_on_triangle_action());
}

SchemePtr order12_reference_relabeling() {
    SemidirectScheme sd = order12_product();
    const Scheme& s = *sd.scheme;

    // reference point order: (a,1),(c,1),(a,2),(a,3),(c,2),(c,3),
    //                        (b,1),(b,2),(b,3),(d,1),(d,2),(d,3)
    // with composite (y,x) encoded y*3+x for y in {a,b,c,d} = {0,1,2,3}
    const int pts[12] = {0, 6, 1, 2, 7, 8, 3, 4, 5, 9, 10, 11};
    // reference relation order: [0,1],[2,1],[0,t],[2,t],[1,1],[3,1]
    // against the product order  [0,1],[0,t],[1,1],[2,1],[2,t],[3,1]
    const int rel_to_ref[6] = {0, 2, 4, 1, 3, 5};

    std::vector<int> flat(144);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j)
            flat[i * 12 + j] = rel_to_ref[s.color_at(pts[i], pts[j])];
    return make_scheme(from_flat_color_matrix(std::move(flat), 12, 0));
}

SchemePtr group_divisible_scheme(int groups, int block_size) {
    int n = groups * block_size;
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            flat[static_cast<size_t>(x) * n + y] =
                x == y ? 0 : (x / block_size == y / block_size ? 1 : 2);
    return make_scheme(from_flat_color_matrix(std::move(flat), n, 0));
}

} // namespace ascheme::fixtures
