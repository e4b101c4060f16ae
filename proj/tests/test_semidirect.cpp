#include "doctest.h"

#include "ascheme/fixtures.hpp"
#include "ascheme/iso.hpp"
#include "ascheme/semidirect.hpp"

#include "oracles.hpp"

using namespace ascheme;

TEST_CASE("order-12 product: shape, labels and frozen structure") {
    SemidirectScheme sd = fixtures::order12_product();
    const Scheme& s = *sd.scheme;
    CHECK(s.n == 12);
    CHECK(s.r == 6);
    CHECK(s.basepoint == 0);
    CHECK(valencies(s) == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK(s.star == std::vector<int>{0, 1, 5, 3, 4, 2});
    CHECK(sd.tau_r == 2);

    // labels: identity first, then sorted by (u, smallest class member)
    REQUIRE(sd.label_of.size() == 6);
    CHECK(sd.label_of[0].u == 0);
    CHECK(sd.label_of[0].t_class == RelSet{0});
    CHECK(sd.label_of[1].u == 0);
    CHECK(sd.label_of[1].t_class == RelSet{1});
    CHECK(sd.label_of[2].u == 1);
    CHECK(sd.label_of[2].t_class == RelSet{0, 1});
    CHECK(sd.label_of[3].u == 2);
    CHECK(sd.label_of[3].t_class == RelSet{0});
    CHECK(sd.label_of[4].u == 2);
    CHECK(sd.label_of[4].t_class == RelSet{1});
    CHECK(sd.label_of[5].u == 3);
    CHECK(sd.label_of[5].t_class == RelSet{0, 1});
}

TEST_CASE("order-12 product: collapses and star on labels") {
    SemidirectScheme sd = fixtures::order12_product();
    // both labels over each generator collapse to one relation
    CHECK(sd.lookup(1, 0) == 2);
    CHECK(sd.lookup(1, 1) == 2);
    CHECK(sd.lookup(3, 0) == 5);
    CHECK(sd.lookup(3, 1) == 5);
    // the involution-relation labels stay separate
    CHECK(sd.lookup(2, 0) == 3);
    CHECK(sd.lookup(2, 1) == 4);
    // exactly two relations of valency one
    int thin_count = 0;
    for (int v : valencies(*sd.scheme))
        if (v == 1) ++thin_count;
    CHECK(thin_count == 2);
    // transposing a relation transposes its U-part
    for (int i = 0; i < 6; ++i)
        CHECK(sd.label_of[sd.scheme->star[i]].u ==
              sd.u_scheme->star[sd.label_of[i].u]);
}

TEST_CASE("pair labels computed directly agree with the built coloring") {
    Action act = fixtures::cyclic4_on_triangle_action();
    SemidirectScheme sd = semidirect_product(act);
    for (int p1 = 0; p1 < 12; ++p1)
        for (int p2 = 0; p2 < 12; ++p2) {
            auto [u, trep] = relation_label(act, p1, p2);
            CHECK(sd.scheme->color_at(p1, p2) == sd.lookup(u, trep));
        }
}

TEST_CASE("unit-label products: composing with a diagonal label relabels only") {
    SemidirectScheme sd = fixtures::order12_product();
    for (int u = 0; u < sd.u_scheme->r; ++u)
        for (int t = 0; t < sd.tau_r; ++t) {
            RelSet prod = complex_product(*sd.scheme, {sd.lookup(u, 0)}, {sd.lookup(0, t)});
            CHECK(prod == RelSet{sd.lookup(u, t)});
        }
}

TEST_CASE("product of the trivial action equals the direct product oracle") {
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    SchemePtr t3 = fixtures::triangle_scheme();
    SemidirectScheme sd = semidirect_product(trivial_action(u4, t3));
    CHECK(sd.scheme->n == 12);
    CHECK(sd.scheme->r == 8);

    Scheme direct = oracles::direct_product_by_definition(*u4, *t3);
    CHECK(sd.scheme->color == direct.color);
    CHECK(sd.scheme->constants == direct.constants);
    CHECK(sd.scheme->star == direct.star);
    // constant tables factor: a((u1,t1),(u2,t2),(u3,t3)) = aU * aT
    for (int u1 = 0; u1 < 4; ++u1)
        for (int u2 = 0; u2 < 4; ++u2)
            for (int u3 = 0; u3 < 4; ++u3)
                for (int t1 = 0; t1 < 2; ++t1)
                    for (int t2 = 0; t2 < 2; ++t2)
                        for (int t3v = 0; t3v < 2; ++t3v)
                            CHECK(sd.scheme->a(sd.lookup(u1, t1), sd.lookup(u2, t2),
                                               sd.lookup(u3, t3v)) ==
                                  u4->a(u1, u2, u3) * t3->a(t1, t2, t3v));
}

TEST_CASE("product of the full action equals the wreath oracle") {
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    SchemePtr t3 = fixtures::triangle_scheme();
    SemidirectScheme sd = semidirect_product(full_action(u4, t3));
    CHECK(sd.scheme->n == 12);
    CHECK(sd.scheme->r == 5);
    CHECK(valencies(*sd.scheme) == std::vector<int>{1, 2, 3, 3, 3});

    Scheme wreath = oracles::wreath_product_by_definition(*u4, *t3);
    CHECK(sd.scheme->color == wreath.color);
    CHECK(sd.scheme->constants == wreath.constants);
}

TEST_CASE("every product's constants agree with the brute-force triple count") {
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    SchemePtr t3 = fixtures::triangle_scheme();
    for (SemidirectScheme sd :
         {fixtures::order12_product(), semidirect_product(trivial_action(u4, t3)),
          semidirect_product(full_action(u4, t3))}) {
        auto oracle = oracles::constants_by_triple_count(*sd.scheme);
        REQUIRE(oracle.has_value());
        CHECK(sd.scheme->constants == *oracle);
    }
}

TEST_CASE("double-sum counting oracle: all triples, and choice independence") {
    Action act = fixtures::cyclic4_on_triangle_action();
    SemidirectScheme sd = semidirect_product(act);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                auto Li = sd.label_of[i];
                auto Lj = sd.label_of[j];
                auto Lk = sd.label_of[k];
                long long expect = oracles::product_constant_by_formula(
                    act, Li.u, Li.t_class[0], Lj.u, Lj.t_class[0], Lk.u, Lk.t_class[0]);
                CHECK(sd.scheme->a(i, j, k) == expect);
                // the formula's internal representative choices do not matter
                CHECK(oracles::product_constant_by_formula(act, Li.u, Li.t_class[0], Lj.u,
                                                           Lj.t_class[0], Lk.u,
                                                           Lk.t_class[0], 1, 1) == expect);
            }
}

TEST_CASE("one-point factors collapse the product onto the other factor") {
    SchemePtr pt = make_scheme(from_color_matrix({{0}}));
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    SchemePtr t3 = fixtures::triangle_scheme();

    SemidirectScheme a = semidirect_product(trivial_action(u4, pt));
    CHECK(a.scheme->n == 4);
    CHECK(a.scheme->r == 4);
    CHECK(find_isomorphism(*a.scheme, *u4).has_value());

    SemidirectScheme b = semidirect_product(trivial_action(pt, t3));
    CHECK(b.scheme->n == 3);
    CHECK(b.scheme->r == 2);
    CHECK(find_isomorphism(*b.scheme, *t3).has_value());
}

TEST_CASE("distinguished splitting of each fixture product verifies") {
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    SchemePtr t3 = fixtures::triangle_scheme();
    for (SemidirectScheme sd :
         {fixtures::order12_product(), semidirect_product(trivial_action(u4, t3)),
          semidirect_product(full_action(u4, t3))}) {
        SplitData split = canonical_split(sd);
        CHECK(split.i_map == std::vector<int>{0, 3, 6, 9});
        CHECK(verify_split_condition(split));
        CHECK(split.t_iso_witness.has_value());
        CHECK(is_normal(*sd.scheme, split.t_tilde));
        // the diagonal subset collects exactly the unit-relation labels
        RelSet expect;
        for (int i = 0; i < sd.scheme->r; ++i)
            if (sd.label_of[i].u == 0) expect.push_back(i);
        CHECK(split.t_tilde == expect);
        // block i of the quotient hosts the image of point i of the acting scheme
        CHECK(split.y_of_block == std::vector<int>{0, 1, 2, 3});
        // the basepoint-coset subscheme is a copy of the acted-on scheme
        SubschemeResult sub = subscheme(*sd.scheme, split.t_tilde, sd.scheme->basepoint);
        CHECK(find_isomorphism(sub.scheme, *sd.t_scheme, true).has_value());
    }
}

TEST_CASE("order-12 splitting: embedded relation per acting relation") {
    SemidirectScheme sd = fixtures::order12_product();
    SplitData split = canonical_split(sd);
    CHECK(split.t_tilde == RelSet{0, 1});
    CHECK(split.i_rel == std::vector<int>{0, 2, 3, 5});
}
