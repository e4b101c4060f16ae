#include "doctest.h"

#include "ascheme/closure.hpp"
#include "ascheme/error.hpp"
#include "ascheme/fixtures.hpp"
#include "ascheme/iso.hpp"

#include "oracles.hpp"

using namespace ascheme;

TEST_CASE("closed-subset census of the order-12 product") {
    SemidirectScheme sd = fixtures::order12_product();
    auto subs = enumerate_closed_subsets(sd.scheme);
    REQUIRE(subs.size() == 5);
    CHECK(subs[0].members == RelSet{0});
    CHECK(subs[1].members == RelSet{0, 1});
    CHECK(subs[2].members == RelSet{0, 3});
    CHECK(subs[3].members == RelSet{0, 1, 3, 4});
    CHECK(subs[4].members == RelSet{0, 1, 2, 3, 4, 5});
    for (const auto& c : subs) {
        CHECK(is_closed(*sd.scheme, c.members));
        CHECK(is_normal(*sd.scheme, c.members));
    }
}

TEST_CASE("closures of single relations") {
    SemidirectScheme sd = fixtures::order12_product();
    CHECK(closure_of(sd.scheme, {}).members == RelSet{0});
    CHECK(closure_of(sd.scheme, {1}).members == RelSet{0, 1});
    CHECK(closure_of(sd.scheme, {3}).members == RelSet{0, 3});
    CHECK(closure_of(sd.scheme, {4}).members == RelSet{0, 1, 3, 4});
    // either valency-3 relation generates everything
    CHECK(closure_of(sd.scheme, {2}).members == RelSet{0, 1, 2, 3, 4, 5});
    CHECK(closure_of(sd.scheme, {5}).members == RelSet{0, 1, 2, 3, 4, 5});
}

TEST_CASE("closed subsets of a thin scheme are its subgroups") {
    SchemePtr u4 = fixtures::cyclic_scheme(4);
    auto subs = enumerate_closed_subsets(u4);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].members == RelSet{0});
    CHECK(subs[1].members == RelSet{0, 2});
    CHECK(subs[2].members == RelSet{0, 1, 2, 3});
}

TEST_CASE("non-closed and non-normal detection") {
    SemidirectScheme sd = fixtures::order12_product();
    CHECK_FALSE(is_closed(*sd.scheme, {0, 2}));
    CHECK_FALSE(is_closed(*sd.scheme, {0, 4}));
    // a closed subset of the group-divisible fixture that is not normal
    // does not exist (rank 3, both relations symmetric), so probe normality
    // on a genuinely one-sided example instead: subsets must contain 0
    CHECK_FALSE(is_closed(*sd.scheme, {1}));
}

TEST_CASE("cosets partition the points by smallest representative") {
    SemidirectScheme sd = fixtures::order12_product();
    PointPartition part = cosets(*sd.scheme, {0, 1});
    REQUIRE(part.blocks.size() == 4);
    CHECK(part.blocks[0] == std::vector<int>{0, 1, 2});
    CHECK(part.blocks[1] == std::vector<int>{3, 4, 5});
    CHECK(part.blocks[2] == std::vector<int>{6, 7, 8});
    CHECK(part.blocks[3] == std::vector<int>{9, 10, 11});
    for (int b = 0; b < 4; ++b)
        for (int x : part.blocks[b]) CHECK(part.block_of[x] == b);

    PointPartition p2 = cosets(*sd.scheme, {0, 3});
    CHECK(p2.blocks.size() == 6);
    CHECK(p2.blocks[0] == std::vector<int>{0, 6});
}

TEST_CASE("subscheme on a coset of the four-relation subset") {
    SemidirectScheme sd = fixtures::order12_product();
    RelSet k3{0, 1, 3, 4};
    SubschemeResult sub = subscheme(*sd.scheme, k3, 0);
    CHECK(sub.scheme.n == 6);
    CHECK(sub.scheme.r == 4);
    CHECK(sub.rel_embed == k3);
    CHECK(sub.point_embed == std::vector<int>{0, 1, 2, 6, 7, 8});
    CHECK(sub.scheme.basepoint == 0);
    // colors restrict faithfully
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            CHECK(sub.rel_embed[sub.scheme.color_at(x, y)] ==
                  sd.scheme->color_at(sub.point_embed[x], sub.point_embed[y]));
    // basepoint tracks the defining point; the coloring is the same either way
    SubschemeResult sub2 = subscheme(*sd.scheme, k3, 7);
    CHECK(sub2.point_embed[sub2.scheme.basepoint] == 7);
    CHECK(sub2.scheme.color == sub.scheme.color);

    CHECK(is_symmetric(sub.scheme));
    CHECK(algebraic_automorphisms(sub.scheme).size() == 1);
}

TEST_CASE("subscheme on a singleton subset is the one-point scheme") {
    SemidirectScheme sd = fixtures::order12_product();
    SubschemeResult sub = subscheme(*sd.scheme, {0}, 5);
    CHECK(sub.scheme.n == 1);
    CHECK(sub.scheme.r == 1);
    CHECK(sub.point_embed == std::vector<int>{5});
}

TEST_CASE("quotient by the rank-two closed subset is thin of order four") {
    SemidirectScheme sd = fixtures::order12_product();
    QuotientScheme q = quotient(sd.scheme, {0, 1});
    CHECK(q.scheme.n == 4);
    CHECK(q.scheme.r == 4);
    CHECK(is_thin(q.scheme));
    CHECK(q.rel_map == std::vector<int>{0, 0, 1, 2, 2, 3});
    // and it is the cyclic group of order four
    auto w = find_isomorphism(q.scheme, *fixtures::cyclic_scheme(4), true);
    REQUIRE(w.has_value());
    CHECK(w->based);
    // quotient constants agree with the brute-force oracle
    auto oracle = oracles::constants_by_triple_count(q.scheme);
    REQUIRE(oracle.has_value());
    CHECK(q.scheme.constants == *oracle);
}

TEST_CASE("quotients by the other proper subsets") {
    SemidirectScheme sd = fixtures::order12_product();
    QuotientScheme q1 = quotient(sd.scheme, {0, 3});
    CHECK(q1.scheme.n == 6);
    CHECK(q1.scheme.r == 3);
    CHECK_FALSE(is_thin(q1.scheme));
    CHECK(q1.rel_map == std::vector<int>{0, 1, 2, 0, 1, 2});

    QuotientScheme q3 = quotient(sd.scheme, {0, 1, 3, 4});
    CHECK(q3.scheme.n == 2);
    CHECK(q3.scheme.r == 2);
    CHECK(is_thin(q3.scheme));
    CHECK(q3.rel_map == std::vector<int>{0, 0, 1, 0, 0, 1});
}

TEST_CASE("quotient by the trivial and full subsets are the scheme and a point") {
    SemidirectScheme sd = fixtures::order12_product();
    QuotientScheme qt = quotient(sd.scheme, {0});
    CHECK(same_scheme(qt.scheme, *sd.scheme));
    QuotientScheme qf = quotient(sd.scheme, {0, 1, 2, 3, 4, 5});
    CHECK(qf.scheme.n == 1);
    CHECK(qf.scheme.r == 1);
}

TEST_CASE("quotient rejects a non-closed subset") {
    SemidirectScheme sd = fixtures::order12_product();
    CHECK_THROWS_AS(quotient(sd.scheme, {0, 2}), SchemeError);
    CHECK_THROWS_AS(subscheme(*sd.scheme, {0, 4}, 0), SchemeError);
    CHECK_THROWS_AS(subscheme(*sd.scheme, {0, 1}, 99), SchemeError);
}

TEST_CASE("quotient relation classes follow the coset color") {
    // each parent relation maps to the class of the block pair it colors
    SemidirectScheme sd = fixtures::order12_product();
    QuotientScheme q = quotient(sd.scheme, {0, 1});
    for (int x = 0; x < sd.scheme->n; ++x)
        for (int y = 0; y < sd.scheme->n; ++y) {
            int bx = q.partition.block_of[x], by = q.partition.block_of[y];
            CHECK(q.scheme.color_at(bx, by) == q.rel_map[sd.scheme->color_at(x, y)]);
        }
}
