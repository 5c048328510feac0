#include "helpers.hpp"

using namespace skb;

TEST_CASE("cyclic and symmetric group tables validate") {
    FiniteGroup z4 = make_group(th::cyclic_table(4));
    CHECK(z4.order() == 4);
    CHECK(z4.commutative());
    CHECK(z4.op(3, 2) == 1);
    CHECK(z4.inv(1) == 3);
    CHECK(z4.inv(0) == 0);

    FiniteGroup s3 = make_group(th::s3_table());
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.commutative());
    // (0 1) after (0 2) versus the other way around.
    CHECK(s3.op(2, 5) != s3.op(5, 2));
    for (int x = 0; x < 6; ++x) {
        CHECK(s3.op(0, x) == x);
        CHECK(s3.op(x, s3.inv(x)) == 0);
    }
}

TEST_CASE("group table defects are reported by kind") {
    SECTION("no two-sided unit") {
        Table t{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
        CHECK_THROWS_MATCHES(make_group(t), NotAGroup,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("no-unit")));
    }
    SECTION("unit present but a row repeats a value") {
        Table t{{0, 1, 2}, {1, 0, 0}, {2, 2, 1}};
        CHECK_THROWS_MATCHES(make_group(t), NotAGroup,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("not-latin")));
    }
    SECTION("latin with unit but not associative") {
        // Quasigroup of order 5 with unit 0; (1*1)*2 != 1*(1*2).
        Table t{{0, 1, 2, 3, 4},
                {1, 0, 3, 4, 2},
                {2, 4, 0, 1, 3},
                {3, 2, 4, 0, 1},
                {4, 3, 1, 2, 0}};
        CHECK_THROWS_MATCHES(make_group(t), NotAGroup,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("not-associative")));
    }
    SECTION("shape and range problems") {
        CHECK_THROWS_AS(make_group(Table{}), ValidationError);
        CHECK_THROWS_AS(make_group(Table{{0, 1}, {1}}), ValidationError);
        CHECK_THROWS_AS(make_group(Table{{0, 7}, {1, 0}}), ValidationError);
    }
    SECTION("order cap") {
        Caps tight;
        tight.group_order = 4;
        CHECK_THROWS_AS(make_group(th::s3_table(), tight), OrderCapExceeded);
    }
}

TEST_CASE("a stray unit is relabeled to index 0") {
    // x * y = x + y - 2 mod 4, so the unit sits at 2 in the raw table.
    Table t(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = ((i + j - 2) % 4 + 4) % 4;
    FiniteGroup g = make_group(t);
    for (int x = 0; x < 4; ++x) {
        CHECK(g.op(0, x) == x);
        CHECK(g.op(x, 0) == x);
    }
    CHECK(g.commutative());
    // Still cyclic of order 4: some element has order 4.
    bool found = false;
    for (int x = 1; x < 4; ++x)
        found = found || (g.op(x, x) != 0 && g.op(g.op(x, x), g.op(x, x)) == 0);
    CHECK(found);
}

TEST_CASE("subsets and subgroup predicates") {
    FiniteGroup s3 = make_group(th::s3_table());
    Subset a3 = th::sub(6, {0, 3, 4});
    Subset flip = th::sub(6, {0, 1});
    CHECK(is_subgroup(s3, a3));
    CHECK(is_subgroup(s3, flip));
    CHECK(is_normal_subgroup(s3, a3));
    CHECK_FALSE(is_normal_subgroup(s3, flip));
    CHECK_FALSE(is_subgroup(s3, th::sub(6, {0, 3})));
    CHECK_FALSE(is_subgroup(s3, th::sub(6, {1, 2})));

    CHECK(Subset::of(6, {4, 0, 3, 3}) == a3);
    CHECK_THROWS_AS(Subset::of(3, {0, 5}), ValidationError);
}

TEST_CASE("closure, commutators, centralizers on S3") {
    FiniteGroup s3 = make_group(th::s3_table());
    CHECK(subgroup_closure(s3, {3}) == th::sub(6, {0, 3, 4}));
    CHECK(subgroup_closure(s3, {1, 2}) == s3.full_subset());
    CHECK(subgroup_closure(s3, {}) == th::sub(6, {0}));

    CHECK(group_commutator_subgroup(s3) == th::sub(6, {0, 3, 4}));
    CHECK(group_commutator_subgroup(s3, th::sub(6, {0, 3, 4}), th::sub(6, {0, 1})) ==
          th::sub(6, {0, 3, 4}));

    CHECK(group_centralizer(s3, th::sub(6, {0, 3, 4})) == th::sub(6, {0, 3, 4}));
    CHECK(group_centralizer(s3, s3.full_subset()) == th::sub(6, {0}));

    FiniteGroup z4 = make_group(th::cyclic_table(4));
    CHECK(group_commutator_subgroup(z4) == th::sub(4, {0}));
    CHECK(group_centralizer(z4, z4.full_subset()) == z4.full_subset());
}

TEST_CASE("all subgroups of small groups") {
    FiniteGroup s3 = make_group(th::s3_table());
    std::vector<Subset> subs = all_subgroups(s3);
    REQUIRE(subs.size() == 6);
    CHECK(subs[0] == th::sub(6, {0}));
    CHECK(subs[1] == th::sub(6, {0, 1}));
    CHECK(subs[2] == th::sub(6, {0, 2}));
    CHECK(subs[3] == th::sub(6, {0, 5}));
    CHECK(subs[4] == th::sub(6, {0, 3, 4}));
    CHECK(subs[5] == s3.full_subset());

    // Klein group: trivial, three order-2 lines, full.
    CHECK(all_subgroups(make_group(th::klein_table())).size() == 5);
}

TEST_CASE("automorphism predicate") {
    FiniteGroup s3 = make_group(th::s3_table());
    for (int g = 0; g < 6; ++g) {
        std::vector<int> conj(6);
        for (int x = 0; x < 6; ++x) conj[x] = s3.conj(g, x);
        CHECK(is_automorphism(s3, conj));
    }
    std::vector<int> swap01{1, 0, 2, 3, 4, 5};
    CHECK_FALSE(is_automorphism(s3, swap01));
    CHECK_FALSE(is_automorphism(s3, std::vector<int>{0, 1}));
}
