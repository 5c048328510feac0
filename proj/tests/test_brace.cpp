#include "helpers.hpp"

using namespace skb;

TEST_CASE("trivial brace: circle equals star, lambda is the identity") {
    SkewBrace b = trivial_brace(make_group(th::s3_table()));
    CHECK(b.order() == 6);
    CHECK(b.star() == b.circ());
    for (int a = 0; a < 6; ++a)
        for (int u = 0; u < 6; ++u) CHECK(b.lambda(a, u) == u);
    CHECK(lambda_inverse_identity_check(b));
    CHECK_FALSE(is_abelian_object(b));
    CHECK(is_abelian_object(trivial_brace(make_group(th::cyclic_table(4)))));
}

TEST_CASE("opposite brace: lambda becomes conjugation") {
    FiniteGroup s3 = make_group(th::s3_table());
    SkewBrace b = op_brace(s3);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) CHECK(b.circ().op(x, y) == s3.op(y, x));
    for (int a = 0; a < 6; ++a)
        for (int u = 0; u < 6; ++u) CHECK(b.lambda(a, u) == s3.conj(s3.inv(a), u));
    CHECK(lambda_inverse_identity_check(b));
    // On an abelian group the opposite brace collapses to the trivial one.
    CHECK(op_brace(make_group(th::cyclic_table(5))).circ() ==
          make_group(th::cyclic_table(5)));
}

TEST_CASE("brace axiom failure is witnessed lex-first") {
    Digroup d = make_digroup(th::theta_z3_star(), th::theta_z3_circ());
    auto w = check_brace_axiom(d);
    REQUIRE(w.has_value());
    CHECK(*w == std::array<int, 3>{1, 1, 4});
    // The witness really violates a o (b * c) = (a o b) * a^- * (a o c).
    const auto [a, b, c] = *w;
    const int lhs = d.circ.op(a, d.star.op(b, c));
    const int rhs = d.star.op(d.star.op(d.circ.op(a, b), d.star.inv(a)), d.circ.op(a, c));
    CHECK(lhs != rhs);
    CHECK_THROWS_AS(make_skew_brace(d), NotABrace);
}

TEST_CASE("digroup construction guards") {
    CHECK_THROWS_AS(make_digroup(th::cyclic_table(4), th::cyclic_table(5)),
                    ValidationError);
    // Valid group tables, but the circle unit sits at index 1.
    Table unit_at_one{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(make_digroup(th::cyclic_table(2), unit_at_one), ValidationError);
    CHECK_THROWS_AS(make_digroup(unit_at_one, th::cyclic_table(2)), ValidationError);

    Caps tight;
    tight.brace_order = 4;
    CHECK_THROWS_AS(trivial_brace(make_group(th::s3_table()), tight), OrderCapExceeded);
}

TEST_CASE("radical ring brace for 2Z/8Z") {
    SkewBrace b = jacobson_brace(th::ring2z8_add(), th::ring2z8_mul());
    const Table expected_circ{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    CHECK(b.circ().rows() == expected_circ);
    CHECK(b.star().rows() == th::ring2z8_add());
    CHECK(lambda_inverse_identity_check(b));
    CHECK_FALSE(is_abelian_object(b));
}

TEST_CASE("radical ring construction rejects defective input") {
    SECTION("non-commutative addition") {
        CHECK_THROWS_MATCHES(jacobson_brace(th::s3_table(), th::s3_table()), NotARing,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("commutative")));
    }
    SECTION("addition that is no group at all") {
        Table bad{{0, 1}, {1, 1}};
        CHECK_THROWS_AS(jacobson_brace(bad, th::ring2z8_mul()), NotARing);
    }
    SECTION("multiplication breaks distributivity") {
        // x . y = x (left projection) is associative but not distributive
        // over Z/4.
        Table proj(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) proj[i][j] = i;
        CHECK_THROWS_MATCHES(jacobson_brace(th::ring2z8_add(), proj), NotARing,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("distributivity")));
    }
    SECTION("unit element blocks radicality") {
        // Z/4 with its genuine multiplication: 1 has no circle inverse.
        Table mul(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) mul[i][j] = (i * j) % 4;
        CHECK_THROWS_MATCHES(jacobson_brace(th::ring2z8_add(), mul), NotRadical,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("1")));
    }
    SECTION("mul table shape") {
        CHECK_THROWS_AS(jacobson_brace(th::ring2z8_add(), Table{{0}}), NotARing);
    }
}

TEST_CASE("lambda is cached consistently") {
    SkewBrace b = jacobson_brace(th::ring2z8_add(), th::ring2z8_mul());
    for (int a = 0; a < 4; ++a) {
        std::vector<int> row = b.lambda_row(a);
        for (int u = 0; u < 4; ++u) {
            CHECK(row[u] == b.lambda(a, u));
            CHECK(b.lambda(a, u) ==
                  b.star().op(b.star().inv(a), b.circ().op(a, u)));
        }
        CHECK(is_automorphism(b.star(), row));
    }
    // x o y = x * lambda_x(y) ties the three tables together.
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK(b.circ().op(x, y) == b.star().op(x, b.lambda(x, y)));
}
