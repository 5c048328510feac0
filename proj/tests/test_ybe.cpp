#include "helpers.hpp"

using namespace skb;

namespace {

std::vector<SkewBrace> corpus() {
    std::vector<SkewBrace> out;
    out.push_back(trivial_brace(make_group(th::s3_table())));
    out.push_back(op_brace(make_group(th::s3_table())));
    out.push_back(trivial_brace(make_group(th::cyclic_table(4))));
    out.push_back(trivial_brace(make_group(th::klein_table())));
    out.push_back(jacobson_brace(th::ring2z8_add(), th::ring2z8_mul()));
    for (const EnumeratedBrace& e : enumerate_braces(6, true))
        out.push_back(make_skew_brace(e.star, e.circ));
    return out;
}

// Plain loops re-checking the braid identity on triples, independent of the
// witness scanner inside the library.
bool braid_holds(const YbeMap& r) {
    const int n = r.n;
    auto apply12 = [&](std::array<int, 3> t) {
        return std::array<int, 3>{r.first[t[0]][t[1]], r.second[t[0]][t[1]], t[2]};
    };
    auto apply23 = [&](std::array<int, 3> t) {
        return std::array<int, 3>{t[0], r.first[t[1]][t[2]], r.second[t[1]][t[2]]};
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                std::array<int, 3> t{x, y, z};
                if (apply12(apply23(apply12(t))) != apply23(apply12(apply23(t))))
                    return false;
            }
    return true;
}

} // namespace

TEST_CASE("trivial brace gives r(x, y) = (y, y^-1 x y)") {
    FiniteGroup g = make_group(th::s3_table());
    YbeMap r = build_r(trivial_brace(g));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            CHECK(r.first[x][y] == y);
            CHECK(r.second[x][y] == g.op(g.op(g.inv(y), x), y));
        }
}

TEST_CASE("every corpus brace yields a non-degenerate braided bijection") {
    for (const SkewBrace& b : corpus()) {
        YbeMap r = build_r(b);
        YbeReport rep = ybe_report(r);
        CHECK(rep.ok());
        CHECK(rep.bijective);
        CHECK(rep.braid);
        CHECK(rep.nondegenerate);
        CHECK_FALSE(rep.bijective_witness.has_value());
        CHECK_FALSE(rep.braid_witness.has_value());
        CHECK_FALSE(rep.nondegenerate_witness.has_value());
        CHECK(braid_holds(r));
    }
}

TEST_CASE("involutivity matches the brace shape") {
    CHECK(ybe_involutive(build_r(trivial_brace(make_group(th::cyclic_table(4))))));
    CHECK(ybe_involutive(build_r(trivial_brace(make_group(th::klein_table())))));
    CHECK(ybe_involutive(build_r(jacobson_brace(th::ring2z8_add(), th::ring2z8_mul()))));
    // Conjugation on a non-abelian group squares to conjugation by a product.
    CHECK_FALSE(ybe_involutive(build_r(trivial_brace(make_group(th::s3_table())))));
    CHECK_FALSE(ybe_involutive(build_r(op_brace(make_group(th::s3_table())))));
}

TEST_CASE("corrupted maps are rejected with checkable witnesses") {
    SkewBrace b = trivial_brace(make_group(th::s3_table()));

    SECTION("constant row kills bijectivity") {
        YbeMap r = build_r(b);
        for (int y = 0; y < r.n; ++y) {
            r.first[2][y] = r.first[0][y];
            r.second[2][y] = r.second[0][y];
        }
        YbeReport rep = ybe_report(r);
        CHECK_FALSE(rep.bijective);
        REQUIRE(rep.bijective_witness.has_value());
        auto [x1, y1, x2, y2] = *rep.bijective_witness;
        CHECK((x1 != x2 || y1 != y2));
        CHECK(r.first[x1][y1] == r.first[x2][y2]);
        CHECK(r.second[x1][y1] == r.second[x2][y2]);
    }

    SECTION("a transposition in one entry breaks the braid relation") {
        YbeMap r = build_r(b);
        std::swap(r.second[1][2], r.second[1][3]);
        YbeReport rep = ybe_report(r);
        CHECK_FALSE(rep.braid);
        REQUIRE(rep.braid_witness.has_value());
        auto t = *rep.braid_witness;
        auto apply12 = [&](std::array<int, 3> v) {
            return std::array<int, 3>{r.first[v[0]][v[1]], r.second[v[0]][v[1]], v[2]};
        };
        auto apply23 = [&](std::array<int, 3> v) {
            return std::array<int, 3>{v[0], r.first[v[1]][v[2]], r.second[v[1]][v[2]]};
        };
        CHECK(apply12(apply23(apply12(t))) != apply23(apply12(apply23(t))));
    }

    SECTION("flattening a first-component row breaks non-degeneracy") {
        YbeMap r = build_r(b);
        for (int y = 0; y < r.n; ++y) r.first[4][y] = 0;
        YbeReport rep = ybe_report(r);
        CHECK_FALSE(rep.nondegenerate);
        REQUIRE(rep.nondegenerate_witness.has_value());
        auto [side, idx] = *rep.nondegenerate_witness;
        CHECK(side == 0);
        CHECK(idx == 4);
        std::vector<bool> hit(r.n, false);
        bool perm = true;
        for (int y = 0; y < r.n; ++y) {
            if (hit[r.first[idx][y]]) perm = false;
            hit[r.first[idx][y]] = true;
        }
        CHECK_FALSE(perm);
    }

    SECTION("flattening a second-component column breaks non-degeneracy") {
        YbeMap r = build_r(b);
        for (int x = 0; x < r.n; ++x) r.second[x][3] = 1;
        YbeReport rep = ybe_report(r);
        CHECK_FALSE(rep.nondegenerate);
        REQUIRE(rep.nondegenerate_witness.has_value());
        auto [side, idx] = *rep.nondegenerate_witness;
        CHECK(side == 1);
        CHECK(idx == 3);
    }
}

TEST_CASE("brace morphisms carry one solution to the other") {
    SkewBrace b = trivial_brace(make_group(th::s3_table()));
    QuotientBrace q = quotient_brace(b, th::sub(6, {0, 3, 4}));
    CHECK(is_brace_morphism(b, q.brace, q.projection));
    CHECK(ybe_equivariant(build_r(b), build_r(q.brace), q.projection));

    std::vector<int> not_hom(6, 0);
    not_hom[1] = 1;
    CHECK_FALSE(is_brace_morphism(b, q.brace, not_hom));

    // The identity is a morphism from a brace to itself.
    std::vector<int> id(6);
    for (int i = 0; i < 6; ++i) id[i] = i;
    CHECK(is_brace_morphism(b, b, id));
    CHECK(ybe_equivariant(build_r(b), build_r(b), id));
}
