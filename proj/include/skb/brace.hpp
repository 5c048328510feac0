#pragma once

// Digroups (two group structures sharing carrier and unit, no compatibility
// assumed) and skew braces (digroups satisfying the compatibility axiom
//
//     a o (b * c) = (a o b) * a^- * (a o c)
//
// where a^- is the star inverse). A skew brace caches the lambda table
// lambda_a(u) = a^- * (a o u); every row is a star automorphism and
// a |-> lambda_a is a homomorphism from the circle group into Aut(star).
// All of that is verified eagerly on construction.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "skb/group.hpp"

namespace skb {

struct Digroup {
    FiniteGroup star;
    FiniteGroup circ;
    int order() const { return star.order(); }
};

inline Digroup make_digroup(const FiniteGroup& star, const FiniteGroup& circ) {
    if (star.order() != circ.order())
        throw ValidationError("digroup operations have different carriers");
    return Digroup{star, circ};
}

inline Digroup make_digroup(const Table& star_rows, const Table& circ_rows,
                            const Caps& caps = Caps::defaults()) {
    // Tables must already have their shared unit at index 0: make_group
    // relabels a stray unit to 0, and doing that to one table behind the
    // caller's back would break the correspondence with the other.
    FiniteGroup star = make_group(star_rows, caps);
    FiniteGroup circ = make_group(circ_rows, caps);
    if (star.order() != circ.order())
        throw ValidationError("digroup operations have different carriers");
    const int n = star.order();
    for (const Table* t : {&star_rows, &circ_rows})
        for (int j = 0; j < n; ++j)
            if ((*t)[0][j] != j || (*t)[j][0] != j)
                throw ValidationError("digroup tables must share the unit 0");
    return make_digroup(std::move(star), std::move(circ));
}

// Lex-first triple violating the compatibility axiom, or nullopt.
inline std::optional<std::array<int, 3>> check_brace_axiom(const Digroup& d) {
    const int n = d.order();
    for (int a = 0; a < n; ++a) {
        const int ia = d.star.inv(a);
        for (int b = 0; b < n; ++b) {
            const int ab = d.circ.op(a, b);
            const int left = d.star.op(ab, ia);
            for (int c = 0; c < n; ++c)
                if (d.circ.op(a, d.star.op(b, c)) != d.star.op(left, d.circ.op(a, c)))
                    return std::array<int, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

class SkewBrace {
public:
    const FiniteGroup& star() const { return d_.star; }
    const FiniteGroup& circ() const { return d_.circ; }
    const Digroup& digroup() const { return d_; }
    int order() const { return d_.order(); }

    int lambda(int a, int u) const { return lam_[static_cast<size_t>(a) * order() + u]; }
    std::vector<int> lambda_row(int a) const {
        auto b = lam_.begin() + static_cast<size_t>(a) * order();
        return std::vector<int>(b, b + order());
    }

    Subset full_subset() const { return d_.star.full_subset(); }

    bool operator==(const SkewBrace& o) const {
        return d_.star == o.d_.star && d_.circ == o.d_.circ;
    }

    friend SkewBrace make_skew_brace(const Digroup&, const Caps&);

private:
    SkewBrace(Digroup d, std::vector<int> lam) : d_(std::move(d)), lam_(std::move(lam)) {}
    Digroup d_;
    std::vector<int> lam_;
};

inline SkewBrace make_skew_brace(const Digroup& d, const Caps& caps = Caps::defaults()) {
    const int n = d.order();
    if (n > caps.brace_order) throw OrderCapExceeded(n, caps.brace_order);
    if (auto w = check_brace_axiom(d)) throw NotABrace((*w)[0], (*w)[1], (*w)[2]);

    std::vector<int> lam(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        const int ia = d.star.inv(a);
        for (int u = 0; u < n; ++u)
            lam[static_cast<size_t>(a) * n + u] = d.star.op(ia, d.circ.op(a, u));
    }
    // The axiom already forces all of this; verify anyway so a bug cannot
    // hand out a structurally broken object.
    for (int a = 0; a < n; ++a) {
        std::vector<int> row(lam.begin() + static_cast<size_t>(a) * n,
                             lam.begin() + static_cast<size_t>(a + 1) * n);
        if (!is_automorphism(d.star, row))
            throw InternalError("lambda row is not a star automorphism");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int ab = d.circ.op(a, b);
            for (int u = 0; u < n; ++u)
                if (lam[static_cast<size_t>(ab) * n + u] !=
                    lam[static_cast<size_t>(a) * n + lam[static_cast<size_t>(b) * n + u]])
                    throw InternalError("lambda is not a circle homomorphism");
        }
    return SkewBrace(d, std::move(lam));
}

inline SkewBrace make_skew_brace(const Table& star_rows, const Table& circ_rows,
                                 const Caps& caps = Caps::defaults()) {
    return make_skew_brace(make_digroup(star_rows, circ_rows, caps), caps);
}

// lambda_{a^-o}(u) == a^-o o (a * u) for all a, u (a^-o the circle inverse).
inline bool lambda_inverse_identity_check(const SkewBrace& b) {
    const int n = b.order();
    for (int a = 0; a < n; ++a) {
        const int ca = b.circ().inv(a);
        for (int u = 0; u < n; ++u)
            if (b.lambda(ca, u) != b.circ().op(ca, b.star().op(a, u))) return false;
    }
    return true;
}

inline SkewBrace trivial_brace(const FiniteGroup& g, const Caps& caps = Caps::defaults()) {
    return make_skew_brace(Digroup{g, g}, caps);
}

// Circle is the opposite group: x o y = y * x. Lambda becomes conjugation.
inline SkewBrace op_brace(const FiniteGroup& g, const Caps& caps = Caps::defaults()) {
    Table t = g.rows();
    Table opp(t.size(), std::vector<int>(t.size()));
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = 0; j < t.size(); ++j) opp[i][j] = t[j][i];
    return make_skew_brace(Digroup{g, make_group(opp, caps)}, caps);
}

// Brace of a radical ring: x o y = xy + x + y. The addition table must be an
// abelian group with zero at 0, mul must be associative and distributive, and
// every element needs a circle inverse (that is what radical means here).
inline SkewBrace jacobson_brace(const Table& add_rows, const Table& mul_rows,
                                const Caps& caps = Caps::defaults()) {
    const int n = static_cast<int>(add_rows.size());
    FiniteGroup add = [&] {
        try {
            return make_group(add_rows, caps);
        } catch (const NotAGroup& e) {
            throw NotARing("addition is not a group: " + e.reason);
        }
    }();
    for (int j = 0; j < n; ++j)
        if (add_rows[0][j] != j || add_rows[j][0] != j)
            throw NotARing("additive zero is not at index 0");
    if (!add.commutative()) throw NotARing("addition is not commutative");
    if (static_cast<int>(mul_rows.size()) != n) throw NotARing("mul table shape");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul_rows[i].size()) != n) throw NotARing("mul table shape");
        for (int j = 0; j < n; ++j)
            if (mul_rows[i][j] < 0 || mul_rows[i][j] >= n)
                throw NotARing("mul entry out of range");
    }
    auto mul = [&](int a, int b) { return mul_rows[a][b]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw NotARing("multiplication is not associative");
                if (mul(a, add.op(b, c)) != add.op(mul(a, b), mul(a, c)))
                    throw NotARing("left distributivity fails");
                if (mul(add.op(a, b), c) != add.op(mul(a, c), mul(b, c)))
                    throw NotARing("right distributivity fails");
            }

    Table circ(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) circ[x][y] = add.op(add.op(mul(x, y), x), y);
    for (int x = 0; x < n; ++x) {
        bool invertible = false;
        for (int y = 0; y < n && !invertible; ++y)
            invertible = (circ[x][y] == 0 && circ[y][x] == 0);
        if (!invertible) throw NotRadical(x);
    }
    return make_skew_brace(Digroup{add, make_group(circ, caps)}, caps);
}

// Abelian object: both operations coincide and are commutative.
inline bool is_abelian_object(const SkewBrace& b) {
    return b.star() == b.circ() && b.star().commutative();
}

} // namespace skb
