#pragma once

// Ideals of a skew brace, the matching congruences, quotients, and the
// analogous notions one level down on digroups (normal subobjects that are
// compatible with both operations at once).
//
// An ideal is a subset that is normal for star, normal for circle, and
// stable under every lambda map. For finite carriers lambda stability as
// containment already forces equality, and star cosets then coincide with
// circle cosets, which is what makes the quotient well defined. Both of
// those implications are re-verified at runtime instead of being assumed.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "skb/brace.hpp"

namespace skb {

struct IdealCheck {
    bool star_subgroup = false;
    bool star_normal = false;
    bool circ_subgroup = false;
    bool circ_normal = false;
    bool lambda_stable = false;
    bool ok() const {
        return star_subgroup && star_normal && circ_subgroup && circ_normal &&
               lambda_stable;
    }
};

inline IdealCheck ideal_check(const SkewBrace& b, const Subset& s) {
    IdealCheck r;
    r.star_subgroup = is_subgroup(b.star(), s);
    r.star_normal = r.star_subgroup && is_normal_subgroup(b.star(), s);
    r.circ_subgroup = is_subgroup(b.circ(), s);
    r.circ_normal = r.circ_subgroup && is_normal_subgroup(b.circ(), s);
    r.lambda_stable = true;
    for (int a = 0; a < b.order() && r.lambda_stable; ++a)
        for (int m : s.members)
            if (!s.contains(b.lambda(a, m))) {
                r.lambda_stable = false;
                break;
            }
    return r;
}

inline bool is_ideal(const SkewBrace& b, const Subset& s) { return ideal_check(b, s).ok(); }

inline bool is_sub_brace(const SkewBrace& b, const Subset& s) {
    return is_subgroup(b.star(), s) && is_subgroup(b.circ(), s);
}

// Smallest ideal containing the seed. Closure under star subgroup
// generation, conjugation by both operations, and all lambda maps.
inline Subset generated_ideal(const SkewBrace& b, const std::vector<int>& seed) {
    const int n = b.order();
    std::vector<char> in(static_cast<size_t>(n), 0);
    in[0] = 1;
    for (int s : seed) {
        if (s < 0 || s >= n) throw ValidationError("generator out of range");
        in[static_cast<size_t>(s)] = 1;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur;
        for (int x = 0; x < n; ++x)
            if (in[static_cast<size_t>(x)]) cur.push_back(x);
        Subset sub = subgroup_closure(b.star(), cur);
        for (int m : sub.members)
            if (!in[static_cast<size_t>(m)]) {
                in[static_cast<size_t>(m)] = 1;
                grew = true;
            }
        for (int x = 0; x < n; ++x) {
            if (!in[static_cast<size_t>(x)]) continue;
            for (int g = 0; g < n; ++g) {
                const int imgs[3] = {b.star().conj(g, x), b.circ().conj(g, x),
                                     b.lambda(g, x)};
                for (int y : imgs)
                    if (!in[static_cast<size_t>(y)]) {
                        in[static_cast<size_t>(y)] = 1;
                        grew = true;
                    }
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (in[static_cast<size_t>(x)]) out.push_back(x);
    Subset result = Subset::of(n, out);
    if (!is_ideal(b, result)) throw InternalError("generated_ideal closure is not an ideal");
    return result;
}

// Every ideal is in particular a star subgroup, so filtering the star
// subgroup lattice is exhaustive.
inline std::vector<Subset> all_ideals(const SkewBrace& b) {
    std::vector<Subset> out;
    for (const Subset& s : all_subgroups(b.star()))
        if (is_ideal(b, s)) out.push_back(s);
    return out;
}

// Partition of the carrier into blocks, numbered by first occurrence so two
// equal partitions always compare equal elementwise.
struct Congruence {
    std::vector<int> block_of;
    int num_blocks = 0;

    static Congruence from_raw(const std::vector<int>& raw) {
        Congruence c;
        c.block_of.assign(raw.size(), -1);
        std::vector<int> relabel;
        for (size_t x = 0; x < raw.size(); ++x) {
            const int r = raw[x];
            if (r < 0) throw ValidationError("negative block label");
            int id = -1;
            for (size_t k = 0; k < relabel.size(); ++k)
                if (relabel[k] == r) {
                    id = static_cast<int>(k);
                    break;
                }
            if (id < 0) {
                id = static_cast<int>(relabel.size());
                relabel.push_back(r);
            }
            c.block_of[x] = id;
        }
        c.num_blocks = static_cast<int>(relabel.size());
        return c;
    }

    bool same(int x, int y) const { return block_of[x] == block_of[y]; }
    std::vector<int> block_members(int id) const {
        std::vector<int> m;
        for (size_t x = 0; x < block_of.size(); ++x)
            if (block_of[x] == id) m.push_back(static_cast<int>(x));
        return m;
    }
    bool operator==(const Congruence& o) const { return block_of == o.block_of; }
};

// Compatibility with one operation: x ~ x' implies x*y ~ x'*y and y*x ~ y*x'.
inline bool respects_op(const FiniteGroup& g, const Congruence& c) {
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int x2 = x + 1; x2 < n; ++x2) {
            if (!c.same(x, x2)) continue;
            for (int y = 0; y < n; ++y)
                if (!c.same(g.op(x, y), g.op(x2, y)) || !c.same(g.op(y, x), g.op(y, x2)))
                    return false;
        }
    return true;
}

inline bool is_congruence(const Digroup& d, const Congruence& c) {
    if (c.block_of.size() != static_cast<size_t>(d.order()))
        throw ValidationError("partition size does not match carrier");
    return respects_op(d.star, c) && respects_op(d.circ, c);
}

inline bool is_congruence(const SkewBrace& b, const Congruence& c) {
    return is_congruence(b.digroup(), c);
}

// Star cosets of an ideal. That the circle cosets give the same partition is
// a consequence of the ideal axioms; verified here rather than trusted.
inline Congruence congruence_of_ideal(const SkewBrace& b, const Subset& ideal) {
    if (!is_ideal(b, ideal)) throw NotAnIdeal();
    const int n = b.order();
    std::vector<int> star_raw(static_cast<size_t>(n), -1);
    std::vector<int> circ_raw(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
        for (int m : ideal.members) {
            star_raw[static_cast<size_t>(b.star().op(x, m))] = x;
            circ_raw[static_cast<size_t>(b.circ().op(x, m))] = x;
        }
    }
    // Writing the coset leader backwards like that labels each coset by the
    // last x that reached it; first-occurrence renumbering normalizes both.
    Congruence cs = Congruence::from_raw(star_raw);
    Congruence cc = Congruence::from_raw(circ_raw);
    if (!(cs == cc)) throw InternalError("star and circle cosets of an ideal disagree");
    if (!is_congruence(b, cs)) throw InternalError("ideal cosets are not a congruence");
    return cs;
}

inline Subset ideal_of_congruence(const SkewBrace& b, const Congruence& c) {
    if (!is_congruence(b, c)) throw NotACongruence();
    Subset s = Subset::of(b.order(), c.block_members(c.block_of[0]));
    if (!is_ideal(b, s)) throw InternalError("congruence class of 0 is not an ideal");
    return s;
}

struct QuotientBrace {
    SkewBrace brace;
    Congruence cong;
    // projection[x] is the image of x, i.e. cong.block_of[x].
    std::vector<int> projection;
};

inline QuotientBrace quotient_brace(const SkewBrace& b, const Subset& ideal,
                                    const Caps& caps = Caps::defaults()) {
    Congruence c = congruence_of_ideal(b, ideal);
    const int m = c.num_blocks;
    std::vector<int> rep(static_cast<size_t>(m), -1);
    for (int x = b.order() - 1; x >= 0; --x) rep[static_cast<size_t>(c.block_of[x])] = x;
    Table star(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    Table circ(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            star[i][j] = c.block_of[b.star().op(rep[i], rep[j])];
            circ[i][j] = c.block_of[b.circ().op(rep[i], rep[j])];
        }
    // Block 0 is the class of element 0 because blocks are numbered by first
    // occurrence, so the unit lands at index 0 and make_digroup accepts it.
    return QuotientBrace{make_skew_brace(star, circ, caps), c, c.block_of};
}

// Join of two ideals. For ideals the elementwise star product set is already
// the join and agrees with the elementwise circle product; both facts are
// checked against the generic closure.
inline Subset join_of_ideals(const SkewBrace& b, const Subset& i, const Subset& j) {
    std::vector<int> seed;
    seed.insert(seed.end(), i.members.begin(), i.members.end());
    seed.insert(seed.end(), j.members.begin(), j.members.end());
    Subset join = generated_ideal(b, seed);
    if (is_ideal(b, i) && is_ideal(b, j)) {
        std::vector<int> star_prod, circ_prod;
        for (int x : i.members)
            for (int y : j.members) {
                star_prod.push_back(b.star().op(x, y));
                circ_prod.push_back(b.circ().op(x, y));
            }
        if (!(Subset::of(b.order(), star_prod) == join) ||
            !(Subset::of(b.order(), circ_prod) == join))
            throw InternalError("elementwise product of ideals is not their join");
    }
    return join;
}

// Digroup level notions.

struct DigroupNormalCheck {
    bool star_subgroup = false;
    bool star_normal = false;
    bool circ_subgroup = false;
    bool circ_normal = false;
    // Coset compatibility: x^-*y lands in the subset exactly when x^-o o y
    // does. Without it star cosets and circle cosets part ways and there is
    // no quotient digroup.
    bool cosets_agree = false;
    bool ok() const {
        return star_subgroup && star_normal && circ_subgroup && circ_normal &&
               cosets_agree;
    }
};

inline DigroupNormalCheck digroup_normal_check(const Digroup& d, const Subset& s) {
    DigroupNormalCheck r;
    r.star_subgroup = is_subgroup(d.star, s);
    r.star_normal = r.star_subgroup && is_normal_subgroup(d.star, s);
    r.circ_subgroup = is_subgroup(d.circ, s);
    r.circ_normal = r.circ_subgroup && is_normal_subgroup(d.circ, s);
    r.cosets_agree = true;
    const int n = d.order();
    for (int x = 0; x < n && r.cosets_agree; ++x)
        for (int y = 0; y < n; ++y) {
            const bool via_star = s.contains(d.star.op(d.star.inv(x), y));
            const bool via_circ = s.contains(d.circ.op(d.circ.inv(x), y));
            if (via_star != via_circ) {
                r.cosets_agree = false;
                break;
            }
        }
    return r;
}

inline bool is_normal_subdigroup(const Digroup& d, const Subset& s) {
    return digroup_normal_check(d, s).ok();
}

inline std::vector<Subset> all_normal_subdigroups(const Digroup& d) {
    std::vector<Subset> out;
    for (const Subset& s : all_subgroups(d.star))
        if (is_normal_subdigroup(d, s)) out.push_back(s);
    return out;
}

inline Congruence congruence_of_normal_subdigroup(const Digroup& d, const Subset& s) {
    if (!is_normal_subdigroup(d, s)) throw ValidationError("not a normal subdigroup");
    const int n = d.order();
    std::vector<int> star_raw(static_cast<size_t>(n), -1);
    std::vector<int> circ_raw(static_cast<size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        for (int m : s.members) {
            star_raw[static_cast<size_t>(d.star.op(x, m))] = x;
            circ_raw[static_cast<size_t>(d.circ.op(x, m))] = x;
        }
    Congruence cs = Congruence::from_raw(star_raw);
    Congruence cc = Congruence::from_raw(circ_raw);
    if (!(cs == cc))
        throw InternalError("coset compatibility passed but coset partitions differ");
    if (!is_congruence(d, cs))
        throw InternalError("normal subdigroup cosets are not a congruence");
    return cs;
}

struct QuotientDigroup {
    Digroup digroup;
    Congruence cong;
    std::vector<int> projection;
};

inline QuotientDigroup quotient_digroup(const Digroup& d, const Subset& s,
                                        const Caps& caps = Caps::defaults()) {
    Congruence c = congruence_of_normal_subdigroup(d, s);
    const int m = c.num_blocks;
    std::vector<int> rep(static_cast<size_t>(m), -1);
    for (int x = d.order() - 1; x >= 0; --x) rep[static_cast<size_t>(c.block_of[x])] = x;
    Table star(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    Table circ(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            star[i][j] = c.block_of[d.star.op(rep[i], rep[j])];
            circ[i][j] = c.block_of[d.circ.op(rep[i], rep[j])];
        }
    return QuotientDigroup{make_digroup(star, circ, caps), c, c.block_of};
}

} // namespace skb
