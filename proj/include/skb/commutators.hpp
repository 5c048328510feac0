#pragma once

// Huq and Smith style commutation for skew braces and digroups.
//
// Huq commutation of two sub-braces is elementwise: u o v = u * v = v * u =
// v o u for every pair. An equivalent phrasing replaces the first equality
// with lambda_u(v) = v; both are computed and compared so a bug in either
// cannot pass silently.
//
// Smith centrality is about congruences. A connector for congruences R, S
// on a carrier X is a map p on the pullback {(x,y,z) : x R y, y S z} with
// p(x,y,y) = x and p(y,y,z) = z that is a homomorphism for the structure.
// A Mal'tsev style argument forces p(x,y,z) = x * y^- * z from the star
// homomorphism property and p(x,y,z) = x o y^-o o z from the circle one, so
// existence reduces to those two formulas agreeing and each being a
// homomorphism on the pullback. An independent search oracle ignores the
// closed forms, seeds only the boundary values and propagates; tests hold
// the two routes against each other.

#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "skb/ideals.hpp"

namespace skb {

struct HuqWitness {
    int u = -1;
    int v = -1;
    std::string relation;
};

inline bool huq_commute(const SkewBrace& b, const Subset& us, const Subset& vs,
                        HuqWitness* wit = nullptr) {
    if (!is_sub_brace(b, us) || !is_sub_brace(b, vs)) throw NotASubBrace();
    bool ok_a = true;
    HuqWitness w;
    for (int u : us.members) {
        for (int v : vs.members) {
            const int uv_s = b.star().op(u, v);
            const int uv_c = b.circ().op(u, v);
            const int vu_s = b.star().op(v, u);
            const int vu_c = b.circ().op(v, u);
            std::string rel;
            if (uv_c != uv_s)
                rel = "u o v != u * v";
            else if (uv_s != vu_s)
                rel = "u * v != v * u";
            else if (vu_s != vu_c)
                rel = "v * u != v o u";
            const bool pair_a = rel.empty();
            const bool pair_b =
                b.lambda(u, v) == v && uv_s == vu_s && uv_c == vu_c;
            if (pair_a != pair_b)
                throw InternalError("huq formulations disagree on a pair");
            if (!pair_a && ok_a) {
                ok_a = false;
                w = HuqWitness{u, v, rel};
            }
        }
    }
    if (!ok_a && wit) *wit = w;
    return ok_a;
}

// Elementwise criterion for sub-digroups. Cross-checked by building the
// would-be cooperator phi(u, v) = u * v on the product and verifying it is
// a homomorphism for both operations and restricts to the inclusions.
inline bool digroup_huq_commute(const Digroup& d, const Subset& us, const Subset& vs,
                                HuqWitness* wit = nullptr) {
    if (!is_subgroup(d.star, us) || !is_subgroup(d.circ, us) ||
        !is_subgroup(d.star, vs) || !is_subgroup(d.circ, vs))
        throw NotASubgroup();
    bool ok = true;
    HuqWitness w;
    for (int u : us.members)
        for (int v : vs.members) {
            std::string rel;
            if (d.star.op(u, v) != d.star.op(v, u))
                rel = "u * v != v * u";
            else if (d.circ.op(u, v) != d.circ.op(v, u))
                rel = "u o v != v o u";
            else if (d.star.op(u, v) != d.circ.op(u, v))
                rel = "u * v != u o v";
            if (!rel.empty()) {
                ok = false;
                w = HuqWitness{u, v, rel};
                break;
            }
        }
    bool coop = true;
    for (int u : us.members) {
        if (!coop) break;
        for (int v : vs.members) {
            if (d.star.op(u, 0) != u || d.star.op(0, v) != v) coop = false;
            for (int u2 : us.members) {
                for (int v2 : vs.members) {
                    if (d.star.op(d.star.op(u, u2), d.star.op(v, v2)) !=
                        d.star.op(d.star.op(u, v), d.star.op(u2, v2))) {
                        coop = false;
                        break;
                    }
                    if (d.circ.op(d.circ.op(u, u2), d.circ.op(v, v2)) !=
                        d.circ.op(d.circ.op(u, v), d.circ.op(u2, v2))) {
                        coop = false;
                        break;
                    }
                    if (d.star.op(u, v) != d.circ.op(u, v)) {
                        coop = false;
                        break;
                    }
                }
                if (!coop) break;
            }
            if (!coop) break;
        }
    }
    if (coop != ok)
        throw InternalError("digroup huq criterion and cooperator check disagree");
    if (!ok && wit) *wit = w;
    return ok;
}

// The three generator families whose union generates the Huq commutator
// ideal: circle commutators, star commutators, and the defects measuring
// how far circle is from star on the pair.
struct CommutatorGenerators {
    std::vector<int> circ_comm;
    std::vector<int> star_comm;
    std::vector<int> mixed;
};

inline CommutatorGenerators commutator_generators(const SkewBrace& b, const Subset& i,
                                                  const Subset& j) {
    CommutatorGenerators g;
    for (int x : i.members)
        for (int y : j.members) {
            g.circ_comm.push_back(
                b.circ().op(b.circ().op(x, y), b.circ().inv(b.circ().op(y, x))));
            g.star_comm.push_back(
                b.star().op(b.star().op(x, y), b.star().inv(b.star().op(y, x))));
            g.mixed.push_back(
                b.star().op(b.circ().op(x, y), b.star().inv(b.star().op(x, y))));
        }
    for (std::vector<int>* s : {&g.circ_comm, &g.star_comm, &g.mixed}) {
        std::sort(s->begin(), s->end());
        s->erase(std::unique(s->begin(), s->end()), s->end());
    }
    return g;
}

inline Subset huq_commutator(const SkewBrace& b, const Subset& i, const Subset& j,
                             const Caps& caps = Caps::defaults()) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    CommutatorGenerators g = commutator_generators(b, i, j);
    std::vector<int> seed;
    seed.insert(seed.end(), g.circ_comm.begin(), g.circ_comm.end());
    seed.insert(seed.end(), g.star_comm.begin(), g.star_comm.end());
    seed.insert(seed.end(), g.mixed.begin(), g.mixed.end());
    Subset k = generated_ideal(b, seed);

    // In the quotient by k the images must commute, and the pairing
    // (x, y) |-> pi(x * y) must be a homomorphism from the direct product
    // of the images for both operations.
    QuotientBrace q = quotient_brace(b, k, caps);
    auto pi = [&](int x) { return q.projection[x]; };
    std::vector<int> ii, jj;
    for (int x : i.members) ii.push_back(pi(x));
    for (int y : j.members) jj.push_back(pi(y));
    Subset iq = Subset::of(q.brace.order(), ii);
    Subset jq = Subset::of(q.brace.order(), jj);
    if (!huq_commute(q.brace, iq, jq))
        throw InternalError("huq commutator quotient does not kill commutation");
    for (int x : i.members)
        for (int x2 : i.members)
            for (int y : j.members)
                for (int y2 : j.members) {
                    if (pi(b.star().op(b.star().op(x, x2), b.star().op(y, y2))) !=
                        pi(b.star().op(b.star().op(x, y), b.star().op(x2, y2))))
                        throw InternalError("quotient pairing is not a star homomorphism");
                    if (pi(b.circ().op(b.circ().op(x, x2), b.circ().op(y, y2))) !=
                        pi(b.circ().op(b.circ().op(x, y), b.circ().op(x2, y2))))
                        throw InternalError("quotient pairing is not a circle homomorphism");
                }
    return k;
}

// Reference route: scan every ideal, keep those whose quotient makes the
// images commute, and return the least one. The family is closed under
// intersection, so the least element is unique; both facts are enforced.
inline Subset oracle_huq_commutator(const SkewBrace& b, const Subset& i, const Subset& j,
                                    const Caps& caps = Caps::defaults()) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    std::vector<Subset> valid;
    for (const Subset& k : all_ideals(b)) {
        QuotientBrace q = quotient_brace(b, k, caps);
        std::vector<int> ii, jj;
        for (int x : i.members) ii.push_back(q.projection[x]);
        for (int y : j.members) jj.push_back(q.projection[y]);
        if (huq_commute(q.brace, Subset::of(q.brace.order(), ii),
                        Subset::of(q.brace.order(), jj)))
            valid.push_back(k);
    }
    if (valid.empty()) throw InternalError("full ideal fails to kill commutation");
    std::vector<char> common(static_cast<size_t>(b.order()), 1);
    for (const Subset& k : valid)
        for (int x = 0; x < b.order(); ++x)
            if (!k.contains(x)) common[static_cast<size_t>(x)] = 0;
    std::vector<int> inter;
    for (int x = 0; x < b.order(); ++x)
        if (common[static_cast<size_t>(x)]) inter.push_back(x);
    Subset least = Subset::of(b.order(), inter);
    bool found = false;
    for (const Subset& k : valid) found = found || k == least;
    if (!found)
        throw InternalError("valid quotient family is not closed under intersection");
    return least;
}

struct CommutatorReport {
    CommutatorGenerators generators;
    Subset commutator;
    std::optional<Subset> oracle_commutator;
    QuotientBrace quotient; // the projection realizes mu(x, y) = pi(x * y)
};

inline CommutatorReport huq_commutator_report(const SkewBrace& b, const Subset& i,
                                              const Subset& j, bool with_oracle = false,
                                              const Caps& caps = Caps::defaults()) {
    Subset k = huq_commutator(b, i, j, caps);
    CommutatorReport rep{commutator_generators(b, i, j), k,
                         with_oracle
                             ? std::optional<Subset>(oracle_huq_commutator(b, i, j, caps))
                             : std::nullopt,
                         quotient_brace(b, k, caps)};
    for (const std::vector<int>* s :
         {&rep.generators.circ_comm, &rep.generators.star_comm, &rep.generators.mixed})
        for (int x : *s)
            if (!rep.commutator.contains(x))
                throw InternalError("commutator misses one of its generator values");
    if (rep.oracle_commutator && !(*rep.oracle_commutator == rep.commutator))
        throw InternalError("least-ideal scan disagrees with the generated commutator");
    return rep;
}

// a . b = b^- * lambda_a(b), the defect of lambda_a at b. For ideals every
// value lands in the intersection, and a . b = 0 for all pairs exactly when
// every lambda_a with a in the first ideal fixes the second pointwise.
inline std::vector<int> star_defect_set(const SkewBrace& b, const Subset& i,
                                        const Subset& j) {
    std::vector<int> out;
    for (int x : i.members)
        for (int y : j.members)
            out.push_back(b.star().op(b.star().inv(y), b.lambda(x, y)));
    return out;
}

inline Subset star_defect_ideal(const SkewBrace& b, const Subset& i, const Subset& j) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    std::vector<int> defects = star_defect_set(b, i, j);
    Subset k = generated_ideal(b, defects);
    CommutatorGenerators g = commutator_generators(b, i, j);
    // (x o y) * (x * y)^- and y^- * lambda_x(y) are conjugate, so the two
    // generator families must generate the same ideal.
    if (!(generated_ideal(b, g.mixed) == k))
        throw InternalError("defect ideal disagrees with mixed commutator ideal");
    bool all_zero = true;
    bool all_fixed = true;
    for (int d : defects) all_zero = all_zero && d == 0;
    for (int x : i.members)
        for (int y : j.members) all_fixed = all_fixed && b.lambda(x, y) == y;
    if (all_zero != all_fixed)
        throw InternalError("defect vanishing disagrees with lambda fixing");
    for (int d : defects)
        if (!i.contains(d) || !j.contains(d))
            throw InternalError("defect escapes the intersection of the ideals");
    return k;
}

// Connector checks live on the digroup so the same code serves braces and
// the twisted digroups that fail the brace axiom.

struct ConnectorResult {
    bool exists = false;
    // On failure: a pullback triple where the two forced formulas differ, or
    // where a homomorphism condition breaks (then the second triple too).
    std::array<int, 3> t1{-1, -1, -1};
    std::array<int, 3> t2{-1, -1, -1};
    std::string reason;
};

inline ConnectorResult smith_connector_exists(const Digroup& d, const Congruence& r,
                                              const Congruence& s) {
    if (!is_congruence(d, r) || !is_congruence(d, s)) throw NotACongruence();
    const int n = d.order();
    std::vector<std::array<int, 3>> pb;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!r.same(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (s.same(y, z)) pb.push_back({x, y, z});
        }
    auto p = [&](const std::array<int, 3>& t) {
        return d.star.op(d.star.op(t[0], d.star.inv(t[1])), t[2]);
    };
    auto q = [&](const std::array<int, 3>& t) {
        return d.circ.op(d.circ.op(t[0], d.circ.inv(t[1])), t[2]);
    };
    for (const auto& t : pb)
        if (p(t) != q(t)) return ConnectorResult{false, t, {-1, -1, -1}, "p != q"};
    for (const auto& t : pb) {
        const int pt = p(t);
        for (const auto& u : pb) {
            const std::array<int, 3> ts{d.star.op(t[0], u[0]), d.star.op(t[1], u[1]),
                                        d.star.op(t[2], u[2])};
            if (p(ts) != d.star.op(pt, p(u)))
                return ConnectorResult{false, t, u, "p not a star homomorphism"};
            const std::array<int, 3> tc{d.circ.op(t[0], u[0]), d.circ.op(t[1], u[1]),
                                        d.circ.op(t[2], u[2])};
            if (q(tc) != d.circ.op(q(t), q(u)))
                return ConnectorResult{false, t, u, "q not a circle homomorphism"};
        }
    }
    return ConnectorResult{true, {-1, -1, -1}, {-1, -1, -1}, ""};
}

// Search oracle. Knows nothing about the forced formulas: seeds the
// boundary values p(x,y,y) = x and p(y,y,z) = z, then closes under the two
// homomorphism constraints, combining assigned triples with boundary
// triples (which generate the pullback). A clash during propagation or a
// failed final verification means no connector.
inline bool connector_search(const Digroup& d, const Congruence& r, const Congruence& s) {
    if (!is_congruence(d, r) || !is_congruence(d, s)) throw NotACongruence();
    const int n = d.order();
    std::vector<std::array<int, 3>> pb;
    std::vector<int> index(static_cast<size_t>(n) * n * n, -1);
    auto idx = [&](int x, int y, int z) -> int& {
        return index[(static_cast<size_t>(x) * n + y) * n + z];
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!r.same(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (s.same(y, z)) {
                    idx(x, y, z) = static_cast<int>(pb.size());
                    pb.push_back({x, y, z});
                }
        }
    std::vector<int> val(pb.size(), -1);
    std::vector<size_t> boundary;
    std::vector<size_t> work;
    auto assign = [&](size_t k, int v) -> bool {
        if (val[k] == v) return true;
        if (val[k] != -1) return false;
        val[k] = v;
        work.push_back(k);
        return true;
    };
    for (size_t k = 0; k < pb.size(); ++k) {
        const auto& t = pb[k];
        if (t[1] == t[2] || (t[0] == t[1])) boundary.push_back(k);
        if (t[1] == t[2] && !assign(k, t[0])) return false;
        if (t[0] == t[1] && !assign(k, t[2])) return false;
    }
    while (!work.empty()) {
        const size_t k = work.back();
        work.pop_back();
        const auto& t = pb[k];
        for (size_t bk : boundary) {
            if (val[bk] == -1) continue;
            const auto& u = pb[bk];
            for (int side = 0; side < 2; ++side) {
                const auto& a = side == 0 ? t : u;
                const auto& c = side == 0 ? u : t;
                const int ks = idx(d.star.op(a[0], c[0]), d.star.op(a[1], c[1]),
                                   d.star.op(a[2], c[2]));
                if (ks >= 0 &&
                    !assign(static_cast<size_t>(ks),
                            d.star.op(val[side == 0 ? k : bk], val[side == 0 ? bk : k])))
                    return false;
                const int kc = idx(d.circ.op(a[0], c[0]), d.circ.op(a[1], c[1]),
                                   d.circ.op(a[2], c[2]));
                if (kc >= 0 &&
                    !assign(static_cast<size_t>(kc),
                            d.circ.op(val[side == 0 ? k : bk], val[side == 0 ? bk : k])))
                    return false;
            }
        }
    }
    for (int v : val)
        if (v == -1) throw InternalError("boundary triples failed to generate the pullback");
    for (size_t k = 0; k < pb.size(); ++k) {
        const auto& t = pb[k];
        if (t[1] == t[2] && val[k] != t[0]) return false;
        if (t[0] == t[1] && val[k] != t[2]) return false;
    }
    for (size_t k = 0; k < pb.size(); ++k) {
        const auto& t = pb[k];
        for (size_t m = 0; m < pb.size(); ++m) {
            const auto& u = pb[m];
            const int ks =
                idx(d.star.op(t[0], u[0]), d.star.op(t[1], u[1]), d.star.op(t[2], u[2]));
            if (ks < 0 || val[static_cast<size_t>(ks)] != d.star.op(val[k], val[m]))
                return false;
            const int kc =
                idx(d.circ.op(t[0], u[0]), d.circ.op(t[1], u[1]), d.circ.op(t[2], u[2]));
            if (kc < 0 || val[static_cast<size_t>(kc)] != d.circ.op(val[k], val[m]))
                return false;
        }
    }
    return true;
}

inline Congruence congruence_of_subset(const SkewBrace& b, const Subset& ideal) {
    return congruence_of_ideal(b, ideal);
}

// Small disjoint set union used by the forcing construction below.
class Dsu {
public:
    explicit Dsu(int n) : parent_(static_cast<size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] =
                parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }
    // Returns true if the classes were distinct.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[static_cast<size_t>(b)] = a;
        return true;
    }
    Congruence to_partition() {
        std::vector<int> raw(parent_.size());
        for (size_t x = 0; x < parent_.size(); ++x) raw[x] = find(static_cast<int>(x));
        return Congruence::from_raw(raw);
    }

private:
    std::vector<int> parent_;
};

// Smith commutator of two ideals: the least ideal whose quotient admits a
// connector for the image congruences. Built by forcing: identify exactly
// the pairs every valid quotient must identify (the two connector formulas,
// and both homomorphism conditions) and close under congruence, repeating
// until stable. The fixed point is itself valid, hence least.
inline Subset smith_commutator(const SkewBrace& b, const Subset& i, const Subset& j,
                               const Caps& caps = Caps::defaults()) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    const int n = b.order();
    Congruence r = congruence_of_ideal(b, i);
    Congruence s = congruence_of_ideal(b, j);
    std::vector<std::array<int, 3>> pb;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!r.same(x, y)) continue;
            for (int z = 0; z < n; ++z)
                if (s.same(y, z)) pb.push_back({x, y, z});
        }
    auto p = [&](const std::array<int, 3>& t) {
        return b.star().op(b.star().op(t[0], b.star().inv(t[1])), t[2]);
    };
    auto q = [&](const std::array<int, 3>& t) {
        return b.circ().op(b.circ().op(t[0], b.circ().inv(t[1])), t[2]);
    };
    Dsu dsu(n);
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& t : pb)
            if (dsu.unite(p(t), q(t))) grew = true;
        for (const auto& t : pb)
            for (const auto& u : pb) {
                const std::array<int, 3> ts{b.star().op(t[0], u[0]),
                                            b.star().op(t[1], u[1]),
                                            b.star().op(t[2], u[2])};
                if (dsu.unite(p(ts), b.star().op(p(t), p(u)))) grew = true;
                const std::array<int, 3> tc{b.circ().op(t[0], u[0]),
                                            b.circ().op(t[1], u[1]),
                                            b.circ().op(t[2], u[2])};
                if (dsu.unite(q(tc), b.circ().op(q(t), q(u)))) grew = true;
            }
        // Congruence closure for both operations.
        bool closing = true;
        while (closing) {
            closing = false;
            for (int x = 0; x < n; ++x)
                for (int x2 = x + 1; x2 < n; ++x2) {
                    if (dsu.find(x) != dsu.find(x2)) continue;
                    for (int y = 0; y < n; ++y) {
                        if (dsu.unite(b.star().op(x, y), b.star().op(x2, y))) closing = true;
                        if (dsu.unite(b.star().op(y, x), b.star().op(y, x2))) closing = true;
                        if (dsu.unite(b.circ().op(x, y), b.circ().op(x2, y))) closing = true;
                        if (dsu.unite(b.circ().op(y, x), b.circ().op(y, x2))) closing = true;
                    }
                }
            grew = grew || closing;
        }
    }
    Congruence t = dsu.to_partition();
    if (!is_congruence(b, t)) throw InternalError("forced partition is not a congruence");
    Subset k = ideal_of_congruence(b, t);
    QuotientBrace quo = quotient_brace(b, k, caps);
    std::vector<int> ii, jj;
    for (int x : i.members) ii.push_back(quo.projection[x]);
    for (int y : j.members) jj.push_back(quo.projection[y]);
    Congruence rq = congruence_of_ideal(quo.brace, Subset::of(quo.brace.order(), ii));
    Congruence sq = congruence_of_ideal(quo.brace, Subset::of(quo.brace.order(), jj));
    if (!smith_connector_exists(quo.brace.digroup(), rq, sq).exists)
        throw InternalError("forced smith quotient admits no connector");
    return k;
}

// Reference route for the Smith commutator, mirroring the Huq oracle.
inline Subset oracle_smith_commutator(const SkewBrace& b, const Subset& i, const Subset& j,
                                      const Caps& caps = Caps::defaults()) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    std::vector<Subset> valid;
    for (const Subset& k : all_ideals(b)) {
        QuotientBrace q = quotient_brace(b, k, caps);
        std::vector<int> ii, jj;
        for (int x : i.members) ii.push_back(q.projection[x]);
        for (int y : j.members) jj.push_back(q.projection[y]);
        Congruence rq = congruence_of_ideal(q.brace, Subset::of(q.brace.order(), ii));
        Congruence sq = congruence_of_ideal(q.brace, Subset::of(q.brace.order(), jj));
        if (connector_search(q.brace.digroup(), rq, sq)) valid.push_back(k);
    }
    if (valid.empty()) throw InternalError("full ideal admits no connector");
    std::vector<char> common(static_cast<size_t>(b.order()), 1);
    for (const Subset& k : valid)
        for (int x = 0; x < b.order(); ++x)
            if (!k.contains(x)) common[static_cast<size_t>(x)] = 0;
    std::vector<int> inter;
    for (int x = 0; x < b.order(); ++x)
        if (common[static_cast<size_t>(x)]) inter.push_back(x);
    Subset least = Subset::of(b.order(), inter);
    bool found = false;
    for (const Subset& k : valid) found = found || k == least;
    if (!found)
        throw InternalError("smith valid family is not closed under intersection");
    return least;
}

struct HuqSmithVerdict {
    bool huq = false;
    bool smith = false;
};

// For skew braces the two notions agree; a disagreement is a bug, not a
// mathematical discovery, hence the hard failure.
inline HuqSmithVerdict verify_huq_equals_smith(const SkewBrace& b, const Subset& i,
                                               const Subset& j) {
    if (!is_ideal(b, i) || !is_ideal(b, j)) throw NotAnIdeal();
    HuqSmithVerdict v;
    v.huq = huq_commute(b, i, j);
    Congruence r = congruence_of_ideal(b, i);
    Congruence s = congruence_of_ideal(b, j);
    v.smith = smith_connector_exists(b.digroup(), r, s).exists;
    if (connector_search(b.digroup(), r, s) != v.smith)
        throw InternalError("connector search disagrees with closed form");
    if (v.huq != v.smith)
        throw InternalError("huq and smith disagree on a skew brace");
    return v;
}

// Largest ideal that Huq commutes with the given ideal. The family of such
// ideals is closed under joins, so the incremental join is the maximum; the
// membership test is run through two routes (elementwise constraint set and
// huq_commute) that must agree.
inline Subset centralizer(const SkewBrace& b, const Subset& i) {
    if (!is_ideal(b, i)) throw NotAnIdeal();
    const int n = b.order();
    std::vector<char> cset(static_cast<size_t>(n), 1);
    for (int a = 0; a < n; ++a)
        for (int m : i.members)
            if (b.star().op(a, m) != b.star().op(m, a) ||
                b.circ().op(a, m) != b.circ().op(m, a) || b.lambda(a, m) != m) {
                cset[static_cast<size_t>(a)] = 0;
                break;
            }
    Subset acc = Subset::of(n, {0});
    for (const Subset& j : all_ideals(b)) {
        bool inside = true;
        for (int m : j.members) inside = inside && cset[static_cast<size_t>(m)];
        const bool commutes = huq_commute(b, j, i);
        if (inside != commutes)
            throw InternalError("constraint set route disagrees with huq route");
        if (commutes) acc = join_of_ideals(b, acc, j);
    }
    for (int m : acc.members)
        if (!cset[static_cast<size_t>(m)])
            throw InternalError("centralizer join escaped the constraint set");
    if (!huq_commute(b, acc, i)) throw InternalError("centralizer join does not commute");
    return acc;
}

inline Subset center(const SkewBrace& b) { return centralizer(b, b.full_subset()); }

// Sweep of a digroup: which pairs of normal subdigroups Huq commute, which
// admit a connector for their coset congruences, and where the two notions
// part ways. For skew braces the mismatch list must stay empty; twisted
// digroups are exactly the place where entries appear.
struct HuqSmithPair {
    Subset u;
    Subset v;
    bool huq = false;
    bool smith = false;
};

struct HuqSmithReport {
    std::vector<Subset> normal_subdigroups;
    std::vector<HuqSmithPair> pairs;
    std::vector<size_t> mismatches; // indices into pairs with huq != smith
};

inline HuqSmithReport digroup_huq_smith_report(const Digroup& d,
                                               bool cross_check_search = true) {
    HuqSmithReport rep;
    rep.normal_subdigroups = all_normal_subdigroups(d);
    for (const Subset& u : rep.normal_subdigroups)
        for (const Subset& v : rep.normal_subdigroups) {
            HuqSmithPair pr{u, v, false, false};
            pr.huq = digroup_huq_commute(d, u, v);
            Congruence r = congruence_of_normal_subdigroup(d, u);
            Congruence s = congruence_of_normal_subdigroup(d, v);
            pr.smith = smith_connector_exists(d, r, s).exists;
            if (cross_check_search && connector_search(d, r, s) != pr.smith)
                throw InternalError("connector search disagrees with closed form");
            if (pr.huq != pr.smith) rep.mismatches.push_back(rep.pairs.size());
            rep.pairs.push_back(pr);
        }
    return rep;
}

// Sweep every ideal pair of a brace. For a brace the normal subdigroups are
// exactly the ideals, and any Huq/Smith mismatch is a bug, so the per-pair
// call hard-errors instead of filling the mismatch list.
inline HuqSmithReport verify_huq_equals_smith(const SkewBrace& b) {
    HuqSmithReport rep;
    rep.normal_subdigroups = all_ideals(b);
    for (const Subset& i : rep.normal_subdigroups)
        for (const Subset& j : rep.normal_subdigroups) {
            HuqSmithVerdict v = verify_huq_equals_smith(b, i, j);
            rep.pairs.push_back({i, j, v.huq, v.smith});
        }
    return rep;
}

} // namespace skb
