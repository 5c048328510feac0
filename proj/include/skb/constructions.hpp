#pragma once

// Concrete families: the theta twisted digroups over Z/b that separate Huq
// from Smith, and exhaustive enumeration of skew braces of a given order.
//
// The twist takes the square of Z/b with componentwise addition, flattens
// pairs (x, z) to x*b + z, and conjugates the addition by the involution
// theta that swaps (a, a) with (-a, a) and fixes everything else. Both
// operations are groups sharing unit 0; the compatibility axiom is what
// breaks. The second projection is a homomorphism for both operations, and
// its kernel Huq-commutes with itself while the connector for the kernel
// congruence may or may not exist; counterexample_report computes which.
//
// Enumeration runs two independent strategies and a canonicalizer:
//   - every ordered pair of unit-0 group tables, filtered by the axiom;
//   - for each star table, search the maps a |-> lambda_a into Aut(star)
//     satisfying the cocycle closure, reading circ off as x * lambda_x(y).
// Identical results from both are required before anything is returned.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "skb/commutators.hpp"

namespace skb {

struct ThetaTwistSpec {
    int base = 0;
    int a = 0;
};

struct ThetaTwist {
    Digroup d;
    int base = 0;
    int a = 0;
    std::vector<int> projection; // second coordinate, a homomorphism onto Z/base
    Subset kernel;               // fiber of 0 under the projection
    std::optional<std::array<int, 3>> axiom_witness;
};

inline ThetaTwist theta_twist(const ThetaTwistSpec& spec,
                              const Caps& caps = Caps::defaults()) {
    const int base = spec.base;
    const int a = spec.a;
    if (base < 2) throw BadSpec("base must be at least 2");
    if (a < 1 || a >= base) throw BadSpec("twist element must lie in [1, base)");
    const int n = base * base;
    if (n > caps.group_order) throw OrderCapExceeded(n, caps.group_order);
    auto flat = [base](int x, int z) { return x * base + z; };

    std::vector<int> th(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) th[static_cast<size_t>(p)] = p;
    std::swap(th[static_cast<size_t>(flat(a, a))],
              th[static_cast<size_t>(flat(base - a, a))]);
    for (int p = 0; p < n; ++p)
        if (th[static_cast<size_t>(th[static_cast<size_t>(p)])] != p)
            throw InternalError("theta is not an involution");

    Table add(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    Table circ(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            add[p][q] = flat((p / base + q / base) % base, (p % base + q % base) % base);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            circ[p][q] = th[static_cast<size_t>(
                add[th[static_cast<size_t>(p)]][th[static_cast<size_t>(q)]])];

    ThetaTwist t{make_digroup(add, circ, caps), base, a, {}, Subset::of(n, {0}), {}};
    t.projection.resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) t.projection[static_cast<size_t>(p)] = p % base;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            const int sum = (t.projection[static_cast<size_t>(p)] +
                             t.projection[static_cast<size_t>(q)]) % base;
            if (t.projection[static_cast<size_t>(t.d.star.op(p, q))] != sum ||
                t.projection[static_cast<size_t>(t.d.circ.op(p, q))] != sum)
                throw InternalError("projection is not a digroup homomorphism");
        }
    std::vector<int> ker;
    for (int x = 0; x < base; ++x) ker.push_back(flat(x, 0));
    t.kernel = Subset::of(n, ker);
    t.axiom_witness = check_brace_axiom(t.d);
    return t;
}

struct CounterexampleReport {
    ThetaTwist twist;
    bool kernel_normal = false;
    bool huq = false;
    ConnectorResult connector;
    bool separation = false; // Huq commutes yet no connector exists
};

inline CounterexampleReport counterexample_report(const ThetaTwistSpec& spec,
                                                  const Caps& caps = Caps::defaults()) {
    CounterexampleReport rep{theta_twist(spec, caps), false, false, {}, false};
    const Digroup& d = rep.twist.d;
    rep.kernel_normal = is_normal_subdigroup(d, rep.twist.kernel);
    if (!rep.kernel_normal)
        throw InternalError("kernel of the projection is not a normal subdigroup");
    rep.huq = digroup_huq_commute(d, rep.twist.kernel, rep.twist.kernel);
    Congruence r = congruence_of_normal_subdigroup(d, rep.twist.kernel);
    rep.connector = smith_connector_exists(d, r, r);
    if (connector_search(d, r, r) != rep.connector.exists)
        throw InternalError("connector search disagrees with closed form");
    rep.separation = rep.huq && !rep.connector.exists;
    return rep;
}

// Enumeration.

namespace detail {

inline std::vector<std::vector<std::vector<int>>> perms_by_first(int n) {
    std::vector<std::vector<std::vector<int>>> by(static_cast<size_t>(n));
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do {
        by[static_cast<size_t>(p[0])].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return by;
}

// Rows of a group table are permutations: row 0 is the identity, row x
// sends 0 to x, columns never repeat a value, and composing rows must land
// on the row their product indexes (which is associativity).
struct TableDfs {
    int n;
    const std::vector<std::vector<std::vector<int>>>& perms;
    std::vector<Table>& out;

    void run() {
        Table rows(static_cast<size_t>(n), std::vector<int>());
        std::vector<uint32_t> colused(static_cast<size_t>(n), 0);
        rows[0].resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            rows[0][static_cast<size_t>(i)] = i;
            colused[static_cast<size_t>(i)] |= 1u << i;
        }
        dfs(rows, colused, 1);
    }

    bool place(Table& rows, std::vector<uint32_t>& colused, int x,
               const std::vector<int>& perm) const {
        for (int y = 0; y < n; ++y)
            if (colused[static_cast<size_t>(y)] & (1u << perm[static_cast<size_t>(y)]))
                return false;
        rows[static_cast<size_t>(x)] = perm;
        for (int y = 0; y < n; ++y)
            colused[static_cast<size_t>(y)] |= 1u << perm[static_cast<size_t>(y)];
        return true;
    }

    bool propagate(Table& rows, std::vector<uint32_t>& colused) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = 0; u < n; ++u) {
                if (rows[static_cast<size_t>(u)].empty()) continue;
                for (int v = 0; v < n; ++v) {
                    if (rows[static_cast<size_t>(v)].empty()) continue;
                    const int t = rows[static_cast<size_t>(u)][static_cast<size_t>(
                        rows[static_cast<size_t>(v)][0])];
                    std::vector<int> comp(static_cast<size_t>(n));
                    for (int y = 0; y < n; ++y)
                        comp[static_cast<size_t>(y)] = rows[static_cast<size_t>(u)][
                            static_cast<size_t>(rows[static_cast<size_t>(v)][static_cast<size_t>(y)])];
                    if (rows[static_cast<size_t>(t)].empty()) {
                        if (!place(rows, colused, t, comp)) return false;
                        changed = true;
                    } else if (rows[static_cast<size_t>(t)] != comp) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void dfs(const Table& rows, const std::vector<uint32_t>& colused, int from) const {
        int x = -1;
        for (int i = from; i < n; ++i)
            if (rows[static_cast<size_t>(i)].empty()) {
                x = i;
                break;
            }
        if (x < 0) {
            out.push_back(rows);
            return;
        }
        for (const auto& perm : perms[static_cast<size_t>(x)]) {
            Table r2 = rows;
            std::vector<uint32_t> c2 = colused;
            if (!place(r2, c2, x, perm)) continue;
            if (!propagate(r2, c2)) continue;
            dfs(r2, c2, x + 1);
        }
    }
};

} // namespace detail

inline std::vector<Table> all_group_tables(int n) {
    if (n < 1) throw ValidationError("order must be positive");
    if (n > 8) throw OrderCapExceeded(n, 8);
    auto perms = detail::perms_by_first(n);
    std::vector<Table> out;
    detail::TableDfs{n, perms, out}.run();
    std::sort(out.begin(), out.end());
    for (const Table& t : out) make_group(t); // throws on any defect
    return out;
}

// Permutations fixing 0 that preserve the table.
inline std::vector<std::vector<int>> table_automorphisms(const Table& t) {
    const int n = static_cast<int>(t.size());
    std::vector<std::vector<int>> auts;
    std::vector<int> sig(static_cast<size_t>(n));
    std::vector<int> tail(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (int i = 1; i < n; ++i) tail[static_cast<size_t>(i - 1)] = i;
    sig[0] = 0;
    do {
        for (int i = 1; i < n; ++i) sig[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j)
                if (sig[static_cast<size_t>(t[i][j])] !=
                    t[static_cast<size_t>(sig[static_cast<size_t>(i)])]
                     [static_cast<size_t>(sig[static_cast<size_t>(j)])]) {
                    ok = false;
                    break;
                }
        if (ok) auts.push_back(sig);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return auts;
}

inline Table relabel_table(const Table& t, const std::vector<int>& sig) {
    const int n = static_cast<int>(t.size());
    Table out(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<size_t>(sig[static_cast<size_t>(i)])]
               [static_cast<size_t>(sig[static_cast<size_t>(j)])] =
                   sig[static_cast<size_t>(t[i][j])];
    return out;
}

// Lex-least relabeling of the concatenated (star, circ) tables over all
// permutations fixing 0. Comparison is entrywise with early exit.
inline std::pair<Table, Table> canonical_pair(const Table& star, const Table& circ) {
    const int n = static_cast<int>(star.size());
    Table best_s = star, best_c = circ;
    std::vector<int> sig(static_cast<size_t>(n)), inv(static_cast<size_t>(n));
    std::vector<int> tail;
    for (int i = 1; i < n; ++i) tail.push_back(i);
    sig[0] = 0;
    inv[0] = 0;
    while (std::next_permutation(tail.begin(), tail.end())) {
        for (int i = 1; i < n; ++i) {
            sig[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
            inv[static_cast<size_t>(tail[static_cast<size_t>(i - 1)])] = i;
        }
        int cmp = 0;
        for (int which = 0; which < 2 && cmp == 0; ++which) {
            const Table& src = which == 0 ? star : circ;
            const Table& ref = which == 0 ? best_s : best_c;
            for (int i = 0; i < n && cmp == 0; ++i)
                for (int j = 0; j < n; ++j) {
                    const int v = sig[static_cast<size_t>(
                        src[static_cast<size_t>(inv[static_cast<size_t>(i)])]
                           [static_cast<size_t>(inv[static_cast<size_t>(j)])])];
                    const int w = ref[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    if (v != w) {
                        cmp = v < w ? -1 : 1;
                        break;
                    }
                }
        }
        if (cmp < 0) {
            best_s = relabel_table(star, sig);
            best_c = relabel_table(circ, sig);
        }
    }
    return {best_s, best_c};
}

inline Table canonical_table(const Table& t) {
    return canonical_pair(t, t).first;
}

// Lambda search: complete assignments x |-> lambda_x in Aut(star) with
// lambda_0 = id and lambda_{x * lambda_x(y)} = lambda_x lambda_y, each one
// yielding the circle table x o y = x * lambda_x(y).
inline std::vector<Table> lambda_compatible_circs(const FiniteGroup& g) {
    const int n = g.order();
    const Table t = g.rows();
    std::vector<std::vector<int>> auts = table_automorphisms(t);
    std::sort(auts.begin(), auts.end());
    std::map<std::vector<int>, int> aut_index;
    for (size_t i = 0; i < auts.size(); ++i) aut_index[auts[i]] = static_cast<int>(i);
    std::vector<int> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    const int id_idx = aut_index.at(id);

    std::vector<Table> out;
    std::vector<int> lam(static_cast<size_t>(n), -1);
    lam[0] = id_idx;

    auto propagate = [&](std::vector<int>& l) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (l[static_cast<size_t>(x)] < 0) continue;
                const auto& px = auts[static_cast<size_t>(l[static_cast<size_t>(x)])];
                for (int y = 0; y < n; ++y) {
                    if (l[static_cast<size_t>(y)] < 0) continue;
                    const auto& py = auts[static_cast<size_t>(l[static_cast<size_t>(y)])];
                    const int tgt = g.op(x, px[static_cast<size_t>(y)]);
                    std::vector<int> comp(static_cast<size_t>(n));
                    for (int u = 0; u < n; ++u)
                        comp[static_cast<size_t>(u)] = px[static_cast<size_t>(py[static_cast<size_t>(u)])];
                    auto it = aut_index.find(comp);
                    if (it == aut_index.end())
                        throw InternalError("automorphisms not closed under composition");
                    if (l[static_cast<size_t>(tgt)] < 0) {
                        l[static_cast<size_t>(tgt)] = it->second;
                        changed = true;
                    } else if (l[static_cast<size_t>(tgt)] != it->second) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto emit = [&](const std::vector<int>& l) {
        Table circ(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (int x = 0; x < n; ++x) {
            const auto& px = auts[static_cast<size_t>(l[static_cast<size_t>(x)])];
            for (int y = 0; y < n; ++y)
                circ[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                    g.op(x, px[static_cast<size_t>(y)]);
        }
        make_skew_brace(t, circ, Caps{64, 64, 64, 8}); // cross-check only
        out.push_back(std::move(circ));
    };

    auto dfs = [&](auto&& self, const std::vector<int>& l) -> void {
        int x = -1;
        for (int i = 1; i < n; ++i)
            if (l[static_cast<size_t>(i)] < 0) {
                x = i;
                break;
            }
        if (x < 0) {
            emit(l);
            return;
        }
        for (size_t ai = 0; ai < auts.size(); ++ai) {
            std::vector<int> l2 = l;
            l2[static_cast<size_t>(x)] = static_cast<int>(ai);
            if (propagate(l2)) self(self, l2);
        }
    };
    if (propagate(lam)) dfs(dfs, lam);
    std::sort(out.begin(), out.end());
    return out;
}

struct EnumeratedBrace {
    Table star;
    Table circ;
    bool operator==(const EnumeratedBrace& o) const {
        return star == o.star && circ == o.circ;
    }
    bool operator<(const EnumeratedBrace& o) const {
        if (star != o.star) return star < o.star;
        return circ < o.circ;
    }
};

enum class EnumStrategy { Auto, TablePairs, LambdaSearch };

namespace detail {

inline std::vector<EnumeratedBrace> raw_by_table_pairs(int n) {
    std::vector<Table> tables = all_group_tables(n);
    std::vector<FiniteGroup> groups;
    groups.reserve(tables.size());
    const Caps loose{64, 64, 64, 8};
    for (const Table& t : tables) groups.push_back(make_group(t, loose));
    std::vector<EnumeratedBrace> raw;
    for (size_t i = 0; i < tables.size(); ++i)
        for (size_t j = 0; j < tables.size(); ++j) {
            Digroup d{groups[i], groups[j]};
            if (!check_brace_axiom(d)) raw.push_back({tables[i], tables[j]});
        }
    std::sort(raw.begin(), raw.end());
    return raw;
}

inline std::vector<EnumeratedBrace> raw_by_lambda(int n) {
    std::vector<EnumeratedBrace> raw;
    const Caps loose{64, 64, 64, 8};
    for (const Table& t : all_group_tables(n)) {
        FiniteGroup g = make_group(t, loose);
        for (Table& c : lambda_compatible_circs(g)) raw.push_back({t, std::move(c)});
    }
    std::sort(raw.begin(), raw.end());
    return raw;
}

inline std::vector<EnumeratedBrace> dedup_canonical(const std::vector<EnumeratedBrace>& raw) {
    std::set<EnumeratedBrace> classes;
    for (const EnumeratedBrace& e : raw) {
        auto [cs, cc] = canonical_pair(e.star, e.circ);
        classes.insert({std::move(cs), std::move(cc)});
    }
    return std::vector<EnumeratedBrace>(classes.begin(), classes.end());
}

// Class list without touching the raw set: only canonical star tables are
// considered, and circle tables are reduced modulo Aut(star). Used for
// orders where the raw list is too large to canonicalize one by one.
inline std::vector<EnumeratedBrace> classes_by_orbit(int n) {
    std::vector<Table> tables = all_group_tables(n);
    std::set<Table> reps;
    for (const Table& t : tables) reps.insert(canonical_table(t));
    const Caps loose{64, 64, 64, 8};
    std::vector<EnumeratedBrace> out;
    for (const Table& rep : reps) {
        FiniteGroup g = make_group(rep, loose);
        std::vector<std::vector<int>> auts = table_automorphisms(rep);
        std::set<Table> circ_orbits;
        for (const Table& c : lambda_compatible_circs(g)) {
            Table best = c;
            for (const auto& sig : auts) {
                Table r = relabel_table(c, sig);
                if (r < best) best = std::move(r);
            }
            circ_orbits.insert(std::move(best));
        }
        for (const Table& c : circ_orbits) out.push_back({rep, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline std::vector<EnumeratedBrace> enumerate_braces(int n, bool up_to_iso,
                                                     const Caps& caps = Caps::defaults(),
                                                     EnumStrategy strategy = EnumStrategy::Auto) {
    if (n < 1) throw ValidationError("order must be positive");
    const int cap = std::min(caps.enumerate_order, 8);
    if (n > cap) throw OrderCapExceeded(n, cap);

    std::vector<EnumeratedBrace> raw;
    switch (strategy) {
        case EnumStrategy::TablePairs:
            raw = detail::raw_by_table_pairs(n);
            break;
        case EnumStrategy::LambdaSearch:
            raw = detail::raw_by_lambda(n);
            break;
        case EnumStrategy::Auto:
            if (n <= 6) {
                raw = detail::raw_by_table_pairs(n);
                if (raw != detail::raw_by_lambda(n))
                    throw InternalError("enumeration strategies disagree");
            } else if (up_to_iso) {
                return detail::classes_by_orbit(n);
            } else {
                raw = detail::raw_by_table_pairs(n);
            }
            break;
    }
    if (!up_to_iso) return raw;
    return detail::dedup_canonical(raw);
}

} // namespace skb
