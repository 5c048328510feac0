#pragma once

// Finite groups as dense Cayley tables over the carrier 0..n-1, with the unit
// pinned at index 0. Construction validates every axiom exhaustively and the
// result is immutable; all queries below are pure functions of their inputs.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "skb/caps.hpp"
#include "skb/errors.hpp"

namespace skb {

using Table = std::vector<std::vector<int>>;

// Sorted, deduplicated element list over a fixed carrier.
struct Subset {
    int carrier = 0;
    std::vector<int> members;

    static Subset of(int carrier, std::vector<int> elems) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (!elems.empty() && (elems.front() < 0 || elems.back() >= carrier))
            throw ValidationError("subset element out of range");
        return Subset{carrier, std::move(elems)};
    }

    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Subset& o) const {
        return carrier == o.carrier && members == o.members;
    }
    bool operator<(const Subset& o) const {
        if (members.size() != o.members.size()) return members.size() < o.members.size();
        return members < o.members;
    }
};

class FiniteGroup {
public:
    // Validates: two-sided unit somewhere (relocated to 0 by relabeling when
    // elsewhere), Latin rows and columns, associativity, two-sided inverses.
    static FiniteGroup from_table(const Table& rows, const Caps& caps = Caps::defaults()) {
        const int n = static_cast<int>(rows.size());
        if (n == 0) throw ValidationError("empty table");
        if (n > caps.group_order) throw OrderCapExceeded(n, caps.group_order);
        std::vector<int> t(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw ValidationError("table is not square");
            for (int j = 0; j < n; ++j) {
                int v = rows[i][j];
                if (v < 0 || v >= n) throw ValidationError("table entry out of range");
                t[static_cast<size_t>(i) * n + j] = v;
            }
        }

        int unit = -1;
        for (int e = 0; e < n && unit < 0; ++e) {
            bool ok = true;
            for (int j = 0; j < n && ok; ++j)
                if (t[static_cast<size_t>(e) * n + j] != j ||
                    t[static_cast<size_t>(j) * n + e] != j)
                    ok = false;
            if (ok) unit = e;
        }
        if (unit < 0) throw NotAGroup("no-unit");
        if (unit != 0) {
            // relabel by the transposition (0 unit)
            auto sig = [&](int x) { return x == 0 ? unit : (x == unit ? 0 : x); };
            std::vector<int> r(static_cast<size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    r[static_cast<size_t>(i) * n + j] =
                        sig(t[static_cast<size_t>(sig(i)) * n + sig(j)]);
            t.swap(r);
        }

        std::vector<char> seen(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < n; ++j) seen[t[static_cast<size_t>(i) * n + j]] = 1;
            for (int v = 0; v < n; ++v)
                if (!seen[v]) throw NotAGroup("not-latin", i);
        }
        for (int j = 0; j < n; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 0; i < n; ++i) seen[t[static_cast<size_t>(i) * n + j]] = 1;
            for (int v = 0; v < n; ++v)
                if (!seen[v]) throw NotAGroup("not-latin", j);
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int ab = t[static_cast<size_t>(a) * n + b];
                    int bc = t[static_cast<size_t>(b) * n + c];
                    if (t[static_cast<size_t>(ab) * n + c] !=
                        t[static_cast<size_t>(a) * n + bc])
                        throw NotAGroup("not-associative", a, b, c);
                }
        std::vector<int> inv(static_cast<size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (t[static_cast<size_t>(a) * n + b] == 0 &&
                    t[static_cast<size_t>(b) * n + a] == 0) {
                    inv[a] = b;
                    break;
                }
            if (inv[a] < 0) throw NotAGroup("no-inverse", a);
        }
        return FiniteGroup(n, std::move(t), std::move(inv));
    }

    int order() const { return n_; }
    int op(int a, int b) const { return t_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return op(op(g, x), inv_[g]); }

    bool commutative() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (op(a, b) != op(b, a)) return false;
        return true;
    }

    Table rows() const {
        Table r(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i][j] = op(i, j);
        return r;
    }

    const std::vector<int>& flat() const { return t_; }

    Subset full_subset() const {
        std::vector<int> all(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) all[i] = i;
        return Subset{n_, std::move(all)};
    }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && t_ == o.t_; }

private:
    FiniteGroup(int n, std::vector<int> t, std::vector<int> inv)
        : n_(n), t_(std::move(t)), inv_(std::move(inv)) {}
    int n_;
    std::vector<int> t_;
    std::vector<int> inv_;
};

inline FiniteGroup make_group(const Table& rows, const Caps& caps = Caps::defaults()) {
    return FiniteGroup::from_table(rows, caps);
}

inline bool is_subgroup(const FiniteGroup& g, const Subset& s) {
    if (s.carrier != g.order()) throw ValidationError("subset carrier mismatch");
    if (!s.contains(0)) return false;
    for (int a : s.members) {
        if (!s.contains(g.inv(a))) return false;
        for (int b : s.members)
            if (!s.contains(g.op(a, b))) return false;
    }
    return true;
}

// Conjugation-based normality test, cross-checked against coset agreement
// (S*a == a*S for every a); the two must agree or the library is broken.
inline bool is_normal_subgroup(const FiniteGroup& g, const Subset& s) {
    if (!is_subgroup(g, s)) throw NotASubgroup("normality test needs a subgroup");
    bool by_conj = true;
    for (int x = 0; x < g.order() && by_conj; ++x)
        for (int m : s.members)
            if (!s.contains(g.conj(x, m))) {
                by_conj = false;
                break;
            }
    bool by_cosets = true;
    for (int a = 0; a < g.order() && by_cosets; ++a) {
        std::set<int> left, right;
        for (int m : s.members) {
            left.insert(g.op(a, m));
            right.insert(g.op(m, a));
        }
        if (left != right) by_cosets = false;
    }
    if (by_conj != by_cosets)
        throw InternalError("conjugation and coset normality tests disagree");
    return by_conj;
}

// Smallest subgroup containing gens: closure under products (inverses follow
// in a finite group, but are closed over anyway).
inline Subset subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<size_t>(g.order()), 0);
    std::vector<int> work;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            work.push_back(x);
        }
    };
    add(0);
    for (int x : gens) {
        if (x < 0 || x >= g.order()) throw ValidationError("generator out of range");
        add(x);
    }
    for (size_t k = 0; k < work.size(); ++k) {
        int x = work[k];
        add(g.inv(x));
        for (size_t m = 0; m < work.size(); ++m) {
            add(g.op(x, work[m]));
            add(g.op(work[m], x));
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (in[v]) out.push_back(v);
    return Subset{g.order(), std::move(out)};
}

// Derived subgroup of two subsets: closure of {s*t*(t*s)^-1}.
inline Subset group_commutator_subgroup(const FiniteGroup& g, const Subset& a,
                                        const Subset& b) {
    std::vector<int> gens;
    for (int s : a.members)
        for (int t : b.members) gens.push_back(g.op(g.op(s, t), g.inv(g.op(t, s))));
    return subgroup_closure(g, gens);
}

inline Subset group_commutator_subgroup(const FiniteGroup& g) {
    Subset full = g.full_subset();
    return group_commutator_subgroup(g, full, full);
}

inline Subset group_centralizer(const FiniteGroup& g, const Subset& s) {
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int m : s.members)
            if (g.op(x, m) != g.op(m, x)) {
                central = false;
                break;
            }
        if (central) out.push_back(x);
    }
    return Subset{g.order(), std::move(out)};
}

inline bool is_automorphism(const FiniteGroup& g, const std::vector<int>& f) {
    const int n = g.order();
    if (static_cast<int>(f.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : f) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[g.op(a, b)] != g.op(f[a], f[b])) return false;
    return true;
}

// Full subgroup lattice by iterated one-generator extension of known members.
inline std::vector<Subset> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert(subgroup_closure(g, {}).members);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (const auto& s : snapshot) {
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(s.begin(), s.end(), x)) continue;
                std::vector<int> gens = s;
                gens.push_back(x);
                auto bigger = subgroup_closure(g, gens).members;
                if (found.insert(std::move(bigger)).second) grew = true;
            }
        }
    }
    std::vector<Subset> out;
    out.reserve(found.size());
    for (auto& m : found) out.push_back(Subset{g.order(), m});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace skb
