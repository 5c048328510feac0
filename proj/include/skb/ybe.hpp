#pragma once

// Set-theoretic Yang-Baxter machinery. A skew brace yields the map
//
//     r(x, y) = (lambda_x(y), lambda_x(y)^-o o x o y)
//
// on pairs; the checks below verify bijectivity, the braid relation on all
// triples, and non-degeneracy by brute force, so the construction is never
// taken on faith. The checks run on any pair of n x n component tables,
// which makes corrupted-table negative controls possible in tests.

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "skb/brace.hpp"

namespace skb {

struct YbeMap {
    int n = 0;
    Table first;  // first[x][y]  = first component of r(x, y)
    Table second; // second[x][y] = second component of r(x, y)
};

inline YbeMap build_r(const SkewBrace& b) {
    const int n = b.order();
    YbeMap r;
    r.n = n;
    r.first.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    r.second.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int u = b.lambda(x, y);
            r.first[x][y] = u;
            r.second[x][y] = b.circ().op(b.circ().inv(u), b.circ().op(x, y));
        }
    return r;
}

// r as a map on pairs must be a bijection; returns two distinct input pairs
// with equal image when it is not.
inline std::optional<std::array<int, 4>> ybe_bijective_witness(const YbeMap& r) {
    const int n = r.n;
    std::vector<int> seen(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const size_t img =
                static_cast<size_t>(r.first[x][y]) * n + r.second[x][y];
            if (seen[img] >= 0)
                return std::array<int, 4>{seen[img] / n, seen[img] % n, x, y};
            seen[img] = x * n + y;
        }
    return std::nullopt;
}

// Braid relation on triples: applying r to positions 12, 23, 12 must equal
// applying it to 23, 12, 23. Returns the lex-first failing triple.
inline std::optional<std::array<int, 3>> ybe_braid_witness(const YbeMap& r) {
    const int n = r.n;
    auto r12 = [&](std::array<int, 3> t) {
        return std::array<int, 3>{r.first[t[0]][t[1]], r.second[t[0]][t[1]], t[2]};
    };
    auto r23 = [&](std::array<int, 3> t) {
        return std::array<int, 3>{t[0], r.first[t[1]][t[2]], r.second[t[1]][t[2]]};
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const std::array<int, 3> t{x, y, z};
                if (r12(r23(r12(t))) != r23(r12(r23(t))))
                    return std::array<int, 3>{x, y, z};
            }
    return std::nullopt;
}

// Non-degeneracy: every row of the first component and every column of the
// second component must be a permutation. Returns (side, index) where side
// 0 means row x of the first table, side 1 means column y of the second.
inline std::optional<std::array<int, 2>> ybe_nondegenerate_witness(const YbeMap& r) {
    const int n = r.n;
    for (int x = 0; x < n; ++x) {
        std::vector<char> hit(static_cast<size_t>(n), 0);
        for (int y = 0; y < n; ++y) hit[static_cast<size_t>(r.first[x][y])] = 1;
        for (int v = 0; v < n; ++v)
            if (!hit[static_cast<size_t>(v)]) return std::array<int, 2>{0, x};
    }
    for (int y = 0; y < n; ++y) {
        std::vector<char> hit(static_cast<size_t>(n), 0);
        for (int x = 0; x < n; ++x) hit[static_cast<size_t>(r.second[x][y])] = 1;
        for (int v = 0; v < n; ++v)
            if (!hit[static_cast<size_t>(v)]) return std::array<int, 2>{1, y};
    }
    return std::nullopt;
}

inline bool ybe_involutive(const YbeMap& r) {
    for (int x = 0; x < r.n; ++x)
        for (int y = 0; y < r.n; ++y) {
            const int u = r.first[x][y];
            const int v = r.second[x][y];
            if (r.first[u][v] != x || r.second[u][v] != y) return false;
        }
    return true;
}

struct YbeReport {
    bool bijective = false;
    bool braid = false;
    bool nondegenerate = false;
    bool involutive = false;
    std::optional<std::array<int, 4>> bijective_witness;
    std::optional<std::array<int, 3>> braid_witness;
    std::optional<std::array<int, 2>> nondegenerate_witness;
    bool ok() const { return bijective && braid && nondegenerate; }
};

inline YbeReport ybe_report(const YbeMap& r) {
    YbeReport rep;
    rep.bijective_witness = ybe_bijective_witness(r);
    rep.braid_witness = ybe_braid_witness(r);
    rep.nondegenerate_witness = ybe_nondegenerate_witness(r);
    rep.bijective = !rep.bijective_witness.has_value();
    rep.braid = !rep.braid_witness.has_value();
    rep.nondegenerate = !rep.nondegenerate_witness.has_value();
    rep.involutive = ybe_involutive(r);
    return rep;
}

// f is a brace homomorphism when it respects both operations; the induced
// pair map then intertwines the two YBE maps, which ybe_equivariant checks.
inline bool is_brace_morphism(const SkewBrace& a, const SkewBrace& b,
                              const std::vector<int>& f) {
    if (f.size() != static_cast<size_t>(a.order())) return false;
    for (int v : f)
        if (v < 0 || v >= b.order()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y) {
            if (f[static_cast<size_t>(a.star().op(x, y))] !=
                b.star().op(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                return false;
            if (f[static_cast<size_t>(a.circ().op(x, y))] !=
                b.circ().op(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]))
                return false;
        }
    return true;
}

inline bool ybe_equivariant(const YbeMap& ra, const YbeMap& rb, const std::vector<int>& f) {
    for (int x = 0; x < ra.n; ++x)
        for (int y = 0; y < ra.n; ++y) {
            const int fx = f[static_cast<size_t>(x)];
            const int fy = f[static_cast<size_t>(y)];
            if (f[static_cast<size_t>(ra.first[x][y])] != rb.first[fx][fy]) return false;
            if (f[static_cast<size_t>(ra.second[x][y])] != rb.second[fx][fy]) return false;
        }
    return true;
}

} // namespace skb
