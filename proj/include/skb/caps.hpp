#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

namespace skb {

// Order caps guard the exhaustive O(n^2)..O(n!) checks against accidental
// blow-ups. SKB_ORDER_CAP raises the brace/ideal/enumeration caps at runtime;
// the group cap stays put since table validation is only cubic.
struct Caps {
    int group_order = 64;     // Cayley-table validation
    int brace_order = 16;     // eager skew-brace invariant suite
    int ideal_order = 24;     // ideal lattice enumeration
    int enumerate_order = 6;  // brace enumeration per carrier order

    static Caps defaults() {
        Caps c;
        if (const char* env = std::getenv("SKB_ORDER_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) {
                int cap = static_cast<int>(std::min(v, 64L));
                c.brace_order = std::max(c.brace_order, cap);
                c.ideal_order = std::max(c.ideal_order, cap);
                c.enumerate_order = std::max(c.enumerate_order, cap);
            }
        }
        return c;
    }
};

} // namespace skb
