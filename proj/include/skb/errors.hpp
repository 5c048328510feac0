#pragma once

#include <stdexcept>
#include <string>

namespace skb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cayley table rejected. reason is one of: "no-unit", "not-latin",
// "not-associative", "no-inverse". Witness indices are -1 when unused.
struct NotAGroup : Error {
    std::string reason;
    int a = -1, b = -1, c = -1;
    NotAGroup(std::string r, int a_ = -1, int b_ = -1, int c_ = -1)
        : Error("not a group (" + r + ")"), reason(std::move(r)), a(a_), b(b_), c(c_) {}
};

// Compatibility axiom fails at the triple (a, b, c).
struct NotABrace : Error {
    int a, b, c;
    NotABrace(int a_, int b_, int c_)
        : Error("not a skew brace: axiom fails at a=" + std::to_string(a_) + " b=" +
                std::to_string(b_) + " c=" + std::to_string(c_)),
          a(a_), b(b_), c(c_) {}
};

struct NotASubgroup : Error {
    explicit NotASubgroup(const std::string& what = "check failed")
        : Error("not a subgroup: " + what) {}
};

struct NotASubBrace : Error {
    explicit NotASubBrace(const std::string& what = "check failed")
        : Error("not a sub-brace: " + what) {}
};

struct NotAnIdeal : Error {
    explicit NotAnIdeal(const std::string& what = "check failed")
        : Error("not an ideal: " + what) {}
};

struct NotACongruence : Error {
    explicit NotACongruence(const std::string& what = "check failed")
        : Error("not a congruence: " + what) {}
};

struct NotARing : Error {
    std::string reason;
    explicit NotARing(std::string r) : Error("not a ring (" + r + ")"), reason(std::move(r)) {}
};

// Ring is fine but some element has no circle inverse.
struct NotRadical : Error {
    int witness;
    explicit NotRadical(int w)
        : Error("not a radical ring: element " + std::to_string(w) +
                " has no circle inverse"),
          witness(w) {}
};

struct BadSpec : Error {
    explicit BadSpec(const std::string& what) : Error("bad construction spec: " + what) {}
};

struct OrderCapExceeded : Error {
    int order, cap;
    OrderCapExceeded(int order_, int cap_)
        : Error("order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap_) +
                " (raise via SKB_ORDER_CAP)"),
          order(order_), cap(cap_) {}
};

struct ParseError : Error {
    int line;
    std::string reason;
    ParseError(int line_, std::string r)
        : Error("parse error at line " + std::to_string(line_) + ": " + r),
          line(line_), reason(std::move(r)) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation: " + what) {}
};

// A cross-checked internal invariant failed; indicates a bug, never bad input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal invariant: " + what) {}
};

} // namespace skb
