#pragma once

// Shared fixtures: small reference tables (S3 with its elements in lex
// order of the permutations they denote, cyclic and Klein groups, the
// theta twist over Z/3, the radical ring 2Z/8Z) plus file and subprocess
// plumbing. Free of any test framework so the acceptance runner can use
// it too.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "skb/skb.hpp"

namespace th {

using skb::Table;

inline Table cyclic_table(int n) {
    Table t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

// x o y = (p o q)(t) = p(q(t)); rows follow lex order of the permutations:
// 0:[012] 1:[021] 2:[102] 3:[120] 4:[201] 5:[210].
inline const Table& s3_table() {
    static const Table t{{0, 1, 2, 3, 4, 5}, {1, 0, 4, 5, 2, 3}, {2, 3, 0, 1, 5, 4},
                         {3, 2, 5, 4, 0, 1}, {4, 5, 1, 0, 3, 2}, {5, 4, 3, 2, 1, 0}};
    return t;
}

inline const Table& klein_table() {
    static const Table t{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return t;
}

// Theta twist over Z/3 with a = 1, flattened pairs (x, z) |-> 3x + z.
inline const Table& theta_z3_star() {
    static const Table t{{0, 1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 0, 4, 5, 3, 7, 8, 6},
                         {2, 0, 1, 5, 3, 4, 8, 6, 7}, {3, 4, 5, 6, 7, 8, 0, 1, 2},
                         {4, 5, 3, 7, 8, 6, 1, 2, 0}, {5, 3, 4, 8, 6, 7, 2, 0, 1},
                         {6, 7, 8, 0, 1, 2, 3, 4, 5}, {7, 8, 6, 1, 2, 0, 4, 5, 3},
                         {8, 6, 7, 2, 0, 1, 5, 3, 4}};
    return t;
}

inline const Table& theta_z3_circ() {
    static const Table t{{0, 1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 0, 7, 8, 3, 4, 5, 6},
                         {2, 0, 1, 5, 6, 7, 8, 3, 4}, {3, 7, 5, 6, 1, 8, 0, 4, 2},
                         {4, 8, 6, 1, 5, 0, 7, 2, 3}, {5, 3, 7, 8, 0, 4, 2, 6, 1},
                         {6, 4, 8, 0, 7, 2, 3, 1, 5}, {7, 5, 3, 4, 2, 6, 1, 8, 0},
                         {8, 6, 4, 2, 3, 1, 5, 0, 7}};
    return t;
}

// 2Z/8Z: element i stands for 2i mod 8, so (2i)(2j) = 4ij mod 8 has index
// 2ij mod 4.
inline const Table& ring2z8_add() {
    static const Table t = cyclic_table(4);
    return t;
}

inline const Table& ring2z8_mul() {
    static const Table t = [] {
        Table m(4, std::vector<int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = (2 * i * j) % 4;
        return m;
    }();
    return t;
}

inline skb::Subset sub(int n, std::vector<int> xs) { return skb::Subset::of(n, xs); }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string env_or_fail(const char* key) {
    const char* v = std::getenv(key);
    if (!v || !*v) throw std::runtime_error(std::string("missing env var ") + key);
    return v;
}

inline std::string data_path(const std::string& name) {
    return env_or_fail("SKB_DATA_DIR") + "/" + name;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the built CLI with stdout captured; stderr passes through so a
// crashing run stays diagnosable in the test log.
inline CliResult run_cli(const std::string& args) {
    const std::string cli = env_or_fail("SKB_CLI_PATH");
    const std::string cmd = "'" + cli + "' " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace th
