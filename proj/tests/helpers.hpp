#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "tables.hpp"

namespace th {

// Byte compare against tests/golden/<name>; SKB_UPDATE_GOLDEN=1 rewrites.
inline void check_golden(const std::string& name, const std::string& actual) {
    const std::string path = env_or_fail("SKB_GOLDEN_DIR") + "/" + name;
    const char* update = std::getenv("SKB_UPDATE_GOLDEN");
    if (update && *update) {
        spit(path, actual);
        SUCCEED("golden " + name + " rewritten");
        return;
    }
    INFO("golden file: " << path);
    REQUIRE(actual == slurp(path));
}

} // namespace th
