#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "support.hpp"

namespace qgw_test {
unsigned long long seed = 20240917ULL;
}

// --seed=N (or QGW_TEST_SEED) drives the randomized property tests; the
// remaining arguments go to doctest.
int main(int argc, char** argv) {
    if (const char* env = std::getenv("QGW_TEST_SEED")) qgw_test::seed = std::strtoull(env, nullptr, 10);
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            qgw_test::seed = std::strtoull(argv[i] + 7, nullptr, 10);
            continue;
        }
        rest.push_back(argv[i]);
    }
    doctest::Context ctx;
    ctx.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    std::printf("randomized tests seed %llu\n", qgw_test::seed);
    return ctx.run();
}
