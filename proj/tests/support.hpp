#pragma once
#include <string>

#include "qgw/error.hpp"

namespace qgw_test {
extern unsigned long long seed;
}

// Runs expr and checks that it throws qgw::Error with the given code.
#define CHECK_QGW_THROWS(expr, expected)                     \
    do {                                                     \
        std::string got_ = "<none>";                         \
        try {                                                \
            (void)(expr);                                    \
        } catch (const qgw::Error& e) {                      \
            got_ = e.code();                                 \
        }                                                    \
        CHECK(got_ == std::string(expected));                \
    } while (0)
