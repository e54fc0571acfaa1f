// Small shared helpers for the unit tests.
#pragma once

#include <doctest.h>

#include "triality/error.hpp"

namespace test_util {

// Runs fn and checks that it throws triality::Error carrying `code`.
template <typename Fn>
void expect_error(Fn&& fn, triality::ErrorCode code) {
    bool threw = false;
    try {
        fn();
    } catch (const triality::Error& e) {
        threw = true;
        CHECK(e.code() == code);
    }
    CHECK_MESSAGE(threw, "expected triality::Error ",
                  triality::error_code_name(code));
}

}  // namespace test_util
