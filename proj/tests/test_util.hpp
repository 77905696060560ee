#ifndef GNCH_TEST_UTIL_HPP
#define GNCH_TEST_UTIL_HPP

#include <doctest.h>

#include <cmath>
#include <functional>

#include "gnch/errors.hpp"
#include "gnch/field.hpp"

namespace gnch_test {

// Runs fn, requires that it throws gnch::Error, and returns the code.
inline gnch::ErrorCode thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const gnch::Error& e) {
        return e.code();
    }
    FAIL("expected a gnch::Error to be thrown");
    return gnch::ErrorCode::CONFIG_INVALID;
}

inline double sup_diff(const gnch::Field& a, const gnch::Field& b) {
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

}  // namespace gnch_test

#endif
