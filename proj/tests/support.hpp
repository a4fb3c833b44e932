#pragma once

#include "agq/precision.hpp"

#include <doctest.h>

#include <random>

namespace agq::test {

inline Real dist(const Complex& a, const Complex& b) { return abs_of(Complex(a - b)); }

inline Real rational(std::mt19937& gen)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return Real(num(gen)) / den(gen);
}

inline Complex rational_complex(std::mt19937& gen)
{
    const Real re = rational(gen);
    return {re, rational(gen)};
}

} // namespace agq::test

// CHECK on extended-precision values with a readable message.
#define CHECK_SMALL(value, limit)                                                                 \
    do {                                                                                          \
        const ::agq::Real check_small_v_ = (value);                                               \
        const ::agq::Real check_small_l_ = (limit);                                               \
        INFO(#value " = " << check_small_v_.str(6, std::ios::scientific) << ", limit "            \
                           << check_small_l_.str(3, std::ios::scientific));                       \
        CHECK(check_small_v_ <= check_small_l_);                                                  \
    } while (0)
