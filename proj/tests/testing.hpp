#pragma once
// Shared helpers for the unit tests.

#include <complex>

#include "doctest.h"

// Absolute-difference check that prints both values on failure. Works for
// double and std::complex<double> alike.
#define CHECK_NEAR(got, want, tol)                                       \
    do {                                                                 \
        const auto got_ = (got);                                         \
        const auto want_ = (want);                                       \
        CHECK_MESSAGE(std::abs(got_ - want_) <= (tol), #got, " = ", got_, \
                      ", expected ", want_, " within ", (tol));           \
    } while (0)
