#pragma once

#include <doctest.h>

#include "hirzlog/error.hpp"

// Error code thrown by fn; fails the test when nothing is thrown.
template <typename Fn>
hirzlog::ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const hirzlog::Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return hirzlog::ErrorCode::Internal;
}
