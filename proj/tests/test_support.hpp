#pragma once

#include "doctest.h"
#include "hdawz/errors.hpp"
#include "sampling_support.hpp"

namespace testsupport {

// Asserts fn() throws hdawz::Error with the given code.
template <typename Fn>
void expect_error(hdawz::ErrorCode code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected " << hdawz::error_code_name(code) << ", nothing thrown");
  } catch (const hdawz::Error& e) {
    CHECK_MESSAGE(e.code() == code, e.what());
  }
}

}  // namespace testsupport
