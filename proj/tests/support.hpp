#pragma once

#include <gtest/gtest.h>

#include "toric/errors.hpp"

#define EXPECT_TORIC_ERROR(stmt, expected)                                   \
  do {                                                                       \
    bool thrown_ = false;                                                    \
    try {                                                                    \
      stmt;                                                                  \
    } catch (const ::toric::Error& e_) {                                     \
      thrown_ = true;                                                        \
      EXPECT_EQ(e_.code(), (expected)) << e_.what();                         \
    }                                                                        \
    EXPECT_TRUE(thrown_) << "expected " << ::toric::to_string(expected);     \
  } while (0)

namespace toric_test {

// Small fields used across the suites, (p, u).
inline const std::pair<int, int> kSmallFields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                                                   {2, 3}, {3, 2}, {11, 1}, {2, 4}};

}  // namespace toric_test
