//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_TESTS_TEST_COMMON_H_
#define SYNTHROUTE_TESTS_TEST_COMMON_H_

#include <gtest/gtest.h>

#include "synthroute/error.h"

#include "fixture_files.h"

#define EXPECT_SR_ERROR(stmt, expected_code)                                  \
  do {                                                                        \
    try {                                                                     \
      stmt;                                                                   \
      ADD_FAILURE() << "expected " #expected_code;                            \
    } catch (const ::synthroute::Error &e) {                                  \
      EXPECT_EQ(e.code(), expected_code) << e.what();                         \
    }                                                                         \
  } while (false)

#endif  // SYNTHROUTE_TESTS_TEST_COMMON_H_
