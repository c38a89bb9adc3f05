//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Replays a fixed API session against offline providers and compares every
// response with tests/golden/api_session.json. Set SYNTHROUTE_UPDATE_GOLDEN=1
// to rewrite the file after an intended change.

#include <cstdlib>
#include <fstream>

#include <gtest/gtest.h>

#include "api_session.h"

namespace {

using nlohmann::json;
using synthroute::testing::ApiHarness;
using synthroute::testing::golden_session_path;
using synthroute::testing::record_session;
using synthroute::testing::same_json;

TEST(ApiGolden, SessionMatchesRecordedResponses) {
  ApiHarness h;
  const json transcript = record_session(h);

  const auto path = golden_session_path();
  const char *update = std::getenv("SYNTHROUTE_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    std::ofstream(path) << transcript.dump(2) << "\n";
    GTEST_SKIP() << "rewrote " << path;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing " << path;
  const json golden = json::parse(in);
  ASSERT_EQ(golden.size(), transcript.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    std::string diff;
    EXPECT_TRUE(same_json(golden[i], transcript[i], "step" + std::to_string(i), diff)) << diff;
  }
}

}  // namespace
