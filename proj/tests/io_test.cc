// Copyright 2026 The nashcell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>

#include "doctest.h"
#include "nashcell/errors.h"
#include "nashcell/io.h"
#include "test_games.h"

namespace nashcell::io {
namespace {

using nashcell::testing::Profile;
using nashcell::testing::R;

ErrorCode CodeOf(std::string_view text, NumericMode mode = NumericMode::kRational) {
  try {
    ParseGameText(text, mode);
  } catch (const NashError& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kValueError;
}

TEST_CASE("fixture files parse into the expected tensors") {
  Game mp = ParseGameFile(std::string(NASHCELL_FIXTURES) +
                          "/matching_pennies.json");
  CHECK(mp.name() == "matching pennies");
  CHECK(mp.shape() == std::vector<int>{2, 2});
  CHECK(mp == nashcell::testing::MatchingPennies());
  CHECK(mp.strategy_names(1)[1] == "T");

  Game solo =
      ParseGameFile(std::string(NASHCELL_FIXTURES) + "/single_player.json");
  CHECK(solo.payoff(0, PureProfile{{1}}) == R("1/2"));
  CHECK(solo.payoff(0, PureProfile{{2}}) == R("9/4"));

  for (const char* name : {"prisoners_dilemma", "rock_paper_scissors",
                           "battle_of_sexes", "three_player"}) {
    CHECK_NOTHROW(ParseGameFile(std::string(NASHCELL_FIXTURES) + "/" + name +
                                ".json"));
  }
}

TEST_CASE("malformed games are rejected with specific codes") {
  CHECK(CodeOf(R"({"players": 2, "strategies": [["a","b"],["c","d"]],
                   "payoffs": [[1,2,3],[1,2,3,4]]})") == ErrorCode::kShapeError);
  CHECK(CodeOf(R"({"players": 1, "strategies": [["a","b"]],
                   "payoffs": [["1/0", 1]]})") == ErrorCode::kValueError);
  CHECK(CodeOf(R"({"players": 1, "strategies": [["a","b"]],
                   "payoffs": [[0.5, 1]]})") == ErrorCode::kParseError);
  CHECK(CodeOf(R"({"players": 2, "strategies": [["a","b"]],
                   "payoffs": [[1,2]]})") == ErrorCode::kShapeError);
  CHECK(CodeOf("{not json") == ErrorCode::kParseError);
  CHECK(CodeOf(R"({"players": 1})") == ErrorCode::kParseError);
}

TEST_CASE("float mode accepts JSON numbers") {
  Game g = ParseGameText(R"({"players": 1, "strategies": [["a","b"]],
                             "payoffs": [[0.5, "1/4"]]})",
                         NumericMode::kFloat);
  CHECK(g.mode() == NumericMode::kFloat);
  CHECK(g.payoff(0, PureProfile{{0}}).ToDouble() == 0.5);
  CHECK(g.payoff(0, PureProfile{{1}}).ToDouble() == 0.25);
}

TEST_CASE("games round-trip through JSON") {
  nashcell::testing::Draw draw(7);
  for (int trial = 0; trial < 20; ++trial) {
    Game g = nashcell::testing::RandomGame(draw, {2, 3, 2}, -5, 5);
    CHECK(ParseGame(GameToJson(g)) == g);
  }
  Game solo =
      ParseGameFile(std::string(NASHCELL_FIXTURES) + "/single_player.json");
  CHECK(ParseGameText(GameToJson(solo).dump()) == solo);
}

TEST_CASE("profiles parse and validate") {
  Game mp = nashcell::testing::MatchingPennies();
  CHECK(ParseProfileText(R"([["1/2","1/2"],[1,0]])", mp) ==
        Profile({{"1/2", "1/2"}, {"1", "0"}}));
  CHECK(ParseProfile(ProfileToJson(UniformProfile(mp)), mp) ==
        UniformProfile(mp));
  CHECK_THROWS_AS(ParseProfileText(R"([["1/2","1/3"],[1,0]])", mp), NashError);
  CHECK_THROWS_AS(ParseProfileText(R"([[1,0]])", mp), NashError);
}

TEST_CASE("solve reports round-trip and re-verify") {
  Game mp = nashcell::testing::MatchingPennies();
  ReportContext context;
  context.options.eps = R("1/10");
  SolveReport report = Solve(mp, context.options);
  Json j = SolveReportToJson(mp, report, context);
  CHECK(j["tool"] == "nashcell");
  CHECK(j["final"]["status"] == "converged");
  CHECK_FALSE(j["stages"][0].contains("seconds"));

  ReportFinal final = ParseReportFinal(Json::parse(j.dump()), mp);
  REQUIRE(final.profile.has_value());
  CHECK(*final.profile == *report.final_profile);
  CHECK(final.max_regret == report.final_max_regret);
  CHECK(MaxRegret(mp, *final.profile) == final.max_regret);
  CHECK(final.converged);

  context.include_timing = true;
  CHECK(SolveReportToJson(mp, report, context)["stages"][0].contains(
      "seconds"));
}

TEST_CASE("volume CSV layout") {
  Game g = nashcell::testing::OnePlayer({0, 1});
  VolumePolynomial volume = TotalVolumePolynomial(g, 2);
  std::ostringstream out;
  WriteVolumeCsv(out, g, volume, 4);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,g_total,cell_index,cell_value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5 * static_cast<int>(volume.triangulation.num_cells()));
}

}  // namespace
}  // namespace nashcell::io
