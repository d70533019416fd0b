// Copyright 2026 The Safe3Step Authors
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

#include <gtest/gtest.h>

#include <random>

#include "s3s/error.hpp"
#include "s3s/fixtures.hpp"
#include "s3s/points.hpp"
#include "s3s/report.hpp"
#include "test_support.hpp"

namespace s3s {
namespace {

AllocationTable table_from(const nlohmann::json& ratings, double anchor = 99.9,
                           double win_constant = 25.0) {
  std::vector<std::pair<TeamId, double>> rows;
  for (const auto& [team, pr] : ratings.items()) {
    rows.emplace_back(TeamId(team), pr.get<double>());
  }
  return AllocationTable(anchor, win_constant, std::move(rows));
}

TEST(AllocationTest, PublishedRows) {
  const Fixture f = load_fixture("paper-table1");
  std::vector<std::pair<TeamId, double>> rows;
  for (const auto& row : f.expected["rows"]) {
    rows.emplace_back(TeamId(row["team"].get<std::string>()),
                      row["pr"]["value"].get<double>());
  }
  const AllocationTable alloc(99.9, 25.0, rows);
  for (const auto& row : f.expected["rows"]) {
    const Allocation& a = alloc.at(TeamId(row["team"].get<std::string>()));
    EXPECT_NEAR(a.loss_cost, row["loss_cost"]["value"].get<double>(), 0.01);
    EXPECT_NEAR(a.win_value, row["win_value"]["value"].get<double>(), 0.01);
  }
}

TEST(AllocationTest, FromSolvedRatings) {
  const Fixture f = load_fixture("two-team-neutral");
  const RatingTable rt = solve_ratings(*f.dataset, {});
  const AllocationTable alloc = allocation_from_ratings(rt);
  EXPECT_NEAR(alloc.at(TeamId("A")).loss_cost, 0.0, 1e-12);
  EXPECT_NEAR(alloc.at(TeamId("A")).win_value, 25.0, 1e-12);
  EXPECT_NEAR(alloc.at(TeamId("B")).loss_cost, 3.0, 1e-9);
  EXPECT_NEAR(alloc.at(TeamId("B")).win_value, 22.0, 1e-9);
  EXPECT_THROW(alloc.at(TeamId("Z")), ValidationError);
}

TEST(AllocationTest, BeyondTheKinkIsFlagged) {
  const AllocationTable alloc(99.9, 25.0,
                              {{TeamId("Top"), 99.9}, {TeamId("Weak"), 70.0}});
  EXPECT_NEAR(alloc.at(TeamId("Weak")).win_value, 4.9, 1e-9);
  ASSERT_EQ(alloc.beyond_kink().size(), 1u);
  EXPECT_EQ(alloc.beyond_kink()[0], TeamId("Weak"));
}

TEST(AllocationTest, DuplicateEntriesRejected) {
  EXPECT_THROW(AllocationTable(99.9, 25.0, {{TeamId("A"), 1.0}, {TeamId("a"), 2.0}}),
               ValidationError);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(report::fixed(normalize(217.69, 14)), "248.79");
  EXPECT_EQ(normalize(123.456, 16), 123.456);
  EXPECT_EQ(normalize(100.0, 8), 200.0);
  EXPECT_THROW(normalize(1.0, 0), ValidationError);
}

TEST(NormalizeTest, Linear) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> v(-300, 300);
  for (int i = 0; i < 200; ++i) {
    const double a = v(rng), b = v(rng);
    const int n = 1 + i % 20;
    EXPECT_NEAR(normalize(a + b, n), normalize(a, n) + normalize(b, n), 1e-9);
  }
}

TEST(TallyTest, PublishedVirginiaLines) {
  const Fixture f = load_fixture("paper-table2-virginia");
  const auto& cfg = f.config;
  const AllocationTable alloc =
      table_from(cfg["opponent_ratings"], cfg["anchor"], cfg["win_constant"]);
  const SeasonTally t =
      tally_team(TeamId("Virginia"), *f.dataset, alloc, cfg["hfa"].get<double>());
  const auto& lines = f.expected["lines"];
  ASSERT_EQ(t.lines.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    EXPECT_EQ(t.lines[i].game_ref, lines[i]["game_id"].get<std::int64_t>());
    EXPECT_EQ(t.lines[i].opponent, TeamId(lines[i]["opponent"].get<std::string>()));
    EXPECT_EQ(report::fixed(t.lines[i].wl_points), lines[i]["wl_points"]);
    EXPECT_EQ(report::fixed(t.lines[i].hfa_adjust), lines[i]["hfa"]);
    EXPECT_EQ(report::fixed(t.lines[i].line_total), lines[i]["line_total"]);
  }
  EXPECT_EQ(t.wins, 7);
  EXPECT_EQ(t.losses, 1);
}

TEST(TallyTest, HomeWinAndAwayLossAtDefaultHfa) {
  const auto ds = parse_dataset_string(
      "game_id,team1,team2,score1,score2,home_team\n"
      "211,Virginia,Michigan,17,13,Virginia\n"
      "411,Duke,Virginia,15,14,Duke\n");
  const AllocationTable alloc(99.9, 25.0,
                              {{TeamId("Virginia"), 99.73},
                               {TeamId("Michigan"), 96.61},
                               {TeamId("Duke"), 97.89}});
  const SeasonTally t = tally_team(TeamId("Virginia"), ds, alloc, 0.73);
  EXPECT_EQ(report::fixed(t.lines[0].line_total), "20.98");
  EXPECT_EQ(report::fixed(t.lines[1].line_total), "-1.28");
  EXPECT_EQ(t.lines[0].outcome, Outcome::kWin);
  EXPECT_EQ(t.lines[1].outcome, Outcome::kLoss);
}

TEST(TallyTest, NeutralWinOverAnchorIsExactlyTheWinConstant) {
  const auto ds = parse_dataset_string(
      "game_id,team1,team2,score1,score2,home_team\n1,Top,Other,3,9,\n");
  const AllocationTable alloc(99.9, 25.0, {{TeamId("Top"), 99.9}, {TeamId("Other"), 95.0}});
  const SeasonTally t = tally_team(TeamId("Other"), ds, alloc, 0.73);
  EXPECT_EQ(t.lines[0].line_total, 25.0);
  EXPECT_EQ(t.lines[0].hfa_adjust, 0.0);
  // Top lost, so it pays Other's loss cost.
  const SeasonTally top = tally_team(TeamId("Top"), ds, alloc, 0.73);
  EXPECT_NEAR(top.lines[0].wl_points, -4.9, 1e-12);
}

TEST(TallyTest, SingleGameBothSides) {
  const auto ds = parse_dataset_string(
      "game_id,team1,team2,score1,score2,home_team\n1,A,B,5,4,\n");
  const RatingTable rt = solve_ratings(ds, {});
  const AllocationTable alloc = allocation_from_ratings(rt);
  const auto all = tally_all(ds, alloc, rt.hfa_used);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_DOUBLE_EQ(all.at(TeamId("A")).raw_total, alloc.at(TeamId("B")).win_value);
  EXPECT_DOUBLE_EQ(all.at(TeamId("B")).raw_total, -alloc.at(TeamId("A")).loss_cost);
  EXPECT_EQ(all.at(TeamId("B")).raw_total, 0.0);  // losing to the anchor team
}

TEST(TallyTest, EmptyDatasetGivesEmptyMap) {
  const AllocationTable alloc(99.9, 25.0, {});
  EXPECT_TRUE(tally_all(SeasonDataset{}, alloc, 0.73).empty());
}

TEST(TallyTest, RoundRobinHandTally) {
  const Fixture f = load_fixture("round-robin-4");
  const auto& cfg = f.config;
  const AllocationTable alloc =
      table_from(cfg["ratings"], cfg["anchor"], cfg["win_constant"]);
  const auto all = tally_all(*f.dataset, alloc, cfg["hfa"].get<double>());
  for (const auto& [team, pinned] : f.expected["raw_total"].items()) {
    EXPECT_NEAR(all.at(TeamId(team)).raw_total, pinned["value"].get<double>(), 1e-9);
  }
  for (const auto& [team, pinned] : f.expected["normalized_total"].items()) {
    EXPECT_NEAR(all.at(TeamId(team)).normalized_total, pinned["value"].get<double>(),
                1e-9);
  }
}

TEST(TallyTest, TiesAndMissingOpponentsAreErrors) {
  const auto ds = parse_dataset_string(
      "game_id,team1,team2,score1,score2,home_team\n1,A,B,5,5,\n2,A,C,3,1,\n");
  const AllocationTable alloc(99.9, 25.0, {{TeamId("A"), 99.9}, {TeamId("B"), 99.0}});
  EXPECT_THROW(tally_team(TeamId("A"), ds, alloc, 0.73), ValidationError);
  const auto ds2 = parse_dataset_string(
      "game_id,team1,team2,score1,score2,home_team\n1,A,C,3,1,\n");
  try {
    tally_team(TeamId("A"), ds2, alloc, 0.73);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("'C'"), std::string::npos);
  }
}

// Properties over random seasons: no win line is negative, losing to the
// anchor team costs nothing, home/away adjustments cancel, totals add up.
TEST(TallyProperty, RandomSeasons) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ds = testing::random_season(rng);
    const RatingTable rt = solve_ratings(ds, {});
    const AllocationTable alloc = allocation_from_ratings(rt);
    const auto all = tally_all(ds, alloc, rt.hfa_used);
    for (const auto& [team, t] : all) {
      double sum = 0.0;
      for (const TallyLine& l : t.lines) {
        if (l.outcome == Outcome::kWin) {
          ASSERT_GE(l.wl_points, 0.0);
        } else {
          ASSERT_LE(l.wl_points, 0.0);
          if (alloc.at(l.opponent).loss_cost == 0.0) {
            ASSERT_EQ(l.wl_points, 0.0);
          }
        }
        sum += l.line_total;
      }
      ASSERT_DOUBLE_EQ(sum, t.raw_total);
      ASSERT_DOUBLE_EQ(t.normalized_total, t.raw_total * 16.0 / t.games_played);
    }
    for (const Game& g : ds.games()) {
      auto line_of = [&](const TeamId& team) {
        for (const TallyLine& l : all.at(team).lines) {
          if (l.game_ref == g.game_id) return l;
        }
        throw std::logic_error("missing line");
      };
      const TallyLine a = line_of(g.team1);
      const TallyLine b = line_of(g.team2);
      ASSERT_EQ(a.hfa_adjust + b.hfa_adjust, 0.0);
    }
  }
}

TEST(TallyProperty, BeatingStrongerOpponentIsWorthMoreBeforeTheKink) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> pr(75.0, 99.9);
  for (int i = 0; i < 500; ++i) {
    const double hi = pr(rng), lo = pr(rng);
    const AllocationTable alloc(99.9, 25.0, {{TeamId("H"), std::max(hi, lo)},
                                             {TeamId("L"), std::min(hi, lo)}});
    EXPECT_GE(alloc.at(TeamId("H")).win_value, alloc.at(TeamId("L")).win_value);
  }
}

}  // namespace
}  // namespace s3s
