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

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "s3s/ingest.hpp"
#include "s3s/power_rating.hpp"

namespace s3s {

// Games in a typical regular season; tallies are scaled to this length.
inline constexpr double kNormalizedSeasonGames = 16.0;
inline constexpr double kDefaultWinConstant = 25.0;

struct Allocation {
  double loss_cost = 0.0;  // points deducted for losing to this team
  double win_value = 0.0;  // points gained for beating this team
};

/// Point allocation per team: loss_cost = anchor - PR and
/// win_value = |loss_cost - win_constant|.
class AllocationTable {
 public:
  AllocationTable(double anchor, double win_constant,
                  std::vector<std::pair<TeamId, double>> ratings);

  double anchor() const noexcept { return anchor_; }
  double win_constant() const noexcept { return win_constant_; }
  std::span<const TeamId> teams() const noexcept { return teams_; }

  bool has(const TeamId& t) const;
  const Allocation& at(const TeamId& t) const;  // throws ValidationError

  // Teams whose loss_cost exceeds win_constant. Past that point win_value
  // grows again as the opponent gets weaker.
  std::vector<TeamId> beyond_kink() const;

 private:
  double anchor_;
  double win_constant_;
  std::vector<TeamId> teams_;  // sorted
  std::vector<Allocation> rows_;
};

AllocationTable allocation_from_ratings(
    const RatingTable& rt, double win_constant = kDefaultWinConstant);

enum class Outcome { kWin, kLoss };

struct TallyLine {
  std::int64_t game_ref = 0;
  TeamId opponent;
  Outcome outcome = Outcome::kWin;
  int score_for = 0;
  int score_against = 0;
  double wl_points = 0.0;
  double hfa_adjust = 0.0;
  double line_total = 0.0;
};

struct SeasonTally {
  TeamId team;
  std::vector<TallyLine> lines;  // schedule order
  double raw_total = 0.0;
  int games_played = 0;
  int wins = 0;
  int losses = 0;
  double normalized_total = 0.0;
};

// raw_total * 16 / games_played. Throws ValidationError if games_played < 1.
double normalize(double raw_total, int games_played);

/// Per-game point lines for one team: +win_value(opponent) for a win,
/// -loss_cost(opponent) for a loss, then -hfa at home and +hfa away.
/// Throws ValidationError on a tied game or an opponent without an
/// allocation entry.
SeasonTally tally_team(const TeamId& team, const SeasonDataset& ds,
                       const AllocationTable& alloc, double hfa);

std::map<TeamId, SeasonTally> tally_all(const SeasonDataset& ds,
                                        const AllocationTable& alloc,
                                        double hfa);

}  // namespace s3s
