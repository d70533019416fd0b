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
#include <span>
#include <vector>

#include "s3s/ingest.hpp"
#include "s3s/power_rating.hpp"

namespace s3s {

struct RpiWeights {
  double wp = 0.25;
  double owp = 0.50;
  double oowp = 0.25;

  // Non-negative and summing to 1 within 1e-9.
  void validate() const;
};

// Win proportion used for a record with no games.
inline constexpr double kEmptyRecordWinProportion = 0.5;

struct RpiRow {
  TeamId team;
  int wins = 0;
  int losses = 0;
  int ties = 0;
  double wp = 0.0;
  double owp = 0.0;
  double oowp = 0.0;
  double rpi = 0.0;
};

struct RpiTable {
  RpiWeights weights;
  std::vector<RpiRow> rows;  // sorted by team

  const RpiRow& at(const TeamId& t) const;
  // Rows by descending rpi, ties by team name.
  std::vector<RpiRow> ranked() const;
  // 1-based rank of `t` in ranked().
  int rank_of(const TeamId& t) const;
};

/// wp: wins / games with ties as half a win. owp: mean over the team's games
/// of the opponent's wp with games against this team removed. oowp: mean over
/// the team's games of the opponent's owp. A record with no games left has
/// win proportion kEmptyRecordWinProportion.
RpiTable compute_rpi(const SeasonDataset& ds, const RpiWeights& weights = {});

/// Replaces the opponent in each of `target`'s games, in schedule order, with
/// the corresponding entry of `replacements`. Scores and venue roles stay as
/// they were. Throws ValidationError on a length mismatch, an unknown team,
/// or a replacement equal to the target.
SeasonDataset acc_ify(const SeasonDataset& ds, const TeamId& target,
                      std::span<const TeamId> replacements);

// Same dataset with the two scores of `game_id` exchanged.
SeasonDataset flip_game(const SeasonDataset& ds, std::int64_t game_id);

enum class RankMethod { kRpi, kPower };

struct RankDelta {
  TeamId team;
  int rank_before = 0;
  int rank_after = 0;
  bool moved = false;
  double value_before = 0.0;  // rpi or power rating
  double value_after = 0.0;
};

/// Flips one game and ranks every team before and after by `method`
/// (rpi descending, or power rating descending; ties by name). Result is
/// ordered by rank_before. Throws ValidationError for an unknown game_id.
std::vector<RankDelta> perturb_and_compare(const SeasonDataset& ds,
                                           std::int64_t game_id,
                                           RankMethod method,
                                           const SolverConfig& solver = {},
                                           const RpiWeights& weights = {});

}  // namespace s3s
