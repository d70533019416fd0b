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

#include <map>
#include <vector>

#include "s3s/ingest.hpp"
#include "s3s/points.hpp"

namespace s3s {

struct HeadToHead {
  int wins_a = 0;
  int wins_b = 0;
};

// Wins of each side over all games between a and b. Tied games count for
// neither.
HeadToHead head_to_head(const TeamId& a, const TeamId& b,
                        const SeasonDataset& ds);

struct RankingEntry {
  int rank = 0;  // 1-based
  TeamId team;
  int wins = 0;
  int losses = 0;
  double s3s_points = 0.0;  // normalized total
  double raw_total = 0.0;
};

struct Swap {
  int rank_a = 0;  // the higher rank before the swap
  int rank_b = 0;
  TeamId team_a;   // held rank_a before the swap
  TeamId team_b;
};

struct RankingList {
  std::vector<RankingEntry> entries;
  std::vector<Swap> swaps_applied;
};

/// Sorts teams by normalized points, then makes one top-down pass over
/// adjacent pairs, swapping a pair when the lower team holds strictly more
/// head-to-head wins. After a swap the pass moves on to the next index, so
/// the demoted team is compared with the team below it next.
///
/// Exact point ties are ordered by head-to-head wins within the tied group,
/// then raw total, then team name.
RankingList rank(const std::map<TeamId, SeasonTally>& tallies,
                 const SeasonDataset& ds);

}  // namespace s3s
