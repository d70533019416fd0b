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
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "s3s/points.hpp"
#include "s3s/power_rating.hpp"
#include "s3s/ranking.hpp"
#include "s3s/rpi.hpp"

namespace s3s::report {

// Fixed-point text with `decimals` places; never prints a negative zero.
std::string fixed(double value, int decimals = 2);

// team,pr,loss_cost,win_value ordered by rating, best first.
void write_ratings_csv(std::ostream& out, const RatingTable& rt,
                       const AllocationTable& alloc);
nlohmann::json ratings_json(const RatingTable& rt, const AllocationTable& alloc);

// game_id,opponent,score,wl_points,hfa,line_total, then footer rows for
// games played and the raw and normalized totals.
void write_tally_csv(std::ostream& out, const SeasonTally& tally);
nlohmann::json tally_json(const SeasonTally& tally);

// rank,team,wins,losses,s3s_points; any swaps follow after a blank line as
// swap,rank_a,rank_b,team_a,team_b rows.
void write_ranking_csv(std::ostream& out, const RankingList& list);
nlohmann::json ranking_json(const RankingList& list);

// rank,team,rpi,wins,losses with rpi at 4 places.
void write_rpi_csv(std::ostream& out, const RpiTable& table);
nlohmann::json rpi_json(const RpiTable& table);

// Two panels side by side: rank,team_before,value_before,moved_before,
// team_after,value_after,moved_after.
void write_perturbation_csv(std::ostream& out, std::span<const RankDelta> deltas,
                            RankMethod method);
nlohmann::json perturbation_json(std::span<const RankDelta> deltas,
                                 RankMethod method, std::int64_t game_id);

// panel,rank,team,rpi,wins,losses for the tables before and after.
void write_accify_csv(std::ostream& out, const RpiTable& before,
                      const RpiTable& after);
nlohmann::json accify_json(const TeamId& target, const RpiTable& before,
                           const RpiTable& after);

}  // namespace s3s::report
