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

#include "s3s/points.hpp"

#include <algorithm>
#include <cmath>

#include "s3s/error.hpp"

namespace s3s {

AllocationTable::AllocationTable(
    double anchor, double win_constant,
    std::vector<std::pair<TeamId, double>> ratings)
    : anchor_(anchor), win_constant_(win_constant) {
  std::sort(ratings.begin(), ratings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < ratings.size(); ++i) {
    if (ratings[i].first == ratings[i - 1].first) {
      throw ValidationError("duplicate allocation entry for '" +
                            ratings[i].first.name() + "'");
    }
  }
  teams_.reserve(ratings.size());
  rows_.reserve(ratings.size());
  for (const auto& [team, pr] : ratings) {
    const double loss_cost = anchor_ - pr;
    teams_.push_back(team);
    rows_.push_back({loss_cost, std::fabs(loss_cost - win_constant_)});
  }
}

bool AllocationTable::has(const TeamId& t) const {
  return std::binary_search(teams_.begin(), teams_.end(), t);
}

const Allocation& AllocationTable::at(const TeamId& t) const {
  auto it = std::lower_bound(teams_.begin(), teams_.end(), t);
  if (it == teams_.end() || *it != t) {
    throw ValidationError("no point allocation for opponent '" + t.name() +
                          "'");
  }
  return rows_[static_cast<std::size_t>(it - teams_.begin())];
}

std::vector<TeamId> AllocationTable::beyond_kink() const {
  std::vector<TeamId> out;
  for (std::size_t i = 0; i < teams_.size(); ++i) {
    if (rows_[i].loss_cost > win_constant_) out.push_back(teams_[i]);
  }
  return out;
}

AllocationTable allocation_from_ratings(const RatingTable& rt,
                                        double win_constant) {
  std::vector<std::pair<TeamId, double>> rows;
  rows.reserve(rt.teams.size());
  for (std::size_t i = 0; i < rt.teams.size(); ++i) {
    rows.emplace_back(rt.teams[i], rt.ratings[i]);
  }
  return AllocationTable(rt.anchor, win_constant, std::move(rows));
}

double normalize(double raw_total, int games_played) {
  if (games_played < 1) {
    throw ValidationError("cannot normalize a tally with no games");
  }
  return raw_total * kNormalizedSeasonGames / games_played;
}

SeasonTally tally_team(const TeamId& team, const SeasonDataset& ds,
                       const AllocationTable& alloc, double hfa) {
  SeasonTally tally;
  tally.team = team;
  for (const Game& g : ds.games()) {
    if (!g.involves(team)) continue;
    if (g.is_tie()) {
      throw ValidationError("game " + std::to_string(g.game_id) +
                            " is tied; tied games cannot be scored");
    }
    const bool first = g.team1 == team;
    TallyLine line;
    line.game_ref = g.game_id;
    line.opponent = first ? g.team2 : g.team1;
    line.score_for = first ? g.score1 : g.score2;
    line.score_against = first ? g.score2 : g.score1;
    const Allocation& opp = alloc.at(line.opponent);
    if (line.score_for > line.score_against) {
      line.outcome = Outcome::kWin;
      line.wl_points = opp.win_value;
      ++tally.wins;
    } else {
      line.outcome = Outcome::kLoss;
      line.wl_points = 0.0 - opp.loss_cost;  // no -0.0 for the anchor team
      ++tally.losses;
    }
    switch (g.venue_sign_for(team)) {
      case 1:
        line.hfa_adjust = -hfa;
        break;
      case -1:
        line.hfa_adjust = hfa;
        break;
      default:
        line.hfa_adjust = 0.0;
    }
    line.line_total = line.wl_points + line.hfa_adjust;
    tally.raw_total += line.line_total;
    tally.lines.push_back(std::move(line));
  }
  tally.games_played = static_cast<int>(tally.lines.size());
  if (tally.games_played == 0) {
    throw ValidationError("team '" + team.name() + "' played no games");
  }
  tally.normalized_total = normalize(tally.raw_total, tally.games_played);
  return tally;
}

std::map<TeamId, SeasonTally> tally_all(const SeasonDataset& ds,
                                        const AllocationTable& alloc,
                                        double hfa) {
  std::map<TeamId, SeasonTally> out;
  for (const TeamId& t : ds.teams()) {
    out.emplace(t, tally_team(t, ds, alloc, hfa));
  }
  return out;
}

}  // namespace s3s
