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
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "s3s/team.hpp"

namespace s3s {

enum class Venue : std::uint8_t { kHomeTeam1, kHomeTeam2, kNeutral };

struct Game {
  std::int64_t game_id = 0;
  TeamId team1;
  TeamId team2;
  int score1 = 0;
  int score2 = 0;
  Venue venue = Venue::kNeutral;

  bool involves(const TeamId& t) const { return team1 == t || team2 == t; }
  bool is_tie() const { return score1 == score2; }
  const TeamId& opponent_of(const TeamId& t) const {
    return team1 == t ? team2 : team1;
  }
  // +1 if `t` hosted the game, -1 if it travelled, 0 on a neutral field.
  int venue_sign_for(const TeamId& t) const;

  friend bool operator==(const Game&, const Game&) = default;
};

/// An immutable season: games in file order plus the sorted set of teams that
/// appear in them. Construction validates every game.
class SeasonDataset {
 public:
  SeasonDataset() = default;
  explicit SeasonDataset(std::vector<Game> games);

  std::span<const Game> games() const noexcept { return games_; }
  std::span<const TeamId> teams() const noexcept { return teams_; }

  bool has_team(const TeamId& t) const;
  // Index of `t` in teams(), or -1.
  std::ptrdiff_t team_index(const TeamId& t) const;
  const Game* find_game(std::int64_t game_id) const;

  friend bool operator==(const SeasonDataset& a, const SeasonDataset& b) {
    return a.games_ == b.games_;
  }

 private:
  std::vector<Game> games_;
  std::vector<TeamId> teams_;  // sorted by key
};

SeasonDataset parse_dataset(std::istream& in);
SeasonDataset parse_dataset_string(std::string_view text);
SeasonDataset load_dataset(const std::string& path);

// Canonical two-score-column form; parse_dataset(write_dataset(ds)) == ds.
void write_dataset(std::ostream& out, const SeasonDataset& ds);

/// Connected components of the played-each-other graph. Members are sorted;
/// components are ordered by size descending, then by smallest member.
std::vector<std::vector<TeamId>> schedule_components(const SeasonDataset& ds);

}  // namespace s3s
