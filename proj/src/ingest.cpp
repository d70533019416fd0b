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

#include "s3s/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "s3s/csv.hpp"
#include "s3s/error.hpp"

namespace s3s {

int Game::venue_sign_for(const TeamId& t) const {
  switch (venue) {
    case Venue::kHomeTeam1:
      return team1 == t ? 1 : -1;
    case Venue::kHomeTeam2:
      return team2 == t ? 1 : -1;
    case Venue::kNeutral:
      break;
  }
  return 0;
}

SeasonDataset::SeasonDataset(std::vector<Game> games)
    : games_(std::move(games)) {
  std::unordered_set<std::int64_t> ids;
  for (const Game& g : games_) {
    if (g.team1.empty() || g.team2.empty()) {
      throw ValidationError("game " + std::to_string(g.game_id) +
                            ": missing team");
    }
    if (g.team1 == g.team2) {
      throw ValidationError("game " + std::to_string(g.game_id) + ": " +
                            g.team1.name() + " cannot play itself");
    }
    if (g.score1 < 0 || g.score2 < 0) {
      throw ValidationError("game " + std::to_string(g.game_id) +
                            ": negative score");
    }
    if (!ids.insert(g.game_id).second) {
      throw ValidationError("duplicate game_id " + std::to_string(g.game_id));
    }
    teams_.push_back(g.team1);
    teams_.push_back(g.team2);
  }
  // stable_sort keeps the first-seen spelling of each team at the front of
  // its run, and unique keeps the front.
  std::stable_sort(teams_.begin(), teams_.end());
  teams_.erase(std::unique(teams_.begin(), teams_.end()), teams_.end());
}

bool SeasonDataset::has_team(const TeamId& t) const {
  return std::binary_search(teams_.begin(), teams_.end(), t);
}

std::ptrdiff_t SeasonDataset::team_index(const TeamId& t) const {
  auto it = std::lower_bound(teams_.begin(), teams_.end(), t);
  if (it == teams_.end() || *it != t) return -1;
  return it - teams_.begin();
}

const Game* SeasonDataset::find_game(std::int64_t game_id) const {
  auto it = std::find_if(games_.begin(), games_.end(),
                         [&](const Game& g) { return g.game_id == game_id; });
  return it == games_.end() ? nullptr : &*it;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string s) {
  for (char& c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

template <typename Int>
Int parse_int(std::string_view text, std::size_t line, const char* what) {
  const std::string s = trim(text);
  Int value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("non-integer ") + what + " '" + s + "'");
  }
  return value;
}

int parse_score(std::string_view text, std::size_t line) {
  const int v = parse_int<int>(text, line, "score");
  if (v < 0) throw ParseError(line, "negative score " + std::to_string(v));
  return v;
}

std::pair<int, int> parse_joined_score(std::string_view text,
                                       std::size_t line) {
  const std::string s = trim(text);
  const auto dash = s.size() > 1 ? s.find('-', 1) : std::string::npos;
  if (dash == std::string::npos) {
    throw ParseError(line, "score '" + s + "' is not of the form S1-S2");
  }
  return {parse_score(std::string_view(s).substr(0, dash), line),
          parse_score(std::string_view(s).substr(dash + 1), line)};
}

TeamId parse_team(const std::string& text, std::size_t line) {
  try {
    return TeamId(text);
  } catch (const ValidationError&) {
    throw ParseError(line, "empty team name");
  }
}

enum class Layout { kTwoScores, kJoinedScore };

Layout detect_layout(const csv::Record& header) {
  std::vector<std::string> cols;
  for (const auto& f : header.fields) cols.push_back(lower(trim(f)));
  const std::vector<std::string> two = {"game_id", "team1",  "team2",
                                        "score1",  "score2", "home_team"};
  const std::vector<std::string> joined = {"game_id", "team1", "team2",
                                           "score", "home_team"};
  if (cols == two) return Layout::kTwoScores;
  if (cols == joined) return Layout::kJoinedScore;
  throw ParseError(header.line,
                   "unrecognized header; expected "
                   "game_id,team1,team2,score1,score2,home_team");
}

}  // namespace

SeasonDataset parse_dataset(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError(1, "empty input: missing header row");
  const Layout layout = detect_layout(*header);
  const std::size_t ncols = layout == Layout::kTwoScores ? 6 : 5;

  std::vector<Game> games;
  std::unordered_set<std::int64_t> ids;
  while (auto rec = reader.next()) {
    const auto& f = rec->fields;
    const std::size_t line = rec->line;
    if (f.size() != ncols) {
      throw ParseError(line, "expected " + std::to_string(ncols) +
                                 " columns, found " +
                                 std::to_string(f.size()));
    }
    Game g;
    g.game_id = parse_int<std::int64_t>(f[0], line, "game_id");
    g.team1 = parse_team(f[1], line);
    g.team2 = parse_team(f[2], line);
    if (layout == Layout::kTwoScores) {
      g.score1 = parse_score(f[3], line);
      g.score2 = parse_score(f[4], line);
    } else {
      std::tie(g.score1, g.score2) = parse_joined_score(f[3], line);
    }
    if (g.team1 == g.team2) {
      throw ValidationError("line " + std::to_string(line) + ": " +
                            g.team1.name() + " cannot play itself");
    }
    const std::string home = trim(f[ncols - 1]);
    if (home.empty()) {
      g.venue = Venue::kNeutral;
    } else {
      const TeamId h(home);
      if (h == g.team1) {
        g.venue = Venue::kHomeTeam1;
      } else if (h == g.team2) {
        g.venue = Venue::kHomeTeam2;
      } else if (h.key() == "neutral") {
        g.venue = Venue::kNeutral;
      } else {
        throw ValidationError("line " + std::to_string(line) +
                              ": home team '" + home +
                              "' is neither listed team");
      }
    }
    if (!ids.insert(g.game_id).second) {
      throw ValidationError("line " + std::to_string(line) +
                            ": duplicate game_id " +
                            std::to_string(g.game_id));
    }
    games.push_back(std::move(g));
  }
  return SeasonDataset(std::move(games));
}

SeasonDataset parse_dataset_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

SeasonDataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return parse_dataset(in);
}

void write_dataset(std::ostream& out, const SeasonDataset& ds) {
  out << "game_id,team1,team2,score1,score2,home_team\n";
  for (const Game& g : ds.games()) {
    std::string home;
    if (g.venue == Venue::kHomeTeam1) home = g.team1.name();
    if (g.venue == Venue::kHomeTeam2) home = g.team2.name();
    out << csv::join({std::to_string(g.game_id), g.team1.name(),
                      g.team2.name(), std::to_string(g.score1),
                      std::to_string(g.score2), home})
        << '\n';
  }
}

std::vector<std::vector<TeamId>> schedule_components(const SeasonDataset& ds) {
  const auto teams = ds.teams();
  std::vector<std::size_t> parent(teams.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Game& g : ds.games()) {
    const auto a = find(static_cast<std::size_t>(ds.team_index(g.team1)));
    const auto b = find(static_cast<std::size_t>(ds.team_index(g.team2)));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<TeamId>> comps;
  std::vector<std::ptrdiff_t> slot(teams.size(), -1);
  // Teams are sorted, so each component's members arrive in order and the
  // first member seen is its smallest.
  for (std::size_t i = 0; i < teams.size(); ++i) {
    const auto root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[root])].push_back(teams[i]);
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  return comps;
}

}  // namespace s3s
