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

#include "s3s/rpi.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "s3s/error.hpp"

namespace s3s {

void RpiWeights::validate() const {
  if (wp < 0.0 || owp < 0.0 || oowp < 0.0) {
    throw ValidationError("RPI weights must be non-negative");
  }
  if (std::fabs(wp + owp + oowp - 1.0) > 1e-9) {
    throw ValidationError("RPI weights must sum to 1");
  }
}

const RpiRow& RpiTable::at(const TeamId& t) const {
  auto it = std::lower_bound(
      rows.begin(), rows.end(), t,
      [](const RpiRow& r, const TeamId& id) { return r.team < id; });
  if (it == rows.end() || it->team != t) {
    throw ValidationError("no RPI entry for '" + t.name() + "'");
  }
  return *it;
}

std::vector<RpiRow> RpiTable::ranked() const {
  std::vector<RpiRow> out = rows;
  std::stable_sort(out.begin(), out.end(), [](const RpiRow& a, const RpiRow& b) {
    return a.rpi > b.rpi;
  });
  return out;
}

int RpiTable::rank_of(const TeamId& t) const {
  const auto order = ranked();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].team == t) return static_cast<int>(i + 1);
  }
  throw ValidationError("no RPI entry for '" + t.name() + "'");
}

namespace {

struct Record {
  double points = 0.0;  // wins + ties / 2
  int games = 0;
};

double proportion(double points, int games) {
  return games > 0 ? points / games : kEmptyRecordWinProportion;
}

double result_points(int own, int other) {
  if (own > other) return 1.0;
  if (own == other) return 0.5;
  return 0.0;
}

}  // namespace

RpiTable compute_rpi(const SeasonDataset& ds, const RpiWeights& weights) {
  weights.validate();
  const auto teams = ds.teams();
  const std::size_t n = teams.size();

  std::vector<Record> total(n);
  std::map<std::pair<std::size_t, std::size_t>, Record> versus;
  std::vector<std::vector<std::size_t>> opponents(n);  // one entry per game
  RpiTable table;
  table.weights = weights;
  table.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) table.rows[i].team = teams[i];

  for (const Game& g : ds.games()) {
    const auto a = static_cast<std::size_t>(ds.team_index(g.team1));
    const auto b = static_cast<std::size_t>(ds.team_index(g.team2));
    const double pa = result_points(g.score1, g.score2);
    const double pb = result_points(g.score2, g.score1);
    total[a].points += pa;
    total[b].points += pb;
    ++total[a].games;
    ++total[b].games;
    auto& ab = versus[{a, b}];
    ab.points += pa;
    ++ab.games;
    auto& ba = versus[{b, a}];
    ba.points += pb;
    ++ba.games;
    opponents[a].push_back(b);
    opponents[b].push_back(a);
    for (auto [self, p] : {std::pair{a, pa}, std::pair{b, pb}}) {
      auto& row = table.rows[self];
      if (p == 1.0) {
        ++row.wins;
      } else if (p == 0.0) {
        ++row.losses;
      } else {
        ++row.ties;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (total[i].games == 0) {
      throw ValidationError("team '" + teams[i].name() + "' played no games");
    }
  }

  std::vector<double> owp(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    double sum = 0.0;
    for (std::size_t o : opponents[t]) {
      const Record& mutual = versus.at({o, t});
      sum += proportion(total[o].points - mutual.points,
                        total[o].games - mutual.games);
    }
    owp[t] = sum / static_cast<double>(opponents[t].size());
  }

  for (std::size_t t = 0; t < n; ++t) {
    double sum = 0.0;
    for (std::size_t o : opponents[t]) sum += owp[o];
    RpiRow& row = table.rows[t];
    row.wp = proportion(total[t].points, total[t].games);
    row.owp = owp[t];
    row.oowp = sum / static_cast<double>(opponents[t].size());
    row.rpi = weights.wp * row.wp + weights.owp * row.owp +
              weights.oowp * row.oowp;
  }
  return table;
}

SeasonDataset acc_ify(const SeasonDataset& ds, const TeamId& target,
                      std::span<const TeamId> replacements) {
  if (!ds.has_team(target)) {
    throw ValidationError("unknown team '" + target.name() + "'");
  }
  const auto played = std::count_if(
      ds.games().begin(), ds.games().end(),
      [&](const Game& g) { return g.involves(target); });
  if (static_cast<std::size_t>(played) != replacements.size()) {
    throw ValidationError("'" + target.name() + "' played " +
                          std::to_string(played) + " games but " +
                          std::to_string(replacements.size()) +
                          " replacement opponents were given");
  }
  for (const TeamId& r : replacements) {
    if (!ds.has_team(r)) {
      throw ValidationError("unknown replacement team '" + r.name() + "'");
    }
    if (r == target) {
      throw ValidationError("'" + target.name() + "' cannot replace itself");
    }
  }

  std::vector<Game> games(ds.games().begin(), ds.games().end());
  std::size_t next = 0;
  for (Game& g : games) {
    if (!g.involves(target)) continue;
    const TeamId& repl = replacements[next++];
    if (g.team1 == target) {
      g.team2 = repl;
    } else {
      g.team1 = repl;
    }
  }
  return SeasonDataset(std::move(games));
}

SeasonDataset flip_game(const SeasonDataset& ds, std::int64_t game_id) {
  std::vector<Game> games(ds.games().begin(), ds.games().end());
  auto it = std::find_if(games.begin(), games.end(),
                         [&](const Game& g) { return g.game_id == game_id; });
  if (it == games.end()) {
    throw ValidationError("unknown game_id " + std::to_string(game_id));
  }
  std::swap(it->score1, it->score2);
  return SeasonDataset(std::move(games));
}

namespace {

struct Ranked {
  std::vector<TeamId> order;
  std::vector<double> values;  // aligned with order
};

Ranked rank_by(const SeasonDataset& ds, RankMethod method,
               const SolverConfig& solver, const RpiWeights& weights) {
  std::vector<std::pair<TeamId, double>> rows;
  if (method == RankMethod::kRpi) {
    for (const RpiRow& r : compute_rpi(ds, weights).rows) {
      rows.emplace_back(r.team, r.rpi);
    }
  } else {
    const RatingTable rt = solve_ratings(ds, solver);
    for (std::size_t i = 0; i < rt.teams.size(); ++i) {
      rows.emplace_back(rt.teams[i], rt.ratings[i]);
    }
  }
  // rows arrive sorted by team, so stable_sort breaks value ties by name.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  Ranked out;
  for (auto& [t, v] : rows) {
    out.order.push_back(t);
    out.values.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<RankDelta> perturb_and_compare(const SeasonDataset& ds,
                                           std::int64_t game_id,
                                           RankMethod method,
                                           const SolverConfig& solver,
                                           const RpiWeights& weights) {
  const SeasonDataset flipped = flip_game(ds, game_id);
  const Ranked before = rank_by(ds, method, solver, weights);
  const Ranked after = rank_by(flipped, method, solver, weights);

  std::vector<RankDelta> deltas;
  deltas.reserve(before.order.size());
  for (std::size_t i = 0; i < before.order.size(); ++i) {
    RankDelta d;
    d.team = before.order[i];
    d.rank_before = static_cast<int>(i + 1);
    d.value_before = before.values[i];
    const auto it = std::find(after.order.begin(), after.order.end(), d.team);
    const auto j = static_cast<std::size_t>(it - after.order.begin());
    d.rank_after = static_cast<int>(j + 1);
    d.value_after = after.values[j];
    d.moved = d.rank_before != d.rank_after;
    deltas.push_back(std::move(d));
  }
  return deltas;
}

}  // namespace s3s
