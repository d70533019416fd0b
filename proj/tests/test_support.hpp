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

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls into the solver or the RPI code it checks.

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "s3s/ingest.hpp"
#include "s3s/power_rating.hpp"

namespace s3s::testing {

struct SeasonShape {
  int min_teams = 3;
  int max_teams = 8;
  int min_games = 5;
  int max_games = 20;
  int max_margin = 12;
  bool allow_ties = false;
};

inline std::string team_name(int i) {
  std::string s = "T";
  if (i < 10) s += '0';
  return s + std::to_string(i);
}

// Random games between random pairs; every generated team appears at least
// once because teams are taken from the games themselves.
inline SeasonDataset random_season(std::mt19937_64& rng,
                                   const SeasonShape& shape = {}) {
  std::uniform_int_distribution<int> nteams(shape.min_teams, shape.max_teams);
  std::uniform_int_distribution<int> ngames(shape.min_games, shape.max_games);
  const int n = nteams(rng);
  const int g = std::max(ngames(rng), n / 2 + 1);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> venue(0, 2);
  std::uniform_int_distribution<int> base(0, 15);
  std::uniform_int_distribution<int> margin(shape.allow_ties ? 0 : 1,
                                            shape.max_margin);
  std::bernoulli_distribution coin(0.5);

  std::vector<Game> games;
  for (int k = 0; k < g; ++k) {
    int a = pick(rng);
    int b = pick(rng);
    while (b == a) b = pick(rng);
    Game game;
    game.game_id = k + 1;
    game.team1 = TeamId(team_name(a));
    game.team2 = TeamId(team_name(b));
    const int lo = base(rng);
    const int m = margin(rng);
    if (coin(rng)) {
      game.score1 = lo + m;
      game.score2 = lo;
    } else {
      game.score1 = lo;
      game.score2 = lo + m;
    }
    const int v = venue(rng);
    game.venue = v == 0 ? Venue::kHomeTeam1
                        : (v == 1 ? Venue::kHomeTeam2 : Venue::kNeutral);
    games.push_back(std::move(game));
  }
  return SeasonDataset(std::move(games));
}

struct OracleRatings {
  std::map<TeamId, double> ratings;
  double hfa = 0.0;
};

/// Least squares by the normal equations. Unknowns are every team rating
/// except the first member of each connected component (pinned to 0), plus
/// the home-field advantage when it is estimated. Components are anchored
/// afterwards so their best team sits at `anchor`.
inline OracleRatings oracle_least_squares(const SeasonDataset& ds,
                                          const SolverConfig& cfg) {
  const auto teams = ds.teams();
  const int n = static_cast<int>(teams.size());
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  // Flood fill over the game list.
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = ncomp;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const Game& g : ds.games()) {
        const auto a = static_cast<std::size_t>(ds.team_index(g.team1));
        const auto b = static_cast<std::size_t>(ds.team_index(g.team2));
        if (comp[a] == ncomp && comp[b] < 0) {
          comp[b] = ncomp;
          grew = true;
        } else if (comp[b] == ncomp && comp[a] < 0) {
          comp[a] = ncomp;
          grew = true;
        }
      }
    }
    ++ncomp;
  }

  // Column of each free rating; pinned teams get -1.
  std::vector<int> col(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(ncomp), false);
  int ncols = 0;
  for (int t = 0; t < n; ++t) {
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(t)]);
    if (!seen[c]) {
      seen[c] = true;
      continue;
    }
    col[static_cast<std::size_t>(t)] = ncols++;
  }
  const bool estimate = cfg.hfa_mode == HfaMode::kEstimated;
  const int hfa_col = estimate ? ncols++ : -1;

  const auto rows = static_cast<Eigen::Index>(ds.games().size());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, std::max(ncols, 1));
  Eigen::VectorXd y(rows);
  Eigen::Index r = 0;
  for (const Game& g : ds.games()) {
    double observed = static_cast<double>(g.score1 - g.score2);
    if (cfg.margin_cap) {
      observed = std::max(-*cfg.margin_cap, std::min(*cfg.margin_cap, observed));
    }
    const double home = g.venue == Venue::kHomeTeam1
                            ? 1.0
                            : (g.venue == Venue::kHomeTeam2 ? -1.0 : 0.0);
    const int c1 = col[static_cast<std::size_t>(ds.team_index(g.team1))];
    const int c2 = col[static_cast<std::size_t>(ds.team_index(g.team2))];
    if (c1 >= 0) A(r, c1) += 1.0;
    if (c2 >= 0) A(r, c2) -= 1.0;
    if (estimate) {
      A(r, hfa_col) = home;
      y(r) = observed;
    } else {
      y(r) = observed - home * cfg.hfa;
    }
    ++r;
  }

  Eigen::VectorXd x = Eigen::VectorXd::Zero(A.cols());
  if (ncols > 0) {
    const Eigen::MatrixXd normal = A.transpose() * A;
    x = normal.ldlt().solve(A.transpose() * y);
  }

  std::vector<double> raw(static_cast<std::size_t>(n), 0.0);
  for (int t = 0; t < n; ++t) {
    const int c = col[static_cast<std::size_t>(t)];
    raw[static_cast<std::size_t>(t)] = c >= 0 ? x(c) : 0.0;
  }
  std::vector<double> top(static_cast<std::size_t>(ncomp), -INFINITY);
  for (int t = 0; t < n; ++t) {
    auto& m = top[static_cast<std::size_t>(comp[static_cast<std::size_t>(t)])];
    m = std::max(m, raw[static_cast<std::size_t>(t)]);
  }
  OracleRatings out;
  for (int t = 0; t < n; ++t) {
    const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(t)]);
    out.ratings[teams[static_cast<std::size_t>(t)]] =
        cfg.anchor - (top[c] - raw[static_cast<std::size_t>(t)]);
  }
  out.hfa = estimate ? x(hfa_col) : cfg.hfa;
  return out;
}

struct OracleRpi {
  double wp = 0.0;
  double owp = 0.0;
  double oowp = 0.0;
  double rpi = 0.0;
};

/// RPI straight from the definitions by rescanning the game list for every
/// quantity. Quadratic, but that is fine at test sizes.
inline std::map<TeamId, OracleRpi> oracle_rpi(const SeasonDataset& ds,
                                              double w1 = 0.25,
                                              double w2 = 0.50,
                                              double w3 = 0.25) {
  auto win_proportion_excluding = [&](const TeamId& team, const TeamId* skip) {
    double pts = 0.0;
    int games = 0;
    for (const Game& g : ds.games()) {
      if (!g.involves(team)) continue;
      if (skip && g.involves(*skip)) continue;
      const int own = g.team1 == team ? g.score1 : g.score2;
      const int other = g.team1 == team ? g.score2 : g.score1;
      pts += own > other ? 1.0 : (own == other ? 0.5 : 0.0);
      ++games;
    }
    return games ? pts / games : 0.5;
  };
  auto owp = [&](const TeamId& team) {
    double sum = 0.0;
    int games = 0;
    for (const Game& g : ds.games()) {
      if (!g.involves(team)) continue;
      sum += win_proportion_excluding(g.opponent_of(team), &team);
      ++games;
    }
    return sum / games;
  };
  std::map<TeamId, OracleRpi> out;
  for (const TeamId& t : ds.teams()) {
    OracleRpi o;
    o.wp = win_proportion_excluding(t, nullptr);
    o.owp = owp(t);
    double sum = 0.0;
    int games = 0;
    for (const Game& g : ds.games()) {
      if (!g.involves(t)) continue;
      sum += owp(g.opponent_of(t));
      ++games;
    }
    o.oowp = sum / games;
    o.rpi = w1 * o.wp + w2 * o.owp + w3 * o.oowp;
    out[t] = o;
  }
  return out;
}

}  // namespace s3s::testing
