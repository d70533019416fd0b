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

#include "s3s/power_rating.hpp"

#include <algorithm>
#include <cmath>

#include "s3s/error.hpp"

namespace s3s {

void SolverConfig::validate() const {
  if (!(tolerance > 0.0)) throw ValidationError("tolerance must be > 0");
  if (max_iterations < 1) throw ValidationError("max_iterations must be >= 1");
  if (margin_cap && !(*margin_cap >= 0.0)) {
    throw ValidationError("margin_cap must be >= 0");
  }
  if (!std::isfinite(hfa) || !std::isfinite(anchor)) {
    throw ValidationError("hfa and anchor must be finite");
  }
}

bool RatingTable::has(const TeamId& t) const {
  return std::binary_search(teams.begin(), teams.end(), t);
}

namespace {

std::size_t index_of(const std::vector<TeamId>& teams, const TeamId& t) {
  auto it = std::lower_bound(teams.begin(), teams.end(), t);
  if (it == teams.end() || *it != t) {
    throw ValidationError("no rating for team '" + t.name() + "'");
  }
  return static_cast<std::size_t>(it - teams.begin());
}

}  // namespace

double RatingTable::rating(const TeamId& t) const {
  return ratings[index_of(teams, t)];
}

int RatingTable::component_of(const TeamId& t) const {
  return component[index_of(teams, t)];
}

double capped_margin(const Game& g, const std::optional<double>& margin_cap) {
  double raw = static_cast<double>(g.score1) - static_cast<double>(g.score2);
  if (margin_cap) raw = std::clamp(raw, -*margin_cap, *margin_cap);
  return raw;
}

double neutral_margin(const Game& g, const SolverConfig& cfg) {
  const double m = capped_margin(g, cfg.margin_cap);
  switch (g.venue) {
    case Venue::kHomeTeam1:
      return m - cfg.hfa;
    case Venue::kHomeTeam2:
      return m + cfg.hfa;
    case Venue::kNeutral:
      break;
  }
  return m;
}

namespace {

// Per-team game lists in CSR form. Each slot remembers how to rebuild its
// neutral margin for any hfa: margin = side * capped - venue * hfa.
struct Schedule {
  std::vector<std::int32_t> offsets;
  std::vector<std::int32_t> opponents;
  std::vector<double> side_margin;  // capped margin from this team's view
  std::vector<double> venue_sign;   // +1 hosted, -1 travelled, 0 neutral
};

Schedule build_schedule(const SeasonDataset& ds,
                        const std::optional<double>& margin_cap) {
  const std::size_t n = ds.teams().size();
  Schedule s;
  s.offsets.assign(n + 1, 0);
  for (const Game& g : ds.games()) {
    ++s.offsets[static_cast<std::size_t>(ds.team_index(g.team1)) + 1];
    ++s.offsets[static_cast<std::size_t>(ds.team_index(g.team2)) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) s.offsets[i + 1] += s.offsets[i];

  const std::size_t slots = static_cast<std::size_t>(s.offsets[n]);
  s.opponents.resize(slots);
  s.side_margin.resize(slots);
  s.venue_sign.resize(slots);
  std::vector<std::int32_t> fill(s.offsets.begin(), s.offsets.end() - 1);
  for (const Game& g : ds.games()) {
    const auto a = ds.team_index(g.team1);
    const auto b = ds.team_index(g.team2);
    const double m = capped_margin(g, margin_cap);
    const auto put = [&](std::ptrdiff_t self, std::ptrdiff_t other,
                         double side, const TeamId& team) {
      const auto k = static_cast<std::size_t>(fill[static_cast<std::size_t>(self)]++);
      s.opponents[k] = static_cast<std::int32_t>(other);
      s.side_margin[k] = side;
      s.venue_sign[k] = static_cast<double>(g.venue_sign_for(team));
    };
    put(a, b, m, g.team1);
    put(b, a, -m, g.team2);
  }
  return s;
}

void fill_margins(const Schedule& s, double hfa, std::vector<double>& out) {
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = s.side_margin[k] - s.venue_sign[k] * hfa;
  }
}

// Mean home-venue residual: observed home margin minus rating difference.
double refit_hfa(const SeasonDataset& ds, const std::vector<double>& ratings,
                 const std::optional<double>& margin_cap, double fallback) {
  double sum = 0.0;
  int count = 0;
  for (const Game& g : ds.games()) {
    if (g.venue == Venue::kNeutral) continue;
    const double r1 = ratings[static_cast<std::size_t>(ds.team_index(g.team1))];
    const double r2 = ratings[static_cast<std::size_t>(ds.team_index(g.team2))];
    const double m = capped_margin(g, margin_cap);
    sum += g.venue == Venue::kHomeTeam1 ? m - (r1 - r2) : -m - (r2 - r1);
    ++count;
  }
  return count ? sum / count : fallback;
}

}  // namespace

RatingTable solve_ratings(const SeasonDataset& ds, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = ds.teams().size();
  if (n < 2) throw ValidationError("rating needs at least two teams");

  const kernels::SweepFn sweep =
      kernels::select_sweep(cfg.kernel.value_or(kernels::best_isa()));
  const Schedule sched = build_schedule(ds, cfg.margin_cap);

  std::vector<double> ratings(n, 0.0);
  std::vector<double> next(n, 0.0);
  std::vector<double> margins(sched.opponents.size());
  double hfa = cfg.hfa;
  fill_margins(sched, hfa, margins);

  RatingTable rt;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    double delta = sweep({ratings, sched.offsets, sched.opponents, margins, next});
    ratings.swap(next);
    if (cfg.hfa_mode == HfaMode::kEstimated) {
      const double refit = refit_hfa(ds, ratings, cfg.margin_cap, hfa);
      delta = std::max(delta, std::fabs(refit - hfa));
      hfa = refit;
      fill_margins(sched, hfa, margins);
    }
    rt.iterations = it + 1;
    if (delta < cfg.tolerance) {
      rt.converged = true;
      break;
    }
  }

  const auto comps = schedule_components(ds);
  rt.component.assign(n, 0);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    double top = -INFINITY;
    for (const TeamId& t : comps[c]) {
      const auto i = static_cast<std::size_t>(ds.team_index(t));
      rt.component[i] = static_cast<int>(c);
      top = std::max(top, ratings[i]);
    }
    // anchor - (top - r) lands the top team on the anchor exactly.
    for (const TeamId& t : comps[c]) {
      const auto i = static_cast<std::size_t>(ds.team_index(t));
      ratings[i] = cfg.anchor - (top - ratings[i]);
    }
  }

  rt.teams.assign(ds.teams().begin(), ds.teams().end());
  rt.ratings = std::move(ratings);
  rt.component_count = comps.size();
  rt.hfa_used = hfa;
  rt.anchor = cfg.anchor;
  return rt;
}

}  // namespace s3s
