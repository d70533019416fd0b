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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "s3s/ingest.hpp"
#include "s3s/sweep_kernels.hpp"

namespace s3s {

enum class HfaMode { kFixed, kEstimated };

struct SolverConfig {
  double hfa = 0.73;  // goals credited to the away team
  HfaMode hfa_mode = HfaMode::kFixed;
  std::optional<double> margin_cap;  // cap on |score1 - score2|
  double tolerance = 1e-9;           // stop when the max per-sweep change is below
  int max_iterations = 10000;
  double anchor = 99.9;  // rating given to the best team of each component
  // Sweep kernel; nullopt picks the widest one the CPU supports. All kernels
  // produce bit-identical results.
  std::optional<kernels::Isa> kernel;

  // Throws ValidationError on out-of-range fields.
  void validate() const;
};

/// Solved Power Ratings, one entry per team of the dataset, teams sorted.
struct RatingTable {
  std::vector<TeamId> teams;
  std::vector<double> ratings;
  std::vector<int> component;  // index into schedule_components() order
  std::size_t component_count = 0;
  double hfa_used = 0.0;
  double anchor = 99.9;
  int iterations = 0;
  bool converged = false;

  bool has(const TeamId& t) const;
  // Throws ValidationError for an unknown team.
  double rating(const TeamId& t) const;
  int component_of(const TeamId& t) const;
};

// Score difference from team1's view after the optional cap, before any
// venue adjustment.
double capped_margin(const Game& g, const std::optional<double>& margin_cap);

/// Margin from team1's point of view as if played on a neutral field: the
/// capped score difference, minus hfa if team1 hosted, plus hfa if team2 did.
double neutral_margin(const Game& g, const SolverConfig& cfg);

/// Least-squares Power Ratings: minimizes
///   sum over games (PR_1 - PR_2 - neutral_margin)^2
/// by damped simultaneous sweeps (see kernels::SweepArgs) from an all-zero
/// start, then shifts each connected component so its best team sits at
/// cfg.anchor. In estimated mode the home-field advantage is refit after
/// every sweep as the mean home-venue residual.
RatingTable solve_ratings(const SeasonDataset& ds, const SolverConfig& cfg);

}  // namespace s3s
