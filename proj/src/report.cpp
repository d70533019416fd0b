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

#include "s3s/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "s3s/csv.hpp"

namespace s3s::report {

using nlohmann::json;

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

namespace {

std::vector<std::size_t> by_rating(const RatingTable& rt) {
  std::vector<std::size_t> idx(rt.teams.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return rt.ratings[a] > rt.ratings[b];
  });
  return idx;
}

const char* method_name(RankMethod m) {
  return m == RankMethod::kRpi ? "rpi" : "power";
}

int method_decimals(RankMethod m) { return m == RankMethod::kRpi ? 4 : 2; }

}  // namespace

void write_ratings_csv(std::ostream& out, const RatingTable& rt,
                       const AllocationTable& alloc) {
  out << "team,pr,loss_cost,win_value\n";
  for (std::size_t i : by_rating(rt)) {
    const Allocation& a = alloc.at(rt.teams[i]);
    out << csv::join({rt.teams[i].name(), fixed(rt.ratings[i]),
                      fixed(a.loss_cost), fixed(a.win_value)})
        << '\n';
  }
}

json ratings_json(const RatingTable& rt, const AllocationTable& alloc) {
  json teams = json::object();
  for (std::size_t i = 0; i < rt.teams.size(); ++i) {
    const Allocation& a = alloc.at(rt.teams[i]);
    teams[rt.teams[i].name()] = {{"pr", rt.ratings[i]},
                                 {"loss_cost", a.loss_cost},
                                 {"win_value", a.win_value},
                                 {"component", rt.component[i]}};
  }
  json kink = json::array();
  for (const TeamId& t : alloc.beyond_kink()) kink.push_back(t.name());
  return {{"anchor", rt.anchor},
          {"win_constant", alloc.win_constant()},
          {"hfa_used", rt.hfa_used},
          {"iterations", rt.iterations},
          {"converged", rt.converged},
          {"components", rt.component_count},
          {"beyond_kink", kink},
          {"teams", teams}};
}

void write_tally_csv(std::ostream& out, const SeasonTally& tally) {
  out << "game_id,opponent,score,wl_points,hfa,line_total\n";
  for (const TallyLine& l : tally.lines) {
    out << csv::join({std::to_string(l.game_ref), l.opponent.name(),
                      std::to_string(l.score_for) + "-" +
                          std::to_string(l.score_against),
                      fixed(l.wl_points), fixed(l.hfa_adjust),
                      fixed(l.line_total)})
        << '\n';
  }
  out << "games_played,,,,," << tally.games_played << '\n';
  out << "raw_total,,,,," << fixed(tally.raw_total) << '\n';
  out << "normalized_total,,,,," << fixed(tally.normalized_total) << '\n';
}

json tally_json(const SeasonTally& tally) {
  json lines = json::array();
  for (const TallyLine& l : tally.lines) {
    lines.push_back({{"game_id", l.game_ref},
                     {"opponent", l.opponent.name()},
                     {"outcome", l.outcome == Outcome::kWin ? "win" : "loss"},
                     {"score_for", l.score_for},
                     {"score_against", l.score_against},
                     {"wl_points", l.wl_points},
                     {"hfa", l.hfa_adjust},
                     {"line_total", l.line_total}});
  }
  return {{"team", tally.team.name()},
          {"lines", lines},
          {"games_played", tally.games_played},
          {"wins", tally.wins},
          {"losses", tally.losses},
          {"raw_total", tally.raw_total},
          {"normalized_total", tally.normalized_total}};
}

void write_ranking_csv(std::ostream& out, const RankingList& list) {
  out << "rank,team,wins,losses,s3s_points\n";
  for (const RankingEntry& e : list.entries) {
    out << csv::join({std::to_string(e.rank), e.team.name(),
                      std::to_string(e.wins), std::to_string(e.losses),
                      fixed(e.s3s_points)})
        << '\n';
  }
  if (list.swaps_applied.empty()) return;
  out << "\nswap,rank_a,rank_b,team_a,team_b\n";
  for (std::size_t i = 0; i < list.swaps_applied.size(); ++i) {
    const Swap& s = list.swaps_applied[i];
    out << csv::join({std::to_string(i + 1), std::to_string(s.rank_a),
                      std::to_string(s.rank_b), s.team_a.name(),
                      s.team_b.name()})
        << '\n';
  }
}

json ranking_json(const RankingList& list) {
  json entries = json::array();
  for (const RankingEntry& e : list.entries) {
    entries.push_back({{"rank", e.rank},
                       {"team", e.team.name()},
                       {"wins", e.wins},
                       {"losses", e.losses},
                       {"s3s_points", e.s3s_points},
                       {"raw_total", e.raw_total}});
  }
  json swaps = json::array();
  for (const Swap& s : list.swaps_applied) {
    swaps.push_back({{"rank_a", s.rank_a},
                     {"rank_b", s.rank_b},
                     {"team_a", s.team_a.name()},
                     {"team_b", s.team_b.name()}});
  }
  return {{"entries", entries},
          {"swaps_applied", swaps},
          {"tie_break",
           "s3s_points, head-to-head wins within the tied group, raw_total, "
           "team name"}};
}

namespace {

json rpi_rows_json(const RpiTable& table) {
  json rows = json::array();
  const auto ranked = table.ranked();
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const RpiRow& r = ranked[i];
    rows.push_back({{"rank", i + 1},
                    {"team", r.team.name()},
                    {"rpi", r.rpi},
                    {"wp", r.wp},
                    {"owp", r.owp},
                    {"oowp", r.oowp},
                    {"wins", r.wins},
                    {"losses", r.losses},
                    {"ties", r.ties}});
  }
  return rows;
}

}  // namespace

void write_rpi_csv(std::ostream& out, const RpiTable& table) {
  out << "rank,team,rpi,wins,losses\n";
  const auto ranked = table.ranked();
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const RpiRow& r = ranked[i];
    out << csv::join({std::to_string(i + 1), r.team.name(), fixed(r.rpi, 4),
                      std::to_string(r.wins), std::to_string(r.losses)})
        << '\n';
  }
}

json rpi_json(const RpiTable& table) {
  return {{"weights",
           {table.weights.wp, table.weights.owp, table.weights.oowp}},
          {"empty_record_wp", kEmptyRecordWinProportion},
          {"owp_excludes_mutual_games", true},
          {"teams", rpi_rows_json(table)}};
}

void write_perturbation_csv(std::ostream& out, std::span<const RankDelta> deltas,
                            RankMethod method) {
  const int d = method_decimals(method);
  std::vector<const RankDelta*> after(deltas.size());
  for (const RankDelta& x : deltas) {
    after[static_cast<std::size_t>(x.rank_after - 1)] = &x;
  }
  out << "rank,team_before,value_before,moved_before,team_after,value_after,"
         "moved_after\n";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const RankDelta& b = deltas[i];
    const RankDelta& a = *after[i];
    out << csv::join({std::to_string(i + 1), b.team.name(),
                      fixed(b.value_before, d), b.moved ? "1" : "0",
                      a.team.name(), fixed(a.value_after, d),
                      a.moved ? "1" : "0"})
        << '\n';
  }
}

json perturbation_json(std::span<const RankDelta> deltas, RankMethod method,
                       std::int64_t game_id) {
  json rows = json::array();
  int moved = 0;
  for (const RankDelta& x : deltas) {
    moved += x.moved ? 1 : 0;
    rows.push_back({{"team", x.team.name()},
                    {"rank_before", x.rank_before},
                    {"rank_after", x.rank_after},
                    {"moved", x.moved},
                    {"value_before", x.value_before},
                    {"value_after", x.value_after}});
  }
  return {{"method", method_name(method)},
          {"game_id", game_id},
          {"moved_count", moved},
          {"deltas", rows}};
}

void write_accify_csv(std::ostream& out, const RpiTable& before,
                      const RpiTable& after) {
  out << "panel,rank,team,rpi,wins,losses\n";
  for (auto [label, table] : {std::pair{"before", &before},
                              std::pair{"after", &after}}) {
    const auto ranked = table->ranked();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const RpiRow& r = ranked[i];
      out << csv::join({label, std::to_string(i + 1), r.team.name(),
                        fixed(r.rpi, 4), std::to_string(r.wins),
                        std::to_string(r.losses)})
          << '\n';
    }
  }
}

json accify_json(const TeamId& target, const RpiTable& before,
                 const RpiTable& after) {
  return {{"target", target.name()},
          {"before",
           {{"rank", before.rank_of(target)}, {"rpi", before.at(target).rpi}}},
          {"after",
           {{"rank", after.rank_of(target)}, {"rpi", after.at(target).rpi}}},
          {"table_before", rpi_rows_json(before)},
          {"table_after", rpi_rows_json(after)}};
}

}  // namespace s3s::report
