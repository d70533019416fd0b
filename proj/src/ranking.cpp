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

#include "s3s/ranking.hpp"

#include <algorithm>

namespace s3s {

HeadToHead head_to_head(const TeamId& a, const TeamId& b,
                        const SeasonDataset& ds) {
  HeadToHead h;
  for (const Game& g : ds.games()) {
    if (!(g.involves(a) && g.involves(b)) || g.is_tie()) continue;
    const TeamId& winner = g.score1 > g.score2 ? g.team1 : g.team2;
    if (winner == a) {
      ++h.wins_a;
    } else {
      ++h.wins_b;
    }
  }
  return h;
}

namespace {

void order_tied_group(std::vector<RankingEntry>& run, const SeasonDataset& ds) {
  std::vector<std::pair<int, RankingEntry>> keyed;
  for (const auto& e : run) {
    int wins = 0;
    for (const auto& other : run) {
      if (other.team != e.team) wins += head_to_head(e.team, other.team, ds).wins_a;
    }
    keyed.emplace_back(wins, e);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    if (x.second.raw_total != y.second.raw_total) {
      return x.second.raw_total > y.second.raw_total;
    }
    return x.second.team < y.second.team;
  });
  for (std::size_t i = 0; i < run.size(); ++i) run[i] = keyed[i].second;
}

}  // namespace

RankingList rank(const std::map<TeamId, SeasonTally>& tallies,
                 const SeasonDataset& ds) {
  std::vector<RankingEntry> order;
  order.reserve(tallies.size());
  for (const auto& [team, t] : tallies) {
    order.push_back({0, team, t.wins, t.losses, t.normalized_total, t.raw_total});
  }
  // The map iterates in team order, so the stable sort leaves exact ties
  // grouped and name-ordered.
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.s3s_points > y.s3s_points;
  });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && order[j].s3s_points == order[i].s3s_points) ++j;
    if (j - i > 1) {
      std::vector<RankingEntry> run(order.begin() + static_cast<std::ptrdiff_t>(i),
                                    order.begin() + static_cast<std::ptrdiff_t>(j));
      order_tied_group(run, ds);
      std::copy(run.begin(), run.end(), order.begin() + static_cast<std::ptrdiff_t>(i));
    }
    i = j;
  }

  RankingList out;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const HeadToHead h = head_to_head(order[i].team, order[i + 1].team, ds);
    if (h.wins_b > h.wins_a) {
      out.swaps_applied.push_back({static_cast<int>(i + 1), static_cast<int>(i + 2),
                                   order[i].team, order[i + 1].team});
      std::swap(order[i], order[i + 1]);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i].rank = static_cast<int>(i + 1);
  }
  out.entries = std::move(order);
  return out;
}

}  // namespace s3s
