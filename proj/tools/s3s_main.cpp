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

// s3s: batch front end. One subcommand per run:
//
//   s3s ratings --input season.csv            Power Ratings + point allocation
//   s3s rank    --input season.csv            S3S ranking list (and tallies)
//   s3s rpi     --input season.csv            RPI table
//   s3s perturb --input season.csv --game-id 17 --method rpi
//   s3s accify  --input season.csv --team Hampton --replacements acc.txt
//
// Exit codes: 0 ok, 1 usage, 2 data/validation, 3 no convergence (--strict).

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "s3s/error.hpp"
#include "s3s/ingest.hpp"
#include "s3s/points.hpp"
#include "s3s/power_rating.hpp"
#include "s3s/ranking.hpp"
#include "s3s/report.hpp"
#include "s3s/rpi.hpp"

namespace {

enum class Format { kCsv, kJson };

struct RunConfig {
  std::string input;
  std::string output;
  Format format = Format::kCsv;
  s3s::SolverConfig solver;
  std::string hfa_mode = "fixed";
  std::string kernel = "auto";
  double margin_cap = -1.0;
  double win_constant = s3s::kDefaultWinConstant;
  std::vector<double> weights = {0.25, 0.50, 0.25};
  bool strict = false;

  // rank
  std::string team;
  std::string tally_dir;
  // perturb
  std::int64_t game_id = 0;
  std::string method = "rpi";
  // accify
  std::string replacements;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Season CSV")->required();
  cmd->add_option("--output", cfg.output, "Output file (default: stdout)");
  cmd->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::kCsv},
                                        {"json", Format::kJson}}));
  cmd->add_option("--hfa", cfg.solver.hfa, "Home-field advantage in goals")
      ->capture_default_str();
  cmd->add_option("--hfa-mode", cfg.hfa_mode, "fixed or estimated")
      ->check(CLI::IsMember({"fixed", "estimated"}));
  cmd->add_option("--margin-cap", cfg.margin_cap,
                  "Cap on the absolute score margin (default: none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--win-constant", cfg.win_constant,
                  "Points for beating the top-rated team")
      ->capture_default_str();
  cmd->add_option("--anchor", cfg.solver.anchor, "Rating of the top team")
      ->capture_default_str();
  cmd->add_option("--tolerance", cfg.solver.tolerance,
                  "Stop when no rating moves more than this per sweep")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iters", cfg.solver.max_iterations, "Sweep limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--weights", cfg.weights, "RPI weights w1,w2,w3")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--kernel", cfg.kernel, "auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  cmd->add_flag("--strict", cfg.strict,
                "Fail with exit code 3 if the solver does not converge");
}

void finalize(RunConfig& cfg) {
  cfg.solver.hfa_mode = cfg.hfa_mode == "estimated" ? s3s::HfaMode::kEstimated
                                                    : s3s::HfaMode::kFixed;
  if (cfg.margin_cap >= 0.0) cfg.solver.margin_cap = cfg.margin_cap;
  if (cfg.kernel == "scalar") cfg.solver.kernel = s3s::kernels::Isa::kScalar;
  if (cfg.kernel == "avx2") cfg.solver.kernel = s3s::kernels::Isa::kAvx2;
}

s3s::RpiWeights weights_of(const RunConfig& cfg) {
  return {cfg.weights[0], cfg.weights[1], cfg.weights[2]};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw s3s::Error("cannot write " + cfg.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

s3s::RatingTable solve(const RunConfig& cfg, const s3s::SeasonDataset& ds) {
  s3s::RatingTable rt = s3s::solve_ratings(ds, cfg.solver);
  if (!rt.converged) {
    const std::string msg = "solver stopped after " +
                            std::to_string(rt.iterations) +
                            " sweeps without converging";
    if (cfg.strict) throw s3s::ConvergenceError(msg);
    std::cerr << "warning: " << msg << '\n';
  }
  if (rt.component_count > 1) {
    std::cerr << "warning: schedule has " << rt.component_count
              << " disconnected components; ratings are anchored per "
                 "component and are not comparable across them\n";
  }
  return rt;
}

s3s::AllocationTable allocate(const RunConfig& cfg, const s3s::RatingTable& rt) {
  s3s::AllocationTable alloc = s3s::allocation_from_ratings(rt, cfg.win_constant);
  const auto kink = alloc.beyond_kink();
  if (!kink.empty()) {
    std::cerr << "warning: " << kink.size()
              << " team(s) rate more than the win constant below the anchor; "
                 "beating them earns more as they get weaker:";
    for (const auto& t : kink) std::cerr << ' ' << t.name() << ';';
    std::cerr << '\n';
  }
  return alloc;
}

int cmd_ratings(const RunConfig& cfg) {
  const auto ds = s3s::load_dataset(cfg.input);
  const auto rt = solve(cfg, ds);
  const auto alloc = allocate(cfg, rt);
  std::ostringstream out;
  if (cfg.format == Format::kJson) {
    out << dump(s3s::report::ratings_json(rt, alloc));
  } else {
    s3s::report::write_ratings_csv(out, rt, alloc);
  }
  emit(cfg, out.str());
  return 0;
}

std::string slug(const std::string& name) {
  std::string s;
  for (char c : name) {
    s.push_back(std::isalnum(static_cast<unsigned char>(c))
                    ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                    : '_');
  }
  return s;
}

int cmd_rank(const RunConfig& cfg) {
  const auto ds = s3s::load_dataset(cfg.input);
  const auto rt = solve(cfg, ds);
  const auto alloc = allocate(cfg, rt);
  const auto tallies = s3s::tally_all(ds, alloc, rt.hfa_used);
  const bool json = cfg.format == Format::kJson;

  if (!cfg.tally_dir.empty()) {
    std::filesystem::create_directories(cfg.tally_dir);
    for (const auto& [team, tally] : tallies) {
      const auto path = std::filesystem::path(cfg.tally_dir) /
                        ("tally_" + slug(team.name()) + (json ? ".json" : ".csv"));
      std::ofstream f(path, std::ios::binary);
      if (!f) throw s3s::Error("cannot write " + path.string());
      if (json) {
        f << dump(s3s::report::tally_json(tally));
      } else {
        s3s::report::write_tally_csv(f, tally);
      }
    }
  }

  std::ostringstream out;
  if (!cfg.team.empty()) {
    const s3s::TeamId team(cfg.team);
    auto it = tallies.find(team);
    if (it == tallies.end()) {
      throw s3s::ValidationError("unknown team '" + cfg.team + "'");
    }
    if (json) {
      out << dump(s3s::report::tally_json(it->second));
    } else {
      s3s::report::write_tally_csv(out, it->second);
    }
  } else {
    const auto list = s3s::rank(tallies, ds);
    for (const auto& s : list.swaps_applied) {
      std::cerr << "note: head-to-head swap at ranks " << s.rank_a << '/'
                << s.rank_b << ": " << s.team_b.name() << " over "
                << s.team_a.name() << '\n';
    }
    if (json) {
      out << dump(s3s::report::ranking_json(list));
    } else {
      s3s::report::write_ranking_csv(out, list);
    }
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_rpi(const RunConfig& cfg) {
  const auto ds = s3s::load_dataset(cfg.input);
  const auto table = s3s::compute_rpi(ds, weights_of(cfg));
  std::ostringstream out;
  if (cfg.format == Format::kJson) {
    out << dump(s3s::report::rpi_json(table));
  } else {
    s3s::report::write_rpi_csv(out, table);
  }
  emit(cfg, out.str());
  return 0;
}

int cmd_perturb(const RunConfig& cfg) {
  const auto ds = s3s::load_dataset(cfg.input);
  const auto method =
      cfg.method == "power" ? s3s::RankMethod::kPower : s3s::RankMethod::kRpi;
  const auto deltas = s3s::perturb_and_compare(ds, cfg.game_id, method,
                                               cfg.solver, weights_of(cfg));
  std::ostringstream out;
  if (cfg.format == Format::kJson) {
    out << dump(s3s::report::perturbation_json(deltas, method, cfg.game_id));
  } else {
    s3s::report::write_perturbation_csv(out, deltas, method);
  }
  emit(cfg, out.str());
  return 0;
}

std::vector<s3s::TeamId> read_team_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw s3s::DataError("cannot open " + path);
  std::vector<s3s::TeamId> teams;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string name = s3s::normalize_team_name(line);
    if (name.empty() || name.front() == '#') continue;
    teams.emplace_back(name);
  }
  return teams;
}

int cmd_accify(const RunConfig& cfg) {
  const auto ds = s3s::load_dataset(cfg.input);
  const s3s::TeamId target(cfg.team);
  const auto replacements = read_team_list(cfg.replacements);
  const auto modified = s3s::acc_ify(ds, target, replacements);
  const auto before = s3s::compute_rpi(ds, weights_of(cfg));
  const auto after = s3s::compute_rpi(modified, weights_of(cfg));
  std::ostringstream out;
  if (cfg.format == Format::kJson) {
    out << dump(s3s::report::accify_json(target, before, after));
  } else {
    s3s::report::write_accify_csv(out, before, after);
  }
  emit(cfg, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Safe3Step ranking engine"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* ratings = app.add_subcommand("ratings", "Power Ratings and point allocation table");
  auto* rank = app.add_subcommand("rank", "S3S ranking list with head-to-head swaps");
  auto* rpi = app.add_subcommand("rpi", "Ratings Percentage Index table");
  auto* perturb = app.add_subcommand("perturb", "Rank changes after flipping one game");
  auto* accify = app.add_subcommand("accify", "RPI before/after replacing a team's opponents");
  for (auto* cmd : {ratings, rank, rpi, perturb, accify}) add_common(cmd, cfg);

  rank->add_option("--team", cfg.team, "Emit this team's points tally instead of the ranking");
  rank->add_option("--tally-dir", cfg.tally_dir, "Also write one tally file per team here");
  perturb->add_option("--game-id", cfg.game_id, "Game whose result is reversed")->required();
  perturb->add_option("--method", cfg.method, "rpi or power")
      ->check(CLI::IsMember({"rpi", "power"}));
  accify->add_option("--team", cfg.team, "Team whose schedule is replaced")->required();
  accify->add_option("--replacements", cfg.replacements,
                     "File with one replacement opponent per line, in schedule order")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    finalize(cfg);
    if (ratings->parsed()) return cmd_ratings(cfg);
    if (rank->parsed()) return cmd_rank(cfg);
    if (rpi->parsed()) return cmd_rpi(cfg);
    if (perturb->parsed()) return cmd_perturb(cfg);
    if (accify->parsed()) return cmd_accify(cfg);
  } catch (const s3s::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const s3s::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
