// Copyright 2026 The nashcell Authors.
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

#include "nashcell/cli.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nashcell/errors.h"
#include "nashcell/game.h"
#include "nashcell/io.h"
#include "nashcell/oracle.h"
#include "nashcell/pre_equilibrium.h"
#include "nashcell/root_function.h"
#include "nashcell/subdivision.h"
#include "nashcell/volume.h"

namespace nashcell {
namespace {

using io::Json;

struct CommonArgs {
  std::string game_path;
  std::string mode = "rational";
  int threads = 1;
};

NumericMode ModeOf(const CommonArgs& args) {
  return args.mode == "float" ? NumericMode::kFloat : NumericMode::kRational;
}

void AddCommon(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("game", args.game_path, "Game JSON file")->required();
  cmd->add_option("--mode", args.mode, "Numeric mode")
      ->check(CLI::IsMember({"rational", "float"}));
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json ErrorJson(std::string_view code, std::string_view message) {
  Json j = Json::object();
  Json e = Json::object();
  e["code"] = code;
  e["message"] = message;
  j["error"] = std::move(e);
  return j;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) {
    throw NashError(ErrorCode::kParseError, "cannot write " + path);
  }
  file << contents;
}

int RunSolve(const CommonArgs& common, const std::string& eps_text, int m0,
             int factor, int max_stages, const std::string& out_path,
             std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, ModeOf(common));
  SolveOptions options;
  options.eps = ParseScalar(eps_text, game.mode());
  options.m0 = m0;
  options.refine_factor = factor;
  options.max_stages = max_stages;
  options.scan.threads = common.threads;
  SolveReport report = Solve(game, options);

  io::ReportContext context{options, false};
  Emit(out, io::SolveReportToJson(game, report, context));
  if (!out_path.empty()) {
    context.include_timing = true;
    WriteFile(out_path,
              io::SolveReportToJson(game, report, context).dump(2) + "\n");
  }
  return report.converged ? kExitOk : kExitNotSolved;
}

int RunEval(const CommonArgs& common, const std::string& profile_text,
            std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, ModeOf(common));
  MixedProfile sigma = io::ParseProfileText(profile_text, game);
  Json j = Json::object();
  j["profile"] = io::ProfileToJson(sigma);
  Json payoffs = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    payoffs.push_back(io::ScalarToJson(EvaluatePayoff(game, sigma, i)));
  }
  j["payoffs"] = std::move(payoffs);
  j["gain_table"] = io::GainTableToJson(ComputeGainTable(game, sigma));
  j["max_regret"] = io::ScalarToJson(MaxRegret(game, sigma));
  j["root"] = io::PureProfileToJson(game, RootLabel(game, sigma));
  Emit(out, j);
  return kExitOk;
}

int RunCells(const CommonArgs& common, const std::vector<int>& m,
             std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, ModeOf(common));
  std::vector<int> resolutions = m;
  if (resolutions.size() == 1) {
    resolutions.assign(game.num_players(), m.front());
  }
  ScanOptions options;
  options.threads = common.threads;
  ScanResult scan = ScanPreEquilibria(game, resolutions, options);
  Json j = Json::object();
  j["resolutions"] = resolutions;
  j["cells_scanned"] = scan.cells_scanned;
  j["vertex_profiles_labeled"] = scan.vertex_profiles_labeled;
  j["count"] = scan.certs.size();
  Json certs = Json::array();
  for (const PreEquilibriumCert& cert : scan.certs) {
    Json c = io::CertToJson(game, cert);
    c["representative"] = io::ProfileToJson(Representative(cert));
    certs.push_back(std::move(c));
  }
  j["certs"] = std::move(certs);
  Emit(out, j);
  return scan.certs.empty() ? kExitNotSolved : kExitOk;
}

int RunVolumeCheck(const CommonArgs& common, int m, int intervals,
                   const std::string& csv_path, std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, NumericMode::kRational);
  VolumePolynomial volume = TotalVolumePolynomial(game, m);
  std::vector<PreEquilibriumCert> certs = FindPreEquilibria(game, {m});
  bool certified = !volume.nonzero_at_one.empty();
  for (int cell : volume.nonzero_at_one) {
    bool found = false;
    for (const auto& cert : certs) {
      found = found || cert.cell.index == static_cast<std::uint64_t>(cell);
    }
    certified = certified && found;
  }
  const bool sampled = SampleCheck(game, volume);

  Json j = Json::object();
  j["resolution"] = m;
  Json coefficients = Json::array();
  for (const Scalar& c : volume.total.coefficients()) {
    coefficients.push_back(io::ScalarToJson(c));
  }
  j["coefficients"] = std::move(coefficients);
  j["constant"] = volume.constant;
  j["g0"] = io::ScalarToJson(volume.total.Evaluate(Scalar::Integer(0)));
  j["g1"] = io::ScalarToJson(volume.total.Evaluate(Scalar::Integer(1)));
  j["sample_check"] = sampled;
  j["nonzero_at_one"] = volume.nonzero_at_one;
  j["certified"] = certified;
  if (!csv_path.empty()) {
    std::ostringstream csv;
    io::WriteVolumeCsv(csv, game, volume, intervals);
    WriteFile(csv_path, csv.str());
  }
  Emit(out, j);
  return volume.constant && certified && sampled ? kExitOk : kExitNotSolved;
}

int RunOracle(const CommonArgs& common, int m, std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, ModeOf(common));
  oracle::OracleResult grid = oracle::GridMinRegret(game, m);
  Json j = Json::object();
  Json g = Json::object();
  g["method"] = oracle::MethodName(grid.method);
  g["resolution"] = m;
  g["profile"] = io::ProfileToJson(grid.profile);
  g["max_regret"] = io::ScalarToJson(grid.max_regret);
  j["grid"] = std::move(g);
  if (game.num_players() == 2 && game.mode() == NumericMode::kRational) {
    oracle::SupportEnumerationResult support =
        oracle::SupportEnumeration(game);
    Json s = Json::object();
    s["method"] = oracle::MethodName(oracle::Method::kSupportEnumeration);
    s["degenerate"] = support.degenerate;
    Json equilibria = Json::array();
    for (const MixedProfile& sigma : support.equilibria) {
      equilibria.push_back(io::ProfileToJson(sigma));
    }
    s["equilibria"] = std::move(equilibria);
    j["support_enumeration"] = std::move(s);
  }
  Emit(out, j);
  return kExitOk;
}

int RunVerify(const CommonArgs& common, const std::string& profile_text,
              const std::string& eps_text, std::ostream& out) {
  Game game = io::ParseGameFile(common.game_path, ModeOf(common));
  MixedProfile sigma = io::ParseProfileText(profile_text, game);
  oracle::Verification v =
      oracle::VerifyProfile(game, sigma, ParseScalar(eps_text, game.mode()));
  Json j = Json::object();
  j["equilibrium"] = v.equilibrium;
  j["max_regret"] = io::ScalarToJson(v.max_regret);
  j["gain_table"] = io::GainTableToJson(v.table);
  Emit(out, j);
  return v.equilibrium ? kExitOk : kExitNotSolved;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Equilibrium search over completely labeled product cells",
               "nashcell"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string eps = "1/10";
  std::string profile;
  std::string out_path;
  std::string csv_path;
  int m0 = 2;
  int factor = 2;
  int max_stages = 6;
  int intervals = 10;
  int m = 2;
  std::vector<int> ms;

  CLI::App* solve = app.add_subcommand("solve", "Refine until eps-equilibrium");
  AddCommon(solve, common);
  solve->add_option("--eps", eps, "Target max regret (p/q or decimal)");
  solve->add_option("--m0", m0, "Initial resolution")->check(CLI::PositiveNumber);
  solve->add_option("--factor", factor, "Refinement factor")
      ->check(CLI::Range(2, 1 << 20));
  solve->add_option("--max-stages", max_stages, "Stage limit")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", out_path, "Write the report (with timings)");
  solve->add_option("--threads", common.threads, "Scan threads, 0 = all");

  CLI::App* eval = app.add_subcommand("eval", "Gain table and root label");
  AddCommon(eval, common);
  eval->add_option("--profile", profile, "[[...],[...]]")->required();

  CLI::App* cells = app.add_subcommand("cells", "List pre-equilibrium cells");
  AddCommon(cells, common);
  cells->add_option("--m", ms, "Resolution (one value, or one per player)")
      ->required();
  cells->add_option("--threads", common.threads, "Scan threads, 0 = all");

  CLI::App* volume =
      app.add_subcommand("volume-check", "Root-motion volume polynomial");
  volume->add_option("game", common.game_path, "1-player game JSON")
      ->required();
  volume->add_option("--m", m, "Resolution")->check(CLI::PositiveNumber);
  volume->add_option("--samples-out", csv_path, "CSV of sampled volumes");
  volume->add_option("--intervals", intervals, "Sample intervals in [0,1]")
      ->check(CLI::PositiveNumber);

  CLI::App* grid = app.add_subcommand("oracle", "Grid and support oracles");
  AddCommon(grid, common);
  grid->add_option("--m", m, "Grid resolution")->check(CLI::PositiveNumber);

  CLI::App* verify = app.add_subcommand("verify", "Check a profile");
  AddCommon(verify, common);
  verify->add_option("--profile", profile, "[[...],[...]]")->required();
  verify->add_option("--eps", eps, "Allowed max regret")->default_val("0");

  std::vector<const char*> argv = {"nashcell"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Emit(out, ErrorJson("UsageError", e.what()));
    return kExitInputError;
  }

  try {
    if (*solve) {
      return RunSolve(common, eps, m0, factor, max_stages, out_path, out);
    }
    if (*eval) return RunEval(common, profile, out);
    if (*cells) {
      for (int v : ms) {
        if (v < 1) {
          throw NashError(ErrorCode::kResolutionZero,
                          "resolution must be >= 1");
        }
      }
      return RunCells(common, ms, out);
    }
    if (*volume) return RunVolumeCheck(common, m, intervals, csv_path, out);
    if (*grid) return RunOracle(common, m, out);
    if (*verify) return RunVerify(common, profile, eps, out);
  } catch (const NashError& e) {
    Emit(out, ErrorJson(ErrorCodeName(e.code()), e.what()));
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace nashcell
