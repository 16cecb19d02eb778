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

#include "nashcell/io.h"

#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "nashcell/errors.h"

namespace nashcell::io {
namespace {

[[noreturn]] void FieldError(std::string_view field, const std::string& what) {
  throw NashError(ErrorCode::kParseError,
                  std::string(field) + ": " + what);
}

const Json& Member(const Json& j, const char* key) {
  if (!j.is_object()) FieldError("$", "expected an object");
  auto it = j.find(key);
  if (it == j.end()) FieldError(key, "missing field");
  return *it;
}

std::string Indexed(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw NashError(ErrorCode::kParseError,
                    "invalid JSON at byte " + std::to_string(e.byte) + ": " +
                        e.what());
  }
}

Json CellClassificationToJson(const CellClassification& c) {
  Json j = Json::object();
  j["case"] = CellCaseName(c.kind);
  if (c.kind == CellCase::kPlayerUpEverywhere) {
    j["player"] = c.player;
  } else {
    j["witnesses"] = c.witnesses;
  }
  return j;
}

}  // namespace

Json ScalarToJson(const Scalar& v) {
  if (v.is_rational()) return v.ToString();
  return v.ToDouble();
}

Scalar ScalarFromJson(const Json& j, NumericMode mode, std::string_view field) {
  std::string text;
  if (j.is_number_integer()) {
    text = j.dump();
  } else if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_float()) {
    if (mode == NumericMode::kRational) {
      FieldError(field,
                 "floating-point numbers are not accepted in rational mode; "
                 "write \"p/q\" or a decimal string");
    }
    return Scalar(j.get<double>());
  } else {
    FieldError(field, "expected a number or a numeric string");
  }
  try {
    return ParseScalar(text, mode);
  } catch (const NashError& e) {
    throw NashError(e.code(), std::string(field) + ": " + e.what());
  }
}

Game ParseGame(const Json& j, NumericMode mode) {
  std::string name;
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) FieldError("name", "expected a string");
    name = j["name"].get<std::string>();
  }
  const Json& players = Member(j, "players");
  if (!players.is_number_integer() || players.get<long>() < 1) {
    FieldError("players", "expected a positive integer");
  }
  const std::size_t n = players.get<std::size_t>();

  const Json& strategies = Member(j, "strategies");
  if (!strategies.is_array()) FieldError("strategies", "expected an array");
  if (strategies.size() != n) {
    throw NashError(ErrorCode::kShapeError,
                    "strategies: expected " + std::to_string(n) +
                        " lists, got " + std::to_string(strategies.size()));
  }
  std::vector<std::vector<std::string>> names;
  for (std::size_t i = 0; i < n; ++i) {
    const Json& list = strategies[i];
    std::string field = Indexed("strategies", i);
    if (!list.is_array()) FieldError(field, "expected an array");
    std::vector<std::string> player;
    for (std::size_t s = 0; s < list.size(); ++s) {
      if (!list[s].is_string()) {
        FieldError(Indexed(field, s), "expected a string");
      }
      player.push_back(list[s].get<std::string>());
    }
    names.push_back(std::move(player));
  }

  const Json& payoffs = Member(j, "payoffs");
  if (!payoffs.is_array()) FieldError("payoffs", "expected an array");
  std::vector<std::vector<Scalar>> tensors;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const Json& tensor = payoffs[i];
    std::string field = Indexed("payoffs", i);
    if (!tensor.is_array()) FieldError(field, "expected an array");
    std::vector<Scalar> values;
    for (std::size_t k = 0; k < tensor.size(); ++k) {
      values.push_back(ScalarFromJson(tensor[k], mode, Indexed(field, k)));
    }
    tensors.push_back(std::move(values));
  }
  return Game(std::move(name), std::move(names), std::move(tensors), mode);
}

Game ParseGameText(std::string_view text, NumericMode mode) {
  return ParseGame(ParseJsonText(text), mode);
}

Game ParseGameFile(const std::string& path, NumericMode mode) {
  std::ifstream in(path);
  if (!in) {
    throw NashError(ErrorCode::kParseError, "cannot read " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGameText(buffer.str(), mode);
  } catch (const NashError& e) {
    throw NashError(e.code(), path + ": " + e.what());
  }
}

Json GameToJson(const Game& game) {
  Json j = Json::object();
  j["name"] = game.name();
  j["players"] = game.num_players();
  Json strategies = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    strategies.push_back(game.strategy_names(i));
  }
  j["strategies"] = std::move(strategies);
  Json payoffs = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    Json tensor = Json::array();
    for (const Scalar& v : game.payoff_tensor(i)) {
      tensor.push_back(ScalarToJson(v));
    }
    payoffs.push_back(std::move(tensor));
  }
  j["payoffs"] = std::move(payoffs);
  return j;
}

MixedProfile ParseProfile(const Json& j, const Game& game) {
  if (!j.is_array()) FieldError("profile", "expected an array of arrays");
  MixedProfile sigma;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string field = Indexed("profile", i);
    if (!j[i].is_array()) FieldError(field, "expected an array");
    std::vector<Scalar> dist;
    for (std::size_t s = 0; s < j[i].size(); ++s) {
      dist.push_back(ScalarFromJson(j[i][s], game.mode(), Indexed(field, s)));
    }
    sigma.dist.push_back(std::move(dist));
  }
  ValidateProfile(game, sigma);
  return sigma;
}

MixedProfile ParseProfileText(std::string_view text, const Game& game) {
  return ParseProfile(ParseJsonText(text), game);
}

Json ProfileToJson(const MixedProfile& sigma) {
  Json j = Json::array();
  for (const auto& dist : sigma.dist) {
    Json row = Json::array();
    for (const Scalar& p : dist) row.push_back(ScalarToJson(p));
    j.push_back(std::move(row));
  }
  return j;
}

Json PureProfileToJson(const Game& game, const PureProfile& s) {
  Json j = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    j.push_back(game.strategy_names(i)[s.choice[i]]);
  }
  return j;
}

Json GainTableToJson(const GainTable& table) {
  Json j = Json::object();
  Json gains = Json::array();
  for (const auto& row : table.gains) {
    Json r = Json::array();
    for (const Scalar& g : row) r.push_back(ScalarToJson(g));
    gains.push_back(std::move(r));
  }
  j["gains"] = std::move(gains);
  Json best = Json::array();
  for (const Scalar& b : table.best) best.push_back(ScalarToJson(b));
  j["best"] = std::move(best);
  j["total"] = ScalarToJson(table.total);
  Json up = Json::array();
  for (bool u : table.up) up.push_back(u);
  j["up"] = std::move(up);
  return j;
}

Json CertToJson(const Game& game, const PreEquilibriumCert& cert) {
  Json j = Json::object();
  j["cell_index"] = cert.cell.index;
  j["factors"] = cert.cell.factor;
  Json vertices = Json::array();
  for (std::size_t k = 0; k < cert.labels.size(); ++k) {
    Json v = Json::object();
    v["profile"] = ProfileToJson(cert.cell.vertex_profiles[k]);
    v["label"] = PureProfileToJson(game, cert.labels[k]);
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

Json SolveReportToJson(const Game& game, const SolveReport& report,
                       const ReportContext& context) {
  Json j = Json::object();
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["mode"] = NumericModeName(game.mode());
  j["game"] = game.name();
  Json options = Json::object();
  options["eps"] = ScalarToJson(context.options.eps);
  options["m0"] = context.options.m0;
  options["refine_factor"] = context.options.refine_factor;
  options["max_stages"] = context.options.max_stages;
  options["vertex_budget"] = context.options.scan.vertex_budget;
  j["options"] = std::move(options);

  Json stages = Json::array();
  for (const StageRecord& stage : report.stages) {
    Json s = Json::object();
    s["resolutions"] = stage.resolutions;
    s["cells_scanned"] = stage.cells_scanned;
    s["pre_equilibria_found"] = stage.pre_equilibria_found;
    if (stage.chosen) {
      s["chosen_cell"] = CertToJson(game, *stage.chosen);
      s["classification"] = CellClassificationToJson(stage.classification);
      s["representative"] = ProfileToJson(stage.representative);
      s["T"] = ScalarToJson(stage.t_value);
      s["max_regret"] = ScalarToJson(stage.max_regret);
      s["diameter_squared"] = ScalarToJson(stage.diameter_squared);
      s["diameter"] = stage.diameter;
    } else {
      s["chosen_cell"] = nullptr;
    }
    if (context.include_timing) s["seconds"] = stage.seconds;
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);

  Json final_json = Json::object();
  final_json["status"] = SolveStatusName(report.status);
  final_json["converged"] = report.converged;
  if (report.final_profile) {
    final_json["profile"] = ProfileToJson(*report.final_profile);
    final_json["max_regret"] = ScalarToJson(report.final_max_regret);
  } else {
    final_json["profile"] = nullptr;
    final_json["max_regret"] = nullptr;
  }
  if (!report.message.empty()) final_json["message"] = report.message;
  j["final"] = std::move(final_json);
  return j;
}

ReportFinal ParseReportFinal(const Json& report, const Game& game) {
  const Json& final_json = Member(report, "final");
  ReportFinal result;
  const Json& converged = Member(final_json, "converged");
  if (!converged.is_boolean()) FieldError("final.converged", "expected bool");
  result.converged = converged.get<bool>();
  const Json& profile = Member(final_json, "profile");
  if (!profile.is_null()) {
    result.profile = ParseProfile(profile, game);
    result.max_regret = ScalarFromJson(Member(final_json, "max_regret"),
                                       game.mode(), "final.max_regret");
  }
  return result;
}

void WriteVolumeCsv(std::ostream& out, const Game& game,
                    const VolumePolynomial& volume, int intervals) {
  out << "t,g_total,cell_index,cell_value\n";
  const Triangulation& tri = volume.triangulation;
  for (int k = 0; k <= intervals; ++k) {
    Scalar t = Scalar::Ratio(k, intervals);
    std::string total = volume.total.Evaluate(t).ToString();
    for (int c = 0; c < tri.num_cells(); ++c) {
      out << t.ToString() << ',' << total << ',' << c << ','
          << MovedCellVolume(game, tri, c, t).ToString() << '\n';
    }
  }
}

}  // namespace nashcell::io
