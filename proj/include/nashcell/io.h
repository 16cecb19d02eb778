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

#ifndef NASHCELL_IO_H_
#define NASHCELL_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "nashcell/game.h"
#include "nashcell/oracle.h"
#include "nashcell/pre_equilibrium.h"
#include "nashcell/scalar.h"
#include "nashcell/volume.h"

namespace nashcell::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "nashcell";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Rationals become "p/q" (or "p") strings, doubles JSON numbers.
Json ScalarToJson(const Scalar& v);
// Accepts integers, decimal strings and "p/q" strings; JSON floating-point
// numbers only in float mode. `field` names the location for error messages.
Scalar ScalarFromJson(const Json& j, NumericMode mode, std::string_view field);

// Game file:
//   {"name": "...", "players": n, "strategies": [["H","T"], ...],
//    "payoffs": [[...], ...]}
// Each payoff tensor is flattened row-major, last player fastest.
Game ParseGame(const Json& j, NumericMode mode = NumericMode::kRational);
Game ParseGameText(std::string_view text,
                   NumericMode mode = NumericMode::kRational);
Game ParseGameFile(const std::string& path,
                   NumericMode mode = NumericMode::kRational);
Json GameToJson(const Game& game);

// [[p_11, p_12, ...], [p_21, ...], ...]
MixedProfile ParseProfile(const Json& j, const Game& game);
MixedProfile ParseProfileText(std::string_view text, const Game& game);
Json ProfileToJson(const MixedProfile& sigma);

Json PureProfileToJson(const Game& game, const PureProfile& s);
Json GainTableToJson(const GainTable& table);
Json CertToJson(const Game& game, const PreEquilibriumCert& cert);

struct ReportContext {
  SolveOptions options;
  // Wall-clock seconds per stage are only written when set.
  bool include_timing = false;
};

Json SolveReportToJson(const Game& game, const SolveReport& report,
                       const ReportContext& context);

// Final profile and regret read back from a report.
struct ReportFinal {
  std::optional<MixedProfile> profile;
  Scalar max_regret;
  bool converged = false;
};
ReportFinal ParseReportFinal(const Json& report, const Game& game);

// Rows "t,g_total,cell_index,cell_value", one per (sample, cell), t = k/K
// for k = 0..K.
void WriteVolumeCsv(std::ostream& out, const Game& game,
                    const VolumePolynomial& volume, int intervals);

}  // namespace nashcell::io

#endif  // NASHCELL_IO_H_
