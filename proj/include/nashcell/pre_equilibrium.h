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

#ifndef NASHCELL_PRE_EQUILIBRIUM_H_
#define NASHCELL_PRE_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"
#include "nashcell/subdivision.h"

namespace nashcell {

// A completely labeled product cell: the root labels of its vertex profiles
// hit every pure profile exactly once.
struct PreEquilibriumCert {
  ProductCell cell;
  // labels[k] is the root label of cell.vertex_profiles[k].
  std::vector<PureProfile> labels;
};

enum class CellCase { kSomePlayerNotUp, kPlayerUpEverywhere };

std::string_view CellCaseName(CellCase c);

struct CellClassification {
  CellCase kind = CellCase::kSomePlayerNotUp;
  // kPlayerUpEverywhere: the lowest player that is up at every vertex.
  int player = -1;
  // kSomePlayerNotUp: per player, the first vertex profile (index into the
  // cell's vertex_profiles) where that player is not up.
  std::vector<int> witnesses;
};

struct ScanOptions {
  std::uint64_t vertex_budget = DefaultVertexBudget();
  // Worker threads for labeling and scanning; 0 picks hardware concurrency.
  // Results do not depend on this.
  int threads = 1;
};

struct ScanResult {
  std::vector<PreEquilibriumCert> certs;
  std::uint64_t cells_scanned = 0;
  std::uint64_t vertex_profiles_labeled = 0;
};

// Labels every vertex profile once, then returns all completely labeled
// cells in canonical cell order. An empty list is a valid outcome.
ScanResult ScanPreEquilibria(const Game& game,
                             const std::vector<int>& resolutions,
                             const ScanOptions& options = {});

std::vector<PreEquilibriumCert> FindPreEquilibria(
    const Game& game, const std::vector<int>& resolutions,
    const ScanOptions& options = {});

CellClassification ClassifyCell(const Game& game, const ProductCell& cell);

// Barycenter of the cell's vertex profiles.
MixedProfile Representative(const PreEquilibriumCert& cert);

struct SolveOptions {
  Scalar eps = Scalar::Ratio(1, 10);
  int m0 = 2;
  int refine_factor = 2;
  int max_stages = 6;
  ScanOptions scan;
};

struct StageRecord {
  std::vector<int> resolutions;
  std::uint64_t cells_scanned = 0;
  std::uint64_t pre_equilibria_found = 0;
  // Empty when the stage found no certificate.
  std::optional<PreEquilibriumCert> chosen;
  CellClassification classification;
  MixedProfile representative;
  Scalar t_value;
  Scalar max_regret;
  Scalar diameter_squared;
  double diameter = 0.0;
  double seconds = 0.0;
};

enum class SolveStatus {
  kConverged,
  kNotConverged,
  kNoPreEquilibriumFound,
  kBudgetExceeded,
};

std::string_view SolveStatusName(SolveStatus status);

struct SolveReport {
  std::vector<StageRecord> stages;
  SolveStatus status = SolveStatus::kNotConverged;
  // Last representative found; empty if no stage had a certificate.
  std::optional<MixedProfile> final_profile;
  Scalar final_max_regret;
  bool converged = false;
  std::string message;
};

// Refines m = m0, m0 f, m0 f^2, ... For each stage the certificate whose
// barycenter has the smallest T (first in cell order on ties) is kept, and
// the loop stops once its max regret is <= eps. A stage without any
// certificate is recorded and refined past. Never throws for missing
// certificates or an exhausted budget; see SolveReport::status.
SolveReport Solve(const Game& game, const SolveOptions& options);

}  // namespace nashcell

#endif  // NASHCELL_PRE_EQUILIBRIUM_H_
