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

#include "nashcell/pre_equilibrium.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <thread>
#include <utility>

#include "nashcell/errors.h"
#include "nashcell/root_function.h"

namespace nashcell {
namespace {

int WorkerCount(int requested, std::uint64_t work) {
  int threads = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(threads, 1);
  return static_cast<int>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(work, 1)));
}

// Runs body(begin, end, worker) over a contiguous split of [0, count).
void ParallelFor(
    std::uint64_t count, int workers,
    const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
  if (workers <= 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t begin = std::min(count, chunk * w);
    std::uint64_t end = std::min(count, begin + chunk);
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

using LabelIndex = std::uint32_t;

// Root label of every vertex profile, as a pure-profile index.
std::vector<LabelIndex> LabelVertexProfiles(
    const Game& game, const ProductSubdivision& subdivision, int workers) {
  std::vector<LabelIndex> labels(subdivision.num_vertex_profiles());
  std::optional<LatticeLabeler> lattice =
      LatticeLabeler::Create(game, subdivision.resolutions());
  const int n = game.num_players();
  ParallelFor(labels.size(), workers,
              [&](std::uint64_t begin, std::uint64_t end, int) {
                std::vector<int> label(n);
                std::vector<std::span<const int>> numerators(n);
                for (std::uint64_t p = begin; p < end; ++p) {
                  if (lattice) {
                    std::vector<int> vertex =
                        subdivision.VertexProfileVertices(p);
                    for (int i = 0; i < n; ++i) {
                      numerators[i] = subdivision.factor(i).vertices[vertex[i]];
                    }
                    lattice->Label(numerators, label);
                    labels[p] = static_cast<LabelIndex>(
                        game.ProfileIndex(PureProfile{label}));
                  } else {
                    labels[p] = static_cast<LabelIndex>(game.ProfileIndex(
                        RootLabel(game, subdivision.VertexProfile(p))));
                  }
                }
              });
  return labels;
}

Scalar BarycenterT(const Game& game, const PreEquilibriumCert& cert) {
  return ComputeGainTable(game, Representative(cert)).total;
}

}  // namespace

std::string_view CellCaseName(CellCase c) {
  return c == CellCase::kSomePlayerNotUp ? "SOME_PLAYER_NOT_UP"
                                         : "PLAYER_UP_EVERYWHERE";
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kNotConverged: return "not_converged";
    case SolveStatus::kNoPreEquilibriumFound: return "no_pre_equilibrium";
    case SolveStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

ScanResult ScanPreEquilibria(const Game& game,
                             const std::vector<int>& resolutions,
                             const ScanOptions& options) {
  ProductSubdivision subdivision(game, resolutions, options.vertex_budget);
  if (game.num_profiles() > std::numeric_limits<LabelIndex>::max()) {
    throw NashError(ErrorCode::kBudgetExceeded, "too many pure profiles");
  }
  const int label_workers =
      WorkerCount(options.threads, subdivision.num_vertex_profiles());
  std::vector<LabelIndex> labels =
      LabelVertexProfiles(game, subdivision, label_workers);

  const std::uint64_t cells = subdivision.num_cells();
  const int workers = WorkerCount(options.threads, cells);
  std::vector<std::vector<std::uint64_t>> found(workers);
  ParallelFor(cells, workers,
              [&](std::uint64_t begin, std::uint64_t end, int worker) {
                // seen[s] == stamp marks label s as used in the current cell.
                std::vector<std::uint64_t> seen(game.num_profiles(), 0);
                std::vector<std::uint64_t> profiles;
                for (std::uint64_t c = begin; c < end; ++c) {
                  const std::uint64_t stamp = c + 1;
                  subdivision.CellVertexProfiles(subdivision.CellFactors(c),
                                                 profiles);
                  bool complete = true;
                  for (std::uint64_t p : profiles) {
                    LabelIndex s = labels[p];
                    if (seen[s] == stamp) {
                      complete = false;
                      break;
                    }
                    seen[s] = stamp;
                  }
                  if (complete) found[worker].push_back(c);
                }
              });

  ScanResult result;
  result.cells_scanned = cells;
  result.vertex_profiles_labeled = labels.size();
  for (const auto& chunk : found) {
    for (std::uint64_t c : chunk) {
      PreEquilibriumCert cert;
      cert.cell = subdivision.Cell(c);
      std::vector<std::uint64_t> profiles;
      subdivision.CellVertexProfiles(cert.cell.factor, profiles);
      for (std::uint64_t p : profiles) {
        cert.labels.push_back(game.ProfileAt(labels[p]));
      }
      result.certs.push_back(std::move(cert));
    }
  }
  return result;
}

std::vector<PreEquilibriumCert> FindPreEquilibria(
    const Game& game, const std::vector<int>& resolutions,
    const ScanOptions& options) {
  return ScanPreEquilibria(game, resolutions, options).certs;
}

CellClassification ClassifyCell(const Game& game, const ProductCell& cell) {
  const int n = game.num_players();
  std::vector<GainTable> tables;
  for (const MixedProfile& sigma : cell.vertex_profiles) {
    tables.push_back(ComputeGainTable(game, sigma));
  }
  CellClassification result;
  for (int i = 0; i < n; ++i) {
    bool everywhere = std::all_of(tables.begin(), tables.end(),
                                  [i](const GainTable& t) { return t.up[i]; });
    if (everywhere) {
      result.kind = CellCase::kPlayerUpEverywhere;
      result.player = i;
      return result;
    }
  }
  result.kind = CellCase::kSomePlayerNotUp;
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < tables.size(); ++k) {
      if (!tables[k].up[i]) {
        result.witnesses.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  return result;
}

MixedProfile Representative(const PreEquilibriumCert& cert) {
  const auto& profiles = cert.cell.vertex_profiles;
  MixedProfile center = profiles.front();
  for (std::size_t k = 1; k < profiles.size(); ++k) {
    for (int i = 0; i < center.num_players(); ++i) {
      for (std::size_t s = 0; s < center.dist[i].size(); ++s) {
        center.dist[i][s] += profiles[k].dist[i][s];
      }
    }
  }
  const Scalar count = Scalar::Integer(static_cast<long>(profiles.size()),
                                       center.dist[0][0].mode());
  for (auto& dist : center.dist) {
    for (Scalar& p : dist) p /= count;
  }
  return center;
}

SolveReport Solve(const Game& game, const SolveOptions& options) {
  if (options.eps.Sign() < 0) {
    throw NashError(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  if (options.m0 < 1) {
    throw NashError(ErrorCode::kResolutionZero, "m0 must be >= 1");
  }
  if (options.refine_factor < 2) {
    throw NashError(ErrorCode::kParameterOutOfRange,
                    "refinement factor must be >= 2");
  }
  if (options.max_stages < 1) {
    throw NashError(ErrorCode::kParameterOutOfRange,
                    "max_stages must be >= 1");
  }
  const Scalar eps = options.eps.As(game.mode());

  SolveReport report;
  report.final_max_regret = Scalar::Zero(game.mode());
  long m = options.m0;
  for (int stage = 0; stage < options.max_stages; ++stage) {
    if (m > std::numeric_limits<int>::max()) {
      report.status = SolveStatus::kBudgetExceeded;
      report.message = "resolution overflow at stage " + std::to_string(stage);
      break;
    }
    const auto start = std::chrono::steady_clock::now();
    StageRecord record;
    record.resolutions.assign(game.num_players(), static_cast<int>(m));
    ScanResult scan;
    try {
      scan = ScanPreEquilibria(game, record.resolutions, options.scan);
    } catch (const NashError& e) {
      if (e.code() != ErrorCode::kBudgetExceeded) throw;
      report.status = SolveStatus::kBudgetExceeded;
      report.message = "stage " + std::to_string(stage) + ": " + e.what();
      break;
    }
    record.cells_scanned = scan.cells_scanned;
    record.pre_equilibria_found = scan.certs.size();
    if (scan.certs.empty()) {
      // Recorded, then refined past: only a subsequence of resolutions needs
      // to carry a certificate.
      record.seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      report.stages.push_back(std::move(record));
      m *= options.refine_factor;
      continue;
    }

    std::size_t best = 0;
    Scalar best_t = BarycenterT(game, scan.certs[0]);
    for (std::size_t k = 1; k < scan.certs.size(); ++k) {
      Scalar t = BarycenterT(game, scan.certs[k]);
      if (t < best_t) {
        best = k;
        best_t = std::move(t);
      }
    }
    PreEquilibriumCert& chosen = scan.certs[best];
    record.representative = Representative(chosen);
    record.t_value = best_t;
    record.max_regret = MaxRegret(game, record.representative);
    record.classification = ClassifyCell(game, chosen.cell);
    record.diameter_squared = CellDiameterSquared(chosen.cell);
    record.diameter = CellDiameter(chosen.cell);
    record.chosen = std::move(chosen);
    record.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    report.final_profile = record.representative;
    const bool done = record.max_regret <= eps;
    report.stages.push_back(std::move(record));
    if (done) {
      report.status = SolveStatus::kConverged;
      break;
    }
    m *= options.refine_factor;
  }
  if (report.status != SolveStatus::kConverged &&
      report.status != SolveStatus::kBudgetExceeded) {
    report.status = report.final_profile ? SolveStatus::kNotConverged
                                         : SolveStatus::kNoPreEquilibriumFound;
    if (!report.final_profile) {
      report.message = "no completely labeled cell at any of " +
                       std::to_string(report.stages.size()) + " stages";
    }
  }
  if (report.final_profile) {
    report.final_max_regret = MaxRegret(game, *report.final_profile);
  }
  report.converged = report.status == SolveStatus::kConverged;
  return report;
}

}  // namespace nashcell
