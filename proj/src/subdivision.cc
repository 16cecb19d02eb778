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

#include "nashcell/subdivision.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "nashcell/errors.h"
#include "nashcell/linear_algebra.h"

namespace nashcell {
namespace {

// All (k_0, ..., k_dim) >= 0 with sum m, ascending lexicographic.
void Compositions(int dim, int m, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == dim) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = 0; k <= m; ++k) {
    prefix.push_back(k);
    Compositions(dim, m - k, prefix, out);
    prefix.pop_back();
  }
}

// Staircase point m >= y_1 >= ... >= y_d >= 0 to barycentric numerators.
std::vector<int> ToNumerators(const std::vector<int>& y, int m) {
  const int d = static_cast<int>(y.size());
  std::vector<int> k(d + 1);
  k[0] = m - y[0];
  for (int l = 1; l < d; ++l) k[l] = y[l - 1] - y[l];
  k[d] = y[d - 1];
  return k;
}

bool InStaircase(const std::vector<int>& y, int m) {
  if (y.front() > m || y.back() < 0) return false;
  for (std::size_t l = 1; l < y.size(); ++l) {
    if (y[l - 1] < y[l]) return false;
  }
  return true;
}

std::uint64_t SaturatingMultiply(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::uint64_t DefaultVertexBudget() {
  if (const char* env = std::getenv("NASH_BUDGET")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultVertexBudget;
}

std::vector<Scalar> Triangulation::Barycentric(int vertex,
                                               NumericMode mode) const {
  std::vector<Scalar> point;
  for (int k : vertices[vertex]) {
    point.push_back(Scalar::Ratio(k, resolution, mode));
  }
  return point;
}

int Triangulation::VertexIndex(const std::vector<int>& numerators) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), numerators);
  if (it == vertices.end() || *it != numerators) return -1;
  return static_cast<int>(it - vertices.begin());
}

Triangulation Triangulate(int dim, int resolution) {
  if (resolution < 1) {
    throw NashError(ErrorCode::kResolutionZero, "resolution must be >= 1");
  }
  if (dim < 0) {
    throw NashError(ErrorCode::kParameterOutOfRange, "dimension must be >= 0");
  }
  Triangulation tri;
  tri.dim = dim;
  tri.resolution = resolution;
  std::vector<int> prefix;
  Compositions(dim, resolution, prefix, tri.vertices);
  if (dim == 0) {
    tri.cells.push_back({0});
    return tri;
  }

  // Kuhn simplices of the cube grid [0, m]^d: base corner b and a permutation
  // giving the order in which unit steps are taken. Keep those inside the
  // staircase region, which is a union of such simplices.
  std::vector<int> base(dim, 0);
  std::vector<int> order(dim);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<int> y = base;
      std::vector<int> cell;
      bool inside = InStaircase(y, resolution);
      if (inside) cell.push_back(tri.VertexIndex(ToNumerators(y, resolution)));
      for (int step = 0; step < dim && inside; ++step) {
        ++y[order[step]];
        inside = InStaircase(y, resolution);
        if (inside) {
          cell.push_back(tri.VertexIndex(ToNumerators(y, resolution)));
        }
      }
      if (inside) {
        std::sort(cell.begin(), cell.end());
        tri.cells.push_back(std::move(cell));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    int k = dim - 1;
    while (k >= 0 && ++base[k] == resolution) base[k--] = 0;
    if (k < 0) break;
  }
  std::sort(tri.cells.begin(), tri.cells.end());
  return tri;
}

Scalar CellVolume(const Triangulation& tri, int cell) {
  Matrix rows;
  for (int v : tri.cells[cell]) {
    rows.push_back(tri.Barycentric(v, NumericMode::kRational));
  }
  return Determinant(std::move(rows));
}

ProductSubdivision::ProductSubdivision(const Game& game,
                                       std::vector<int> resolutions,
                                       std::uint64_t vertex_budget)
    : resolutions_(std::move(resolutions)), mode_(game.mode()) {
  if (static_cast<int>(resolutions_.size()) != game.num_players()) {
    throw NashError(ErrorCode::kDimensionMismatch,
                    "expected " + std::to_string(game.num_players()) +
                        " resolutions, got " +
                        std::to_string(resolutions_.size()));
  }
  for (int m : resolutions_) {
    if (m < 1) {
      throw NashError(ErrorCode::kResolutionZero, "resolution must be >= 1");
    }
  }
  // Count before building anything large.
  for (int i = 0; i < game.num_players(); ++i) {
    const int d = game.num_strategies(i) - 1;
    // C(m + d, d), computed incrementally to stay exact.
    std::uint64_t count = 1;
    for (int k = 1; k <= d; ++k) {
      count = SaturatingMultiply(count, resolutions_[i] + k);
      if (count != UINT64_MAX) count /= k;
    }
    num_vertex_profiles_ = SaturatingMultiply(num_vertex_profiles_, count);
  }
  if (num_vertex_profiles_ > vertex_budget) {
    throw NashError(ErrorCode::kBudgetExceeded,
                    "subdivision needs " +
                        (num_vertex_profiles_ == UINT64_MAX
                             ? std::string("more than 2^64")
                             : std::to_string(num_vertex_profiles_)) +
                        " vertex profiles, budget is " +
                        std::to_string(vertex_budget));
  }
  for (int i = 0; i < game.num_players(); ++i) {
    factors_.push_back(Triangulate(game.num_strategies(i) - 1,
                                   resolutions_[i]));
    num_cells_ *= factors_.back().num_cells();
    vertices_per_cell_ *= factors_.back().dim + 1;
  }
}

std::vector<int> ProductSubdivision::CellFactors(std::uint64_t cell) const {
  std::vector<int> factors(num_players());
  for (int i = num_players() - 1; i >= 0; --i) {
    factors[i] = static_cast<int>(cell % factors_[i].num_cells());
    cell /= factors_[i].num_cells();
  }
  return factors;
}

ProductCell ProductSubdivision::Cell(std::uint64_t cell) const {
  if (cell >= num_cells_) {
    throw NashError(ErrorCode::kIndexOutOfRange, "no such product cell");
  }
  ProductCell result;
  result.index = cell;
  result.factor = CellFactors(cell);
  std::vector<std::uint64_t> profiles;
  CellVertexProfiles(result.factor, profiles);
  for (std::uint64_t p : profiles) {
    result.vertex_profiles.push_back(VertexProfile(p));
  }
  return result;
}

std::uint64_t ProductSubdivision::VertexProfileIndex(
    std::span<const int> vertex) const {
  std::uint64_t index = 0;
  for (int i = 0; i < num_players(); ++i) {
    index = index * factors_[i].num_vertices() + vertex[i];
  }
  return index;
}

std::vector<int> ProductSubdivision::VertexProfileVertices(
    std::uint64_t index) const {
  std::vector<int> vertex(num_players());
  for (int i = num_players() - 1; i >= 0; --i) {
    vertex[i] = static_cast<int>(index % factors_[i].num_vertices());
    index /= factors_[i].num_vertices();
  }
  return vertex;
}

MixedProfile ProductSubdivision::VertexProfile(std::uint64_t index) const {
  std::vector<int> vertex = VertexProfileVertices(index);
  MixedProfile sigma;
  for (int i = 0; i < num_players(); ++i) {
    sigma.dist.push_back(factors_[i].Barycentric(vertex[i], mode_));
  }
  return sigma;
}

void ProductSubdivision::CellVertexProfiles(
    std::span<const int> factors, std::vector<std::uint64_t>& out) const {
  out.assign(1, 0);
  for (int i = 0; i < num_players(); ++i) {
    const auto& cell = factors_[i].cells[factors[i]];
    const std::uint64_t radix = factors_[i].num_vertices();
    std::vector<std::uint64_t> next;
    next.reserve(out.size() * cell.size());
    for (std::uint64_t prefix : out) {
      for (int v : cell) next.push_back(prefix * radix + v);
    }
    out = std::move(next);
  }
}

void ForEachProductCell(const Game& game, const std::vector<int>& resolutions,
                        const std::function<void(const ProductCell&)>& visit) {
  ProductSubdivision subdivision(game, resolutions);
  for (std::uint64_t c = 0; c < subdivision.num_cells(); ++c) {
    visit(subdivision.Cell(c));
  }
}

Scalar CellDiameterSquared(const ProductCell& cell) {
  const auto& profiles = cell.vertex_profiles;
  Scalar best;
  if (!profiles.empty()) best = Scalar::Zero(profiles[0].dist[0][0].mode());
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    for (std::size_t b = a + 1; b < profiles.size(); ++b) {
      Scalar sq = Scalar::Zero(best.mode());
      for (int i = 0; i < profiles[a].num_players(); ++i) {
        for (std::size_t s = 0; s < profiles[a].dist[i].size(); ++s) {
          Scalar diff = profiles[a].dist[i][s] - profiles[b].dist[i][s];
          sq += diff * diff;
        }
      }
      best = Max(best, sq);
    }
  }
  return best;
}

double CellDiameter(const ProductCell& cell) {
  return std::sqrt(CellDiameterSquared(cell).ToDouble());
}

}  // namespace nashcell
