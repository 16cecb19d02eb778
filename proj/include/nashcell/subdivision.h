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

#ifndef NASHCELL_SUBDIVISION_H_
#define NASHCELL_SUBDIVISION_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"

namespace nashcell {

inline constexpr std::uint64_t kDefaultVertexBudget = 10'000'000;

// kDefaultVertexBudget unless the NASH_BUDGET environment variable holds a
// positive integer.
std::uint64_t DefaultVertexBudget();

// Freudenthal (Kuhn) subdivision of the standard d-simplex into m^d cells
// whose vertices are the points with coordinates k/m.
//
// Vertices are stored as barycentric numerators (k_0, ..., k_d), sum m, in
// ascending lexicographic order. Each cell lists its d + 1 vertex indices in
// ascending order; cells are sorted lexicographically by that list.
struct Triangulation {
  int dim = 0;
  int resolution = 1;
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> cells;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_cells() const { return static_cast<int>(cells.size()); }
  std::vector<Scalar> Barycentric(int vertex, NumericMode mode) const;
  // Index of the vertex with these numerators, or -1.
  int VertexIndex(const std::vector<int>& numerators) const;
};

// Throws kResolutionZero when resolution < 1 and kParameterOutOfRange when
// dim < 0.
Triangulation Triangulate(int dim, int resolution);

// Signed normalized volume of a cell: the determinant of its barycentric
// vertex rows, so the whole simplex has volume 1 and every cell +-1/m^d.
Scalar CellVolume(const Triangulation& tri, int cell);

// F_1 x ... x F_n, one triangulation cell per player, together with the
// prod_j |S_j| profiles formed by choosing one vertex per factor. Vertex
// profiles are ordered lexicographically by local vertex position with the
// last player varying fastest.
struct ProductCell {
  std::uint64_t index = 0;
  std::vector<int> factor;
  std::vector<MixedProfile> vertex_profiles;
};

// The product subdivision of a game's strategy space at per-player
// resolutions. Cells are indexed lexicographically by factor, last player
// fastest.
class ProductSubdivision {
 public:
  // Throws kResolutionZero, kDimensionMismatch, or kBudgetExceeded when the
  // number of distinct vertex profiles exceeds `vertex_budget`.
  ProductSubdivision(const Game& game, std::vector<int> resolutions,
                     std::uint64_t vertex_budget = DefaultVertexBudget());

  int num_players() const { return static_cast<int>(factors_.size()); }
  const std::vector<int>& resolutions() const { return resolutions_; }
  const Triangulation& factor(int player) const { return factors_[player]; }
  NumericMode mode() const { return mode_; }

  std::uint64_t num_cells() const { return num_cells_; }
  std::uint64_t num_vertex_profiles() const { return num_vertex_profiles_; }
  // prod_j (d_j + 1) == prod_j |S_j|.
  int vertices_per_cell() const { return vertices_per_cell_; }

  std::vector<int> CellFactors(std::uint64_t cell) const;
  ProductCell Cell(std::uint64_t cell) const;

  // Global vertex-profile index from one triangulation vertex per player.
  std::uint64_t VertexProfileIndex(std::span<const int> vertex) const;
  std::vector<int> VertexProfileVertices(std::uint64_t index) const;
  MixedProfile VertexProfile(std::uint64_t index) const;

  // Global vertex-profile indices of a cell, in ProductCell order.
  void CellVertexProfiles(std::span<const int> factors,
                          std::vector<std::uint64_t>& out) const;

 private:
  std::vector<int> resolutions_;
  std::vector<Triangulation> factors_;
  NumericMode mode_;
  std::uint64_t num_cells_ = 1;
  std::uint64_t num_vertex_profiles_ = 1;
  int vertices_per_cell_ = 1;
};

// Visits every product cell in canonical order.
void ForEachProductCell(const Game& game, const std::vector<int>& resolutions,
                        const std::function<void(const ProductCell&)>& visit);

// Squared Euclidean diameter in the concatenated-coordinate embedding, exact.
Scalar CellDiameterSquared(const ProductCell& cell);
double CellDiameter(const ProductCell& cell);

}  // namespace nashcell

#endif  // NASHCELL_SUBDIVISION_H_
