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

#include "nashcell/volume.h"

#include <utility>

#include "nashcell/errors.h"
#include "nashcell/linear_algebra.h"
#include "nashcell/root_function.h"

namespace nashcell {
namespace {

void RequireSinglePlayer(const Game& game) {
  if (game.num_players() != 1) {
    throw NashError(ErrorCode::kNotSinglePlayer,
                    "volume bookkeeping is implemented for 1-player games, "
                    "got " + std::to_string(game.num_players()));
  }
}

MixedProfile VertexProfile(const Triangulation& tri, int vertex) {
  return MixedProfile{{tri.Barycentric(vertex, NumericMode::kRational)}};
}

int Orientation(const Triangulation& tri, int cell) {
  return CellVolume(tri, cell).Sign();
}

// Laplace expansion along the first row.
Polynomial PolynomialDeterminant(
    const std::vector<std::vector<Polynomial>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::Constant(Scalar::Integer(1));
  if (n == 1) return a[0][0];
  Polynomial result;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t row = 1; row < n; ++row) {
      std::vector<Polynomial> r;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != col) r.push_back(a[row][k]);
      }
      minor.push_back(std::move(r));
    }
    Polynomial term = a[0][col] * PolynomialDeterminant(minor);
    result = col % 2 == 0 ? result + term : result - term;
  }
  return result;
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coefficients)
    : coefficients_(std::move(coefficients)) {
  Trim();
}

Polynomial Polynomial::Constant(Scalar c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::Affine(Scalar a, Scalar b) {
  return Polynomial({std::move(a), std::move(b)});
}

void Polynomial::Trim() {
  while (!coefficients_.empty() && coefficients_.back().IsZero()) {
    coefficients_.pop_back();
  }
}

Scalar Polynomial::Evaluate(const Scalar& t) const {
  Scalar value = Scalar::Zero(t.mode());
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(o.coefficients_.size(), Scalar::Integer(0));
  }
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) {
    coefficients_[k] += o.coefficients_[k];
  }
  Trim();
  return *this;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> negated;
  for (const Scalar& c : b.coefficients_) negated.push_back(-c);
  return a + Polynomial(std::move(negated));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coefficients_.empty() || b.coefficients_.empty()) return Polynomial();
  std::vector<Scalar> product(a.coefficients_.size() + b.coefficients_.size() -
                                  1,
                              Scalar::Integer(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      product[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(product));
}

Scalar MovedCellVolume(const Game& game, const Triangulation& tri, int cell,
                       const Scalar& t) {
  RequireSinglePlayer(game);
  Matrix rows;
  for (int v : tri.cells[cell]) {
    rows.push_back(RootMotion(game, VertexProfile(tri, v), t).dist[0]);
  }
  Scalar det = Determinant(std::move(rows));
  return Orientation(tri, cell) < 0 ? -det : det;
}

Polynomial MovedCellPolynomial(const Game& game, const Triangulation& tri,
                               int cell) {
  RequireSinglePlayer(game);
  const int d = tri.dim;
  const auto& vertices = tri.cells[cell];
  // Moved vertex k, coordinate c: (1 - t) v_kc + t [c == r(v_k)]
  //                              = v_kc + t ([c == r(v_k)] - v_kc).
  std::vector<std::vector<Polynomial>> moved;
  for (int v : vertices) {
    std::vector<Scalar> point = tri.Barycentric(v, NumericMode::kRational);
    int label = RootLabel(game, MixedProfile{{point}}).choice[0];
    std::vector<Polynomial> row;
    for (int c = 0; c <= d; ++c) {
      Scalar target = Scalar::Integer(c == label ? 1 : 0);
      row.push_back(Polynomial::Affine(point[c], target - point[c]));
    }
    moved.push_back(std::move(row));
  }
  // Edge vectors from the first moved vertex, dropping coordinate 0; the
  // determinant equals the normalized volume.
  std::vector<std::vector<Polynomial>> edges;
  for (int k = 1; k <= d; ++k) {
    std::vector<Polynomial> row;
    for (int c = 1; c <= d; ++c) row.push_back(moved[k][c] - moved[0][c]);
    edges.push_back(std::move(row));
  }
  Polynomial det = PolynomialDeterminant(edges);
  // The barycentric determinant expands along the first column to the
  // reduced edge determinant, so both have the same sign convention.
  if (Orientation(tri, cell) < 0) det = Polynomial() - det;
  return det;
}

VolumePolynomial TotalVolumePolynomial(const Game& game, int resolution) {
  RequireSinglePlayer(game);
  if (game.mode() != NumericMode::kRational) {
    throw NashError(ErrorCode::kModeMismatch,
                    "volume polynomials require rational mode");
  }
  VolumePolynomial result;
  result.triangulation = Triangulate(game.num_strategies(0) - 1, resolution);
  const Scalar one = Scalar::Integer(1);
  for (int c = 0; c < result.triangulation.num_cells(); ++c) {
    Polynomial p = MovedCellPolynomial(game, result.triangulation, c);
    if (!p.Evaluate(one).IsZero()) result.nonzero_at_one.push_back(c);
    result.total += p;
    result.per_cell.push_back(std::move(p));
  }
  result.constant = result.total.IsConstant();
  return result;
}

bool SampleCheck(const Game& game, const VolumePolynomial& volume) {
  const Triangulation& tri = volume.triangulation;
  const int samples = tri.dim + 2;
  for (int k = 0; k < samples; ++k) {
    Scalar t = Scalar::Ratio(k, samples - 1);
    Scalar direct = Scalar::Integer(0);
    for (int c = 0; c < tri.num_cells(); ++c) {
      Scalar cell = MovedCellVolume(game, tri, c, t);
      if (cell != volume.per_cell[c].Evaluate(t)) return false;
      direct += cell;
    }
    if (direct != volume.total.Evaluate(t)) return false;
  }
  return true;
}

}  // namespace nashcell
