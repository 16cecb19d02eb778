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

#include "nashcell/linear_algebra.h"

#include <utility>

namespace nashcell {

Scalar Determinant(Matrix a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Scalar::Integer(1);
  Scalar det = Scalar::One(a[0][0].mode());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col].IsZero()) ++pivot;
    if (pivot == n) return Scalar::Zero(det.mode());
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int row = col + 1; row < n; ++row) {
      if (a[row][col].IsZero()) continue;
      Scalar factor = a[row][col] / a[col][col];
      for (int k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

LinearSolution SolveLinearSystem(Matrix a, std::vector<Scalar> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  NumericMode mode =
      rows == 0 || cols == 0 ? NumericMode::kRational : a[0][0].mode();
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = rank;
    while (pivot < rows && a[pivot][col].IsZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);
    Scalar inv = Scalar::One(mode) / a[rank][col];
    for (int k = col; k < cols; ++k) a[rank][k] *= inv;
    b[rank] *= inv;
    for (int row = 0; row < rows; ++row) {
      if (row == rank || a[row][col].IsZero()) continue;
      Scalar factor = a[row][col];
      for (int k = col; k < cols; ++k) a[row][k] -= factor * a[rank][k];
      b[row] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  LinearSolution solution;
  for (int row = rank; row < rows; ++row) {
    if (!b[row].IsZero()) return solution;
  }
  solution.x.assign(cols, Scalar::Zero(mode));
  for (int r = 0; r < rank; ++r) solution.x[pivot_col[r]] = b[r];
  solution.kind = rank == cols ? LinearSolution::Kind::kUnique
                               : LinearSolution::Kind::kUnderdetermined;
  return solution;
}

}  // namespace nashcell
