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

#ifndef NASHCELL_LINEAR_ALGEBRA_H_
#define NASHCELL_LINEAR_ALGEBRA_H_

#include <vector>

#include "nashcell/scalar.h"

namespace nashcell {

using Matrix = std::vector<std::vector<Scalar>>;

// Gaussian elimination; exact for rational entries.
Scalar Determinant(Matrix a);

struct LinearSolution {
  enum class Kind { kUnique, kUnderdetermined, kInconsistent };
  Kind kind = Kind::kInconsistent;
  // For kUnderdetermined, the solution with every free variable set to 0.
  std::vector<Scalar> x;
};

// Solves a x = b for a rectangular a (rows = equations) by reduction to
// reduced row echelon form.
LinearSolution SolveLinearSystem(Matrix a, std::vector<Scalar> b);

}  // namespace nashcell

#endif  // NASHCELL_LINEAR_ALGEBRA_H_
