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

#ifndef NASHCELL_ORACLE_H_
#define NASHCELL_ORACLE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"
#include "nashcell/subdivision.h"

// Ground-truth checks that share nothing with the root-function search
// beyond payoff evaluation.
namespace nashcell::oracle {

enum class Method { kGrid, kSupportEnumeration };

std::string_view MethodName(Method method);

struct OracleResult {
  MixedProfile profile;
  Scalar max_regret;
  Method method = Method::kGrid;
};

// Exhaustive minimum of MaxRegret over every profile whose player-j
// coordinates are multiples of 1/m. The first minimizer in lexicographic
// order wins. Throws kBudgetExceeded when the lattice has more profiles than
// `budget`.
OracleResult GridMinRegret(const Game& game, int resolution,
                           std::uint64_t budget = DefaultVertexBudget());

struct SupportEnumerationResult {
  // Sorted, without duplicates.
  std::vector<MixedProfile> equilibria;
  // Set when some support pair had a continuum of solutions; only one
  // representative per such pair is returned.
  bool degenerate = false;
};

// Exact equilibria of a bimatrix game by solving the indifference system of
// every pair of supports. Throws kNotTwoPlayer or kModeMismatch (float mode).
SupportEnumerationResult SupportEnumeration(const Game& game);

struct Verification {
  bool equilibrium = false;
  Scalar max_regret;
  GainTable table;
};

// Recomputes the gain table from scratch. Throws kNegativeEpsilon.
Verification VerifyProfile(const Game& game, const MixedProfile& sigma,
                           const Scalar& eps);

}  // namespace nashcell::oracle

#endif  // NASHCELL_ORACLE_H_
