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

#ifndef NASHCELL_ROOT_FUNCTION_H_
#define NASHCELL_ROOT_FUNCTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"

namespace nashcell {

// The canonical root function: for each player, the strategy in the support
// of sigma_i whose deviation payoff f_i(sigma(i, s)) is smallest, ties to the
// lowest index. The minimum over the support never exceeds the
// support-weighted average f_i(sigma), so the chosen strategy has zero gain.
//
// Support means p > 0 in rational mode and p > kFloatTolerance in float mode.
// Throws kEmptySupport if some distribution has no support (only possible for
// an invalid profile that slipped past validation).
PureProfile RootLabel(const Game& game, const MixedProfile& sigma);

// Root motion h(sigma, t): per player, (1 - t) * sigma_i + t * e_{r_i(sigma)}.
// Throws kParameterOutOfRange unless 0 <= t <= 1.
MixedProfile RootMotion(const Game& game, const MixedProfile& sigma,
                        const Scalar& t);

// Re-derives the label and checks that each component lies in the support
// with zero gain, and that the label puts no mass outside supp(sigma_i).
bool CheckRootProperties(const Game& game, const MixedProfile& sigma);

// Exact integer evaluation of RootLabel at lattice profiles, i.e. profiles
// whose player-j coordinates are k / m_j. Each player's payoffs are scaled
// to integers by a positive factor, which leaves the argmin unchanged.
class LatticeLabeler {
 public:
  // Returns std::nullopt if the game is in float mode or the scaled payoffs
  // do not fit the integer fast path for these resolutions.
  static std::optional<LatticeLabeler> Create(const Game& game,
                                              std::span<const int> resolutions);

  // numerators[j] holds player j's coordinates times m_j. Writes one strategy
  // index per player to `label`.
  void Label(std::span<const std::span<const int>> numerators,
             std::span<int> label) const;

 private:
  LatticeLabeler() = default;

  std::vector<int> shape_;
  std::vector<std::vector<std::int64_t>> scaled_;
};

}  // namespace nashcell

#endif  // NASHCELL_ROOT_FUNCTION_H_
