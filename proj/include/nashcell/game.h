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

#ifndef NASHCELL_GAME_H_
#define NASHCELL_GAME_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nashcell/scalar.h"

namespace nashcell {

// One strategy index per player.
struct PureProfile {
  std::vector<int> choice;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

// One probability vector per player.
struct MixedProfile {
  std::vector<std::vector<Scalar>> dist;

  int num_players() const { return static_cast<int>(dist.size()); }
  const Scalar& prob(int player, int strategy) const {
    return dist[player][strategy];
  }

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
};

// A finite normal-form game. Payoff tensors are dense and row-major over
// (s_1, ..., s_n) with the last player's strategy varying fastest.
class Game {
 public:
  Game(std::string name, std::vector<std::vector<std::string>> strategy_names,
       std::vector<std::vector<Scalar>> payoffs,
       NumericMode mode = NumericMode::kRational);

  // Convenience for tests: integer payoffs, strategies named "s0", "s1", ...
  static Game FromIntegers(const std::vector<int>& shape,
                           const std::vector<std::vector<long>>& payoffs,
                           NumericMode mode = NumericMode::kRational);

  const std::string& name() const { return name_; }
  NumericMode mode() const { return mode_; }
  int num_players() const { return static_cast<int>(shape_.size()); }
  int num_strategies(int player) const { return shape_[player]; }
  const std::vector<int>& shape() const { return shape_; }
  std::size_t num_profiles() const { return num_profiles_; }
  const std::vector<std::string>& strategy_names(int player) const {
    return strategy_names_[player];
  }
  // Returns -1 if the player has no strategy with that name.
  int StrategyIndex(int player, std::string_view strategy) const;

  const Scalar& payoff(int player, std::size_t profile_index) const {
    return payoffs_[player][profile_index];
  }
  const Scalar& payoff(int player, const PureProfile& s) const {
    return payoffs_[player][ProfileIndex(s)];
  }
  const std::vector<Scalar>& payoff_tensor(int player) const {
    return payoffs_[player];
  }

  std::size_t ProfileIndex(const PureProfile& s) const;
  PureProfile ProfileAt(std::size_t index) const;

  // max - min over every payoff entry of every player.
  Scalar PayoffRange() const;

  // Same game in another numeric mode.
  Game WithMode(NumericMode mode) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> strategy_names_;
  std::vector<std::vector<Scalar>> payoffs_;
  std::vector<int> shape_;
  std::size_t num_profiles_ = 1;
  NumericMode mode_;
};

// Per-player, per-strategy gains at one profile.
struct GainTable {
  std::vector<std::vector<Scalar>> gains;  // max(f_i(sigma(i,s)) - f_i(sigma), 0)
  std::vector<Scalar> best;                // max over s of gains[i][s]
  Scalar total;                            // sum over i of best[i]
  std::vector<bool> up;                    // best[i] > total / (n + 1)
};

// Throws kDimensionMismatch or kInvalidDistribution.
void ValidateProfile(const Game& game, const MixedProfile& sigma);

MixedProfile PureAsMixed(const Game& game, const PureProfile& s);
MixedProfile UniformProfile(const Game& game);

// Expected payoff of `player` under independent mixing, by full expansion
// over pure profiles.
Scalar EvaluatePayoff(const Game& game, const MixedProfile& sigma, int player);

// sigma with player i's component replaced by the point mass on s.
MixedProfile DeviationProfile(const MixedProfile& sigma, int player,
                              int strategy);

// f_i(sigma(i, s)) for every s of player i, in one pass over the tensor.
// Does not validate sigma.
std::vector<Scalar> DeviationPayoffs(const Game& game,
                                     const MixedProfile& sigma, int player);

GainTable ComputeGainTable(const Game& game, const MixedProfile& sigma);

// max_i A_i(sigma). Zero exactly at Nash equilibria.
Scalar MaxRegret(const Game& game, const MixedProfile& sigma);

// Throws kNegativeEpsilon when eps < 0.
bool IsEquilibrium(const Game& game, const MixedProfile& sigma,
                   const Scalar& eps);

}  // namespace nashcell

#endif  // NASHCELL_GAME_H_
