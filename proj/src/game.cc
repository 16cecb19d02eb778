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

#include "nashcell/game.h"

#include <algorithm>
#include <set>
#include <utility>

#include "nashcell/errors.h"

namespace nashcell {
namespace {

// Advances a mixed-radix counter with the last digit fastest. Returns false
// after the last combination.
bool Next(std::vector<int>& digits, const std::vector<int>& radix) {
  for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

std::string Describe(int player) { return "player " + std::to_string(player); }

}  // namespace

Game::Game(std::string name,
           std::vector<std::vector<std::string>> strategy_names,
           std::vector<std::vector<Scalar>> payoffs, NumericMode mode)
    : name_(std::move(name)),
      strategy_names_(std::move(strategy_names)),
      payoffs_(std::move(payoffs)),
      mode_(mode) {
  if (strategy_names_.empty()) {
    throw NashError(ErrorCode::kShapeError, "a game needs at least 1 player");
  }
  if (payoffs_.size() != strategy_names_.size()) {
    throw NashError(ErrorCode::kShapeError,
                    "expected " + std::to_string(strategy_names_.size()) +
                        " payoff tensors, got " +
                        std::to_string(payoffs_.size()));
  }
  for (std::size_t i = 0; i < strategy_names_.size(); ++i) {
    const auto& names = strategy_names_[i];
    if (names.empty()) {
      throw NashError(ErrorCode::kShapeError,
                      Describe(static_cast<int>(i)) + " has no strategies");
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) {
      throw NashError(ErrorCode::kShapeError,
                      Describe(static_cast<int>(i)) +
                          " has duplicate strategy names");
    }
    shape_.push_back(static_cast<int>(names.size()));
    num_profiles_ *= names.size();
  }
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != num_profiles_) {
      throw NashError(ErrorCode::kShapeError,
                      "payoff tensor of " + Describe(static_cast<int>(i)) +
                          " has " + std::to_string(payoffs_[i].size()) +
                          " entries, expected " +
                          std::to_string(num_profiles_));
    }
    for (Scalar& v : payoffs_[i]) v = v.As(mode_);
  }
}

Game Game::FromIntegers(const std::vector<int>& shape,
                        const std::vector<std::vector<long>>& payoffs,
                        NumericMode mode) {
  std::vector<std::vector<std::string>> names;
  for (int size : shape) {
    std::vector<std::string> player;
    for (int s = 0; s < size; ++s) player.push_back("s" + std::to_string(s));
    names.push_back(std::move(player));
  }
  std::vector<std::vector<Scalar>> tensors;
  for (const auto& tensor : payoffs) {
    std::vector<Scalar> values;
    for (long v : tensor) values.push_back(Scalar::Integer(v, mode));
    tensors.push_back(std::move(values));
  }
  return Game("", std::move(names), std::move(tensors), mode);
}

int Game::StrategyIndex(int player, std::string_view strategy) const {
  const auto& names = strategy_names_[player];
  auto it = std::find(names.begin(), names.end(), strategy);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::size_t Game::ProfileIndex(const PureProfile& s) const {
  if (s.choice.size() != shape_.size()) {
    throw NashError(ErrorCode::kDimensionMismatch,
                    "pure profile has wrong player count");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (s.choice[i] < 0 || s.choice[i] >= shape_[i]) {
      throw NashError(ErrorCode::kIndexOutOfRange,
                      "strategy index out of range for " +
                          Describe(static_cast<int>(i)));
    }
    index = index * shape_[i] + s.choice[i];
  }
  return index;
}

PureProfile Game::ProfileAt(std::size_t index) const {
  PureProfile s;
  s.choice.resize(shape_.size());
  for (int i = num_players() - 1; i >= 0; --i) {
    s.choice[i] = static_cast<int>(index % shape_[i]);
    index /= shape_[i];
  }
  return s;
}

Scalar Game::PayoffRange() const {
  Scalar lo = payoffs_[0][0];
  Scalar hi = lo;
  for (const auto& tensor : payoffs_) {
    for (const Scalar& v : tensor) {
      lo = Min(lo, v);
      hi = Max(hi, v);
    }
  }
  return hi - lo;
}

Game Game::WithMode(NumericMode mode) const {
  return Game(name_, strategy_names_, payoffs_, mode);
}

void ValidateProfile(const Game& game, const MixedProfile& sigma) {
  if (sigma.num_players() != game.num_players()) {
    throw NashError(ErrorCode::kDimensionMismatch,
                    "profile has " + std::to_string(sigma.num_players()) +
                        " players, game has " +
                        std::to_string(game.num_players()));
  }
  for (int i = 0; i < game.num_players(); ++i) {
    const auto& dist = sigma.dist[i];
    if (static_cast<int>(dist.size()) != game.num_strategies(i)) {
      throw NashError(ErrorCode::kDimensionMismatch,
                      "distribution of " + Describe(i) + " has length " +
                          std::to_string(dist.size()) + ", expected " +
                          std::to_string(game.num_strategies(i)));
    }
    Scalar sum = Scalar::Zero(game.mode());
    for (const Scalar& p : dist) {
      if (p.Sign() < 0) {
        throw NashError(ErrorCode::kInvalidDistribution,
                        "negative probability for " + Describe(i));
      }
      sum += p;
    }
    if (sum != Scalar::One(game.mode())) {
      throw NashError(ErrorCode::kInvalidDistribution,
                      "distribution of " + Describe(i) + " sums to " +
                          sum.ToString());
    }
  }
}

MixedProfile PureAsMixed(const Game& game, const PureProfile& s) {
  MixedProfile sigma;
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<Scalar> dist(game.num_strategies(i),
                             Scalar::Zero(game.mode()));
    dist.at(s.choice.at(i)) = Scalar::One(game.mode());
    sigma.dist.push_back(std::move(dist));
  }
  return sigma;
}

MixedProfile UniformProfile(const Game& game) {
  MixedProfile sigma;
  for (int i = 0; i < game.num_players(); ++i) {
    int k = game.num_strategies(i);
    sigma.dist.emplace_back(k, Scalar::Ratio(1, k, game.mode()));
  }
  return sigma;
}

Scalar EvaluatePayoff(const Game& game, const MixedProfile& sigma,
                      int player) {
  ValidateProfile(game, sigma);
  if (player < 0 || player >= game.num_players()) {
    throw NashError(ErrorCode::kIndexOutOfRange, "no such player");
  }
  Scalar value = Scalar::Zero(game.mode());
  std::vector<int> s(game.num_players(), 0);
  std::size_t index = 0;
  do {
    Scalar weight = Scalar::One(game.mode());
    for (int j = 0; j < game.num_players() && !weight.IsZero(); ++j) {
      weight *= sigma.dist[j][s[j]];
    }
    if (!weight.IsZero()) value += weight * game.payoff(player, index);
    ++index;
  } while (Next(s, game.shape()));
  return value;
}

MixedProfile DeviationProfile(const MixedProfile& sigma, int player,
                              int strategy) {
  if (player < 0 || player >= sigma.num_players()) {
    throw NashError(ErrorCode::kIndexOutOfRange, "no such player");
  }
  auto& dist = sigma.dist[player];
  if (strategy < 0 || strategy >= static_cast<int>(dist.size())) {
    throw NashError(ErrorCode::kIndexOutOfRange,
                    "no strategy " + std::to_string(strategy) + " for " +
                        Describe(player));
  }
  NumericMode mode = dist[strategy].mode();
  MixedProfile result = sigma;
  for (int s = 0; s < static_cast<int>(dist.size()); ++s) {
    result.dist[player][s] =
        s == strategy ? Scalar::One(mode) : Scalar::Zero(mode);
  }
  return result;
}

std::vector<Scalar> DeviationPayoffs(const Game& game,
                                     const MixedProfile& sigma, int player) {
  std::vector<Scalar> result(game.num_strategies(player),
                             Scalar::Zero(game.mode()));
  std::vector<int> s(game.num_players(), 0);
  std::size_t index = 0;
  do {
    Scalar weight = Scalar::One(game.mode());
    for (int j = 0; j < game.num_players() && !weight.IsZero(); ++j) {
      if (j != player) weight *= sigma.dist[j][s[j]];
    }
    if (!weight.IsZero()) {
      result[s[player]] += weight * game.payoff(player, index);
    }
    ++index;
  } while (Next(s, game.shape()));
  return result;
}

GainTable ComputeGainTable(const Game& game, const MixedProfile& sigma) {
  ValidateProfile(game, sigma);
  const int n = game.num_players();
  const Scalar zero = Scalar::Zero(game.mode());
  GainTable table;
  table.total = zero;
  for (int i = 0; i < n; ++i) {
    Scalar current = EvaluatePayoff(game, sigma, i);
    std::vector<Scalar> row;
    Scalar best = zero;
    for (const Scalar& deviation : DeviationPayoffs(game, sigma, i)) {
      Scalar gain = deviation - current;
      if (gain.Sign() <= 0) gain = zero;
      best = Max(best, gain);
      row.push_back(std::move(gain));
    }
    table.gains.push_back(std::move(row));
    table.total += best;
    table.best.push_back(std::move(best));
  }
  const Scalar players_plus_one = Scalar::Integer(n + 1, game.mode());
  for (int i = 0; i < n; ++i) {
    table.up.push_back(table.best[i] * players_plus_one > table.total);
  }
  return table;
}

Scalar MaxRegret(const Game& game, const MixedProfile& sigma) {
  GainTable table = ComputeGainTable(game, sigma);
  Scalar worst = Scalar::Zero(game.mode());
  for (const Scalar& b : table.best) worst = Max(worst, b);
  return worst;
}

bool IsEquilibrium(const Game& game, const MixedProfile& sigma,
                   const Scalar& eps) {
  if (eps.Sign() < 0) {
    throw NashError(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  return MaxRegret(game, sigma) <= eps;
}

}  // namespace nashcell
