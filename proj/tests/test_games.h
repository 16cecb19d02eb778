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

#ifndef NASHCELL_TESTS_TEST_GAMES_H_
#define NASHCELL_TESTS_TEST_GAMES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nashcell/game.h"
#include "nashcell/scalar.h"

namespace nashcell::testing {

inline Game MatchingPennies(NumericMode mode = NumericMode::kRational) {
  std::vector<std::vector<Scalar>> payoffs(2);
  for (long v : {1, -1, -1, 1}) payoffs[0].push_back(Scalar::Integer(v, mode));
  for (long v : {-1, 1, 1, -1}) payoffs[1].push_back(Scalar::Integer(v, mode));
  return Game("matching pennies", {{"H", "T"}, {"H", "T"}},
              std::move(payoffs), mode);
}

inline Game PrisonersDilemma() {
  return Game("prisoner's dilemma", {{"C", "D"}, {"C", "D"}},
              {{Scalar::Integer(3), Scalar::Integer(0), Scalar::Integer(5),
                Scalar::Integer(1)},
               {Scalar::Integer(3), Scalar::Integer(5), Scalar::Integer(0),
                Scalar::Integer(1)}});
}

inline Game RockPaperScissors() {
  Game g = Game::FromIntegers({3, 3}, {{0, -1, 1, 1, 0, -1, -1, 1, 0},
                                       {0, 1, -1, -1, 0, 1, 1, -1, 0}});
  return Game("rock paper scissors", {{"R", "P", "S"}, {"R", "P", "S"}},
              {g.payoff_tensor(0), g.payoff_tensor(1)});
}

inline Game BattleOfSexes() {
  Game g = Game::FromIntegers({2, 2}, {{2, 0, 0, 1}, {1, 0, 0, 2}});
  return Game("battle of the sexes", {{"A", "B"}, {"A", "B"}},
              {g.payoff_tensor(0), g.payoff_tensor(1)});
}

inline Game OnePlayer(const std::vector<long>& payoffs) {
  return Game::FromIntegers({static_cast<int>(payoffs.size())}, {payoffs});
}

inline Game ZeroGame(const std::vector<int>& shape) {
  std::size_t profiles = 1;
  for (int k : shape) profiles *= k;
  return Game::FromIntegers(
      shape, std::vector<std::vector<long>>(shape.size(),
                                            std::vector<long>(profiles, 0)));
}

// Portable draws: raw mt19937_64 output reduced by modulo, so corpora are
// identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long Int(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
};

inline Game RandomGame(Draw& draw, const std::vector<int>& shape, long lo,
                       long hi) {
  std::size_t profiles = 1;
  for (int k : shape) profiles *= k;
  std::vector<std::vector<long>> payoffs(shape.size());
  for (auto& tensor : payoffs) {
    for (std::size_t k = 0; k < profiles; ++k) {
      tensor.push_back(draw.Int(lo, hi));
    }
  }
  return Game::FromIntegers(shape, payoffs);
}

// A random rational distribution over k strategies, with random zeros.
inline std::vector<Scalar> RandomDistribution(Draw& draw, int k) {
  std::vector<long> weights;
  long total = 0;
  for (int s = 0; s < k; ++s) {
    long w = draw.Int(0, 3) == 0 ? 0 : draw.Int(1, 12);
    weights.push_back(w);
    total += w;
  }
  if (total == 0) {
    weights[draw.Int(0, k - 1)] = 1;
    total = 1;
  }
  std::vector<Scalar> dist;
  for (long w : weights) dist.push_back(Scalar::Ratio(w, total));
  return dist;
}

inline MixedProfile RandomProfile(Draw& draw, const Game& game) {
  MixedProfile sigma;
  for (int i = 0; i < game.num_players(); ++i) {
    sigma.dist.push_back(RandomDistribution(draw, game.num_strategies(i)));
  }
  return sigma;
}

inline std::vector<Scalar> Q(std::initializer_list<const char*> values) {
  std::vector<Scalar> out;
  for (const char* v : values) {
    out.push_back(ParseScalar(v, NumericMode::kRational));
  }
  return out;
}

inline MixedProfile Profile(
    std::initializer_list<std::initializer_list<const char*>> rows) {
  MixedProfile sigma;
  for (auto row : rows) sigma.dist.push_back(Q(row));
  return sigma;
}

inline Scalar R(const char* text) {
  return ParseScalar(text, NumericMode::kRational);
}

}  // namespace nashcell::testing

#endif  // NASHCELL_TESTS_TEST_GAMES_H_
