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

#include "nashcell/root_function.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "nashcell/errors.h"

namespace nashcell {
namespace {

bool InSupport(const Scalar& p) { return p.Sign() > 0; }

}  // namespace

PureProfile RootLabel(const Game& game, const MixedProfile& sigma) {
  ValidateProfile(game, sigma);
  PureProfile label;
  for (int i = 0; i < game.num_players(); ++i) {
    std::vector<Scalar> deviation = DeviationPayoffs(game, sigma, i);
    int best = -1;
    for (int s = 0; s < game.num_strategies(i); ++s) {
      if (!InSupport(sigma.prob(i, s))) continue;
      if (best < 0 || deviation[s] < deviation[best]) best = s;
    }
    if (best < 0) {
      throw NashError(ErrorCode::kEmptySupport,
                      "player " + std::to_string(i) + " has empty support");
    }
    label.choice.push_back(best);
  }
  return label;
}

MixedProfile RootMotion(const Game& game, const MixedProfile& sigma,
                        const Scalar& t) {
  if (t.Sign() < 0 || t > Scalar::One(t.mode())) {
    throw NashError(ErrorCode::kParameterOutOfRange,
                    "motion parameter " + t.ToString() + " outside [0,1]");
  }
  PureProfile label = RootLabel(game, sigma);
  const Scalar one = Scalar::One(game.mode());
  const Scalar stay = one - t;
  MixedProfile moved = sigma;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int s = 0; s < game.num_strategies(i); ++s) {
      Scalar p = stay * sigma.prob(i, s);
      if (s == label.choice[i]) p += t;
      moved.dist[i][s] = std::move(p);
    }
  }
  return moved;
}

bool CheckRootProperties(const Game& game, const MixedProfile& sigma) {
  PureProfile label = RootLabel(game, sigma);
  GainTable table = ComputeGainTable(game, sigma);
  MixedProfile target = PureAsMixed(game, label);
  for (int i = 0; i < game.num_players(); ++i) {
    int r = label.choice[i];
    if (!InSupport(sigma.prob(i, r))) return false;
    if (!table.gains[i][r].IsZero()) return false;
    for (int s = 0; s < game.num_strategies(i); ++s) {
      if (!InSupport(sigma.prob(i, s)) && !target.prob(i, s).IsZero()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<LatticeLabeler> LatticeLabeler::Create(
    const Game& game, std::span<const int> resolutions) {
  if (game.mode() != NumericMode::kRational) return std::nullopt;
  if (static_cast<int>(resolutions.size()) != game.num_players()) {
    throw NashError(ErrorCode::kDimensionMismatch,
                    "one resolution per player required");
  }
  constexpr __int128 kLimit = static_cast<__int128>(1) << 120;
  LatticeLabeler labeler;
  labeler.shape_ = game.shape();
  for (int i = 0; i < game.num_players(); ++i) {
    mpz_class common = 1;
    for (const Scalar& v : game.payoff_tensor(i)) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
              v.rational().get_den_mpz_t());
    }
    std::vector<std::int64_t> scaled;
    std::int64_t largest = 0;
    for (const Scalar& v : game.payoff_tensor(i)) {
      mpz_class z = v.rational().get_num() * (common / v.rational().get_den());
      if (!z.fits_slong_p()) return std::nullopt;
      std::int64_t value = z.get_si();
      if (value == std::numeric_limits<std::int64_t>::min()) {
        return std::nullopt;
      }
      largest = std::max(largest, value < 0 ? -value : value);
      scaled.push_back(value);
    }
    __int128 bound = largest;
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == i) continue;
      if (resolutions[j] < 1) {
        throw NashError(ErrorCode::kResolutionZero, "resolution must be >= 1");
      }
      if (bound > kLimit / resolutions[j]) return std::nullopt;
      bound *= resolutions[j];
    }
    labeler.scaled_.push_back(std::move(scaled));
  }
  return labeler;
}

void LatticeLabeler::Label(std::span<const std::span<const int>> numerators,
                           std::span<int> label) const {
  const int n = static_cast<int>(shape_.size());
  std::vector<int> s(n);
  std::vector<__int128> deviation;
  for (int i = 0; i < n; ++i) {
    deviation.assign(shape_[i], 0);
    std::fill(s.begin(), s.end(), 0);
    std::size_t index = 0;
    while (true) {
      __int128 weight = 1;
      for (int j = 0; j < n && weight != 0; ++j) {
        if (j != i) weight *= numerators[j][s[j]];
      }
      if (weight != 0) deviation[s[i]] += weight * scaled_[i][index];
      ++index;
      int k = n - 1;
      while (k >= 0 && ++s[k] == shape_[k]) s[k--] = 0;
      if (k < 0) break;
    }
    int best = -1;
    for (int v = 0; v < shape_[i]; ++v) {
      if (numerators[i][v] <= 0) continue;
      if (best < 0 || deviation[v] < deviation[best]) best = v;
    }
    if (best < 0) {
      throw NashError(ErrorCode::kEmptySupport,
                      "player " + std::to_string(i) + " has empty support");
    }
    label[i] = best;
  }
}

}  // namespace nashcell
