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

#include "nashcell/oracle.h"

#include <algorithm>
#include <utility>

#include "nashcell/errors.h"
#include "nashcell/linear_algebra.h"

namespace nashcell::oracle {
namespace {

// Every distribution over k strategies with denominators m, ascending
// lexicographic in the numerators.
void LatticePoints(int k, int m, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k - 1) {
    prefix.push_back(m);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = 0; a <= m; ++a) {
    prefix.push_back(a);
    LatticePoints(k, m - a, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> Subsets(int size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << size); ++mask) {
    std::vector<int> subset;
    for (int s = 0; s < size; ++s) {
      if (mask & (1u << s)) subset.push_back(s);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

// Opponent mix on `support` (zero elsewhere) making the owner of `payoff`
// indifferent over `rows`. payoff(r, c) is the owner's payoff when the owner
// plays r and the opponent plays c. Returns {mix, value}.
struct Indifference {
  LinearSolution::Kind kind;
  std::vector<Scalar> mix;
  Scalar value;
};

template <typename Payoff>
Indifference SolveIndifference(const std::vector<int>& rows,
                               const std::vector<int>& support,
                               int opponent_size, Payoff payoff) {
  const Scalar zero = Scalar::Integer(0);
  const Scalar one = Scalar::Integer(1);
  const int unknowns = static_cast<int>(support.size()) + 1;
  Matrix a;
  std::vector<Scalar> b;
  for (int r : rows) {
    std::vector<Scalar> eq;
    for (int c : support) eq.push_back(payoff(r, c));
    eq.push_back(-one);
    a.push_back(std::move(eq));
    b.push_back(zero);
  }
  std::vector<Scalar> total(unknowns, one);
  total.back() = zero;
  a.push_back(std::move(total));
  b.push_back(one);

  LinearSolution solution = SolveLinearSystem(std::move(a), std::move(b));
  Indifference result{solution.kind, {}, zero};
  if (solution.kind == LinearSolution::Kind::kInconsistent) return result;
  result.mix.assign(opponent_size, zero);
  for (std::size_t k = 0; k < support.size(); ++k) {
    result.mix[support[k]] = solution.x[k];
  }
  result.value = solution.x.back();
  return result;
}

bool Nonnegative(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& p) { return p.Sign() >= 0; });
}

bool LexLess(const MixedProfile& a, const MixedProfile& b) {
  for (int i = 0; i < a.num_players(); ++i) {
    for (std::size_t s = 0; s < a.dist[i].size(); ++s) {
      int c = Compare(a.dist[i][s], b.dist[i][s]);
      if (c != 0) return c < 0;
    }
  }
  return false;
}

}  // namespace

std::string_view MethodName(Method method) {
  return method == Method::kGrid ? "GRID" : "SUPPORT_ENUM";
}

OracleResult GridMinRegret(const Game& game, int resolution,
                           std::uint64_t budget) {
  if (resolution < 1) {
    throw NashError(ErrorCode::kResolutionZero, "resolution must be >= 1");
  }
  const int n = game.num_players();
  std::vector<std::vector<std::vector<int>>> points(n);
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    std::vector<int> prefix;
    LatticePoints(game.num_strategies(i), resolution, prefix, points[i]);
    if (total > budget / points[i].size() + 1) total = budget + 1;
    else total *= points[i].size();
  }
  if (total > budget) {
    throw NashError(ErrorCode::kBudgetExceeded,
                    "grid oracle exceeds the profile budget of " +
                        std::to_string(budget));
  }

  std::vector<int> index(n, 0);
  OracleResult best;
  best.method = Method::kGrid;
  bool have_best = false;
  while (true) {
    MixedProfile sigma;
    for (int i = 0; i < n; ++i) {
      std::vector<Scalar> dist;
      for (int a : points[i][index[i]]) {
        dist.push_back(Scalar::Ratio(a, resolution, game.mode()));
      }
      sigma.dist.push_back(std::move(dist));
    }
    Scalar regret = MaxRegret(game, sigma);
    if (!have_best || regret < best.max_regret) {
      best.profile = std::move(sigma);
      best.max_regret = std::move(regret);
      have_best = true;
    }
    int k = n - 1;
    while (k >= 0 && ++index[k] == static_cast<int>(points[k].size())) {
      index[k--] = 0;
    }
    if (k < 0) break;
  }
  return best;
}

SupportEnumerationResult SupportEnumeration(const Game& game) {
  if (game.num_players() != 2) {
    throw NashError(ErrorCode::kNotTwoPlayer,
                    "support enumeration needs exactly 2 players");
  }
  if (game.mode() != NumericMode::kRational) {
    throw NashError(ErrorCode::kModeMismatch,
                    "support enumeration requires rational mode");
  }
  const int rows = game.num_strategies(0);
  const int cols = game.num_strategies(1);
  auto row_payoff = [&](int r, int c) -> const Scalar& {
    return game.payoff(0, static_cast<std::size_t>(r) * cols + c);
  };
  auto col_payoff = [&](int c, int r) -> const Scalar& {
    return game.payoff(1, static_cast<std::size_t>(r) * cols + c);
  };

  SupportEnumerationResult result;
  for (const auto& row_support : Subsets(rows)) {
    for (const auto& col_support : Subsets(cols)) {
      // Column mix keeps the row player indifferent on row_support, and
      // vice versa.
      Indifference y =
          SolveIndifference(row_support, col_support, cols, row_payoff);
      if (y.kind == LinearSolution::Kind::kInconsistent) continue;
      Indifference x =
          SolveIndifference(col_support, row_support, rows, col_payoff);
      if (x.kind == LinearSolution::Kind::kInconsistent) continue;
      // A singular square system means some mix has more best responses
      // than its support size.
      const bool square = row_support.size() == col_support.size();
      if (square && (y.kind == LinearSolution::Kind::kUnderdetermined ||
                     x.kind == LinearSolution::Kind::kUnderdetermined)) {
        result.degenerate = true;
      }
      if (!Nonnegative(x.mix) || !Nonnegative(y.mix)) continue;

      bool best_response = true;
      for (int r = 0; r < rows && best_response; ++r) {
        Scalar value = Scalar::Integer(0);
        for (int c = 0; c < cols; ++c) value += row_payoff(r, c) * y.mix[c];
        best_response = value <= y.value;
      }
      for (int c = 0; c < cols && best_response; ++c) {
        Scalar value = Scalar::Integer(0);
        for (int r = 0; r < rows; ++r) value += col_payoff(c, r) * x.mix[r];
        best_response = value <= x.value;
      }
      if (!best_response) continue;
      auto support_size = [](const std::vector<Scalar>& mix) {
        return std::count_if(mix.begin(), mix.end(),
                             [](const Scalar& p) { return p.Sign() > 0; });
      };
      if (support_size(x.mix) != support_size(y.mix)) result.degenerate = true;
      result.equilibria.push_back(MixedProfile{{x.mix, y.mix}});
    }
  }
  std::sort(result.equilibria.begin(), result.equilibria.end(), LexLess);
  result.equilibria.erase(
      std::unique(result.equilibria.begin(), result.equilibria.end()),
      result.equilibria.end());
  return result;
}

Verification VerifyProfile(const Game& game, const MixedProfile& sigma,
                           const Scalar& eps) {
  if (eps.Sign() < 0) {
    throw NashError(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  Verification v;
  v.table = ComputeGainTable(game, sigma);
  v.max_regret = Scalar::Zero(game.mode());
  for (const Scalar& b : v.table.best) v.max_regret = Max(v.max_regret, b);
  v.equilibrium = v.max_regret <= eps;
  return v;
}

}  // namespace nashcell::oracle
