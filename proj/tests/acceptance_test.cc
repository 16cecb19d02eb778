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

// Acceptance suite. Prints one PASS/FAIL line per criterion, followed by
// indented details for failures, and exits nonzero if any criterion fails.
// Tolerances are exact (rational arithmetic) unless stated otherwise.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bimatrix_cases.h"
#include "json.hpp"
#include "nashcell/errors.h"
#include "nashcell/game.h"
#include "nashcell/io.h"
#include "nashcell/oracle.h"
#include "nashcell/pre_equilibrium.h"
#include "nashcell/root_function.h"
#include "nashcell/subdivision.h"
#include "nashcell/volume.h"
#include "test_games.h"

namespace nashcell {
namespace {

using testing::Draw;
using testing::R;

// Wall-clock limits per criterion, in seconds.
constexpr double kGainTableLimit = 60;
constexpr double kRootLawLimit = 60;
constexpr double kCharacterizationLimit = 300;
constexpr double kExistenceLimit = 300;
constexpr double kConvergenceLimit = 600;
constexpr double kVolumeLimit = 60;

constexpr int kCorpusGames = 50;
constexpr int kProfilesPerGame = 200;
constexpr int kMotionSamples = 11;
constexpr long kRandomPayoffLow = -5;
constexpr long kRandomPayoffHigh = 5;
constexpr long kExhaustiveLow = -2;
constexpr long kExhaustiveHigh = 2;
// Convergence: eps is this fraction of the game's payoff range, and the
// final profile must lie within kDistanceNumerator / m_final (sup norm) of
// the oracle equilibrium.
const char* const kEpsFraction = "1/10";
constexpr int kDistanceNumerator = 2;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  std::string summary;

  void Fail(const std::string& what) {
    pass = false;
    // Keep the log readable when a property fails many times.
    if (details.size() < 100) details.push_back(what);
  }
  void Check(bool ok, const std::string& what) {
    if (!ok) Fail(what);
  }
};

std::string Str(const MixedProfile& sigma) {
  return io::ProfileToJson(sigma).dump();
}

// Expected payoff by summing over every pure profile with exact rational
// weights; deliberately independent of the library's evaluator.
mpq_class NaiveExpectedPayoff(const Game& game, const MixedProfile& sigma,
                              int player) {
  mpq_class total = 0;
  for (std::size_t idx = 0; idx < game.num_profiles(); ++idx) {
    PureProfile s = game.ProfileAt(idx);
    mpq_class w = 1;
    for (int j = 0; j < game.num_players(); ++j) {
      w *= sigma.prob(j, s.choice[j]).rational();
    }
    total += w * game.payoff(player, s).rational();
  }
  return total;
}

struct CorpusEntry {
  Game game;
  std::vector<MixedProfile> profiles;
};

std::vector<CorpusEntry> RandomCorpus() {
  Draw draw(20260101);
  std::vector<CorpusEntry> corpus;
  for (int g = 0; g < kCorpusGames; ++g) {
    int players = static_cast<int>(draw.Int(1, 3));
    std::vector<int> shape;
    for (int i = 0; i < players; ++i) {
      shape.push_back(static_cast<int>(draw.Int(1, 3)));
    }
    CorpusEntry entry{
        testing::RandomGame(draw, shape, kRandomPayoffLow, kRandomPayoffHigh),
        {}};
    for (int k = 0; k < kProfilesPerGame; ++k) {
      entry.profiles.push_back(testing::RandomProfile(draw, entry.game));
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

Outcome GainTableArithmetic(const std::vector<CorpusEntry>& corpus) {
  Outcome out;
  long checked = 0;
  for (std::size_t g = 0; g < corpus.size(); ++g) {
    const Game& game = corpus[g].game;
    const int n = game.num_players();
    for (const MixedProfile& sigma : corpus[g].profiles) {
      ++checked;
      GainTable table = ComputeGainTable(game, sigma);
      mpq_class total = 0;
      bool all_zero = true;
      for (int i = 0; i < n; ++i) {
        mpq_class f = NaiveExpectedPayoff(game, sigma, i);
        out.Check(EvaluatePayoff(game, sigma, i).rational() == f,
                  "f_i mismatch in game " + std::to_string(g));
        mpq_class best = 0;
        mpq_class average = 0;
        for (int s = 0; s < game.num_strategies(i); ++s) {
          mpq_class dev =
              NaiveExpectedPayoff(game, DeviationProfile(sigma, i, s), i);
          mpq_class gain = dev > f ? mpq_class(dev - f) : mpq_class(0);
          out.Check(table.gains[i][s].rational() == gain,
                    "gain mismatch at " + Str(sigma));
          best = std::max(best, gain);
          average += sigma.prob(i, s).rational() * dev;
        }
        out.Check(average == f, "averaging identity fails at " + Str(sigma));
        out.Check(table.best[i].rational() == best, "best gain mismatch");
        total += best;
        if (best != 0) all_zero = false;
        out.Check(table.up[i] == (best * (n + 1) > table.total.rational()),
                  "up predicate mismatch at " + Str(sigma));
      }
      out.Check(table.total.rational() == total, "total mismatch");
      out.Check(IsEquilibrium(game, sigma, R("0")) == all_zero,
                "T = 0 does not match equilibrium check");
    }
  }
  out.summary = std::to_string(checked) + " profiles over " +
                std::to_string(corpus.size()) + " games";
  return out;
}

Outcome RootLaws(const std::vector<CorpusEntry>& corpus) {
  Outcome out;
  long checked = 0;
  for (const CorpusEntry& entry : corpus) {
    const Game& game = entry.game;
    for (const MixedProfile& sigma : entry.profiles) {
      ++checked;
      PureProfile r = RootLabel(game, sigma);
      GainTable table = ComputeGainTable(game, sigma);
      for (int i = 0; i < game.num_players(); ++i) {
        out.Check(sigma.prob(i, r.choice[i]).Sign() > 0,
                  "label outside support at " + Str(sigma));
        out.Check(table.gains[i][r.choice[i]].IsZero(),
                  "label with positive gain at " + Str(sigma));
      }
      for (int k = 0; k < kMotionSamples; ++k) {
        Scalar t = Scalar::Ratio(k, kMotionSamples - 1);
        MixedProfile moved = RootMotion(game, sigma, t);
        for (int i = 0; i < game.num_players(); ++i) {
          for (int s = 0; s < game.num_strategies(i); ++s) {
            Scalar expected = (Scalar::Integer(1) - t) * sigma.prob(i, s);
            if (s == r.choice[i]) expected += t;
            out.Check(moved.prob(i, s) == expected,
                      "root motion is not the straight line at " + Str(sigma));
            if (sigma.prob(i, s).IsZero()) {
              out.Check(moved.prob(i, s).IsZero(),
                        "root motion leaves the face of " + Str(sigma));
            }
          }
        }
      }
    }
  }
  out.summary = std::to_string(checked) + " profiles x " +
                std::to_string(kMotionSamples) + " motion samples";
  return out;
}

Outcome Characterization() {
  Outcome out;
  const long span = kExhaustiveHigh - kExhaustiveLow + 1;
  long games = 1;
  for (int k = 0; k < 8; ++k) games *= span;
  long equilibria = 0;
  const Scalar zero = R("0");
  for (long code = 0; code < games; ++code) {
    std::vector<std::vector<long>> payoffs(2, std::vector<long>(4));
    long rest = code;
    for (int k = 0; k < 8; ++k) {
      payoffs[k / 4][k % 4] = rest % span + kExhaustiveLow;
      rest /= span;
    }
    Game game = Game::FromIntegers({2, 2}, payoffs);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        bool direct = payoffs[0][2 * r + c] >= payoffs[0][2 * (1 - r) + c] &&
                      payoffs[1][2 * r + c] >= payoffs[1][2 * r + (1 - c)];
        MixedProfile sigma = PureAsMixed(game, PureProfile{{r, c}});
        if (IsEquilibrium(game, sigma, zero) != direct) {
          out.Fail("pure profile (" + std::to_string(r) + "," +
                   std::to_string(c) + ") misclassified in game " +
                   std::to_string(code));
        }
      }
    }
    oracle::SupportEnumerationResult se = oracle::SupportEnumeration(game);
    for (const MixedProfile& sigma : se.equilibria) {
      ++equilibria;
      if (!ComputeGainTable(game, sigma).total.IsZero()) {
        out.Fail("T != 0 at " + Str(sigma) + " in game " +
                 std::to_string(code));
      }
    }
  }
  out.summary = std::to_string(games) + " games, " +
                std::to_string(equilibria) + " enumerated equilibria";
  return out;
}

struct Fixture {
  std::string name;
  Game game;
};

std::vector<Fixture> FixtureSuite() {
  std::vector<Fixture> suite = {
      {"matching pennies", testing::MatchingPennies()},
      {"rock paper scissors", testing::RockPaperScissors()},
      {"prisoners dilemma", testing::PrisonersDilemma()},
      {"battle of the sexes", testing::BattleOfSexes()},
  };
  Draw draw(424242);
  for (int k = 0; k < 20; ++k) {
    suite.push_back({"random 2x2 #" + std::to_string(k),
                     testing::RandomGame(draw, {2, 2}, kRandomPayoffLow,
                                         kRandomPayoffHigh)});
  }
  for (int k = 0; k < 5; ++k) {
    suite.push_back({"random 2x2x2 #" + std::to_string(k),
                     testing::RandomGame(draw, {2, 2, 2}, kRandomPayoffLow,
                                         kRandomPayoffHigh)});
  }
  return suite;
}

// Independent re-check of a certificate: every vertex profile is a valid
// profile on the cell's lattice, its root label matches the recorded one,
// and the labels cover every pure profile exactly once.
bool Reverifies(const Game& game, const PreEquilibriumCert& cert) {
  if (cert.cell.vertex_profiles.size() != game.num_profiles()) return false;
  if (cert.labels.size() != game.num_profiles()) return false;
  std::set<PureProfile> seen;
  for (std::size_t k = 0; k < cert.labels.size(); ++k) {
    const MixedProfile& v = cert.cell.vertex_profiles[k];
    try {
      ValidateProfile(game, v);
    } catch (const NashError&) {
      return false;
    }
    if (!(RootLabel(game, v) == cert.labels[k])) return false;
    seen.insert(cert.labels[k]);
  }
  return seen.size() == game.num_profiles();
}

Outcome Existence(const std::vector<Fixture>& suite, const ScanOptions& scan,
                  nlohmann::ordered_json& log) {
  Outcome out;
  int cases = 0;
  for (const Fixture& f : suite) {
    for (int m : {1, 2, 4, 8}) {
      ++cases;
      std::vector<int> res(f.game.num_players(), m);
      std::vector<PreEquilibriumCert> certs =
          FindPreEquilibria(f.game, res, scan);
      int good = 0;
      nlohmann::ordered_json entry;
      entry["game"] = f.name;
      entry["m"] = m;
      entry["certs"] = nlohmann::ordered_json::array();
      for (const auto& cert : certs) {
        if (Reverifies(f.game, cert)) ++good;
        entry["certs"].push_back(io::CertToJson(f.game, cert));
      }
      log.push_back(std::move(entry));
      out.Check(good >= 1, f.name + " at m=" + std::to_string(m) + ": " +
                               std::to_string(certs.size()) +
                               " certificates, " + std::to_string(good) +
                               " re-verified");
    }
  }
  out.summary = std::to_string(suite.size()) + " fixtures x 4 resolutions (" +
                std::to_string(cases) + " cases)";
  return out;
}

Outcome Convergence(const std::vector<Fixture>& suite, const ScanOptions& scan,
                    nlohmann::ordered_json& log) {
  Outcome out;
  int converged = 0;
  for (const Fixture& f : suite) {
    io::ReportContext context;
    context.options.eps = f.game.PayoffRange() * R(kEpsFraction);
    context.options.m0 = 2;
    context.options.refine_factor = 2;
    context.options.max_stages = 6;
    context.options.scan = scan;
    SolveReport report = Solve(f.game, context.options);
    log.push_back(io::SolveReportToJson(f.game, report, context));
    if (!report.converged) {
      out.Fail(f.name + ": " + std::string(SolveStatusName(report.status)) +
               " after " + std::to_string(report.stages.size()) + " stages");
      continue;
    }
    ++converged;
    if (f.name != "matching pennies" && f.name != "rock paper scissors") {
      continue;
    }
    oracle::SupportEnumerationResult se = oracle::SupportEnumeration(f.game);
    if (se.equilibria.size() != 1) {
      out.Fail(f.name + ": oracle did not report a unique equilibrium");
      continue;
    }
    const MixedProfile& eq = se.equilibria[0];
    int m_final = report.stages.back().resolutions[0];
    Scalar distance = R("0");
    for (int i = 0; i < f.game.num_players(); ++i) {
      for (int s = 0; s < f.game.num_strategies(i); ++s) {
        distance = Max(distance, Abs(report.final_profile->prob(i, s) -
                                     eq.prob(i, s)));
      }
    }
    Scalar bound = Scalar::Ratio(kDistanceNumerator, m_final);
    out.Check(distance <= bound, f.name + ": distance " + distance.ToString() +
                                     " > " + bound.ToString());
  }
  out.summary = std::to_string(converged) + "/" + std::to_string(suite.size()) +
                " fixtures converged";
  return out;
}

std::vector<Game> SinglePlayerGames() {
  std::vector<std::vector<long>> payoffs = {
      {0, 1},  {1, 0},    {3, 3},    {-2, 5},   {0, 1, 2},
      {2, 1, 0}, {1, 1, 0}, {0, 4, 4}, {5, 5, 5}, {-1, 3, -1},
  };
  std::vector<Game> games;
  for (const auto& p : payoffs) games.push_back(testing::OnePlayer(p));
  return games;
}

Outcome Volume(const ScanOptions& scan, nlohmann::ordered_json& log) {
  Outcome out;
  int cases = 0;
  const Scalar one = R("1");
  for (const Game& game : SinglePlayerGames()) {
    for (int m : {2, 4, 8}) {
      ++cases;
      std::string tag = io::GameToJson(game)["payoffs"].dump() +
                        " at m=" + std::to_string(m);
      VolumePolynomial volume = TotalVolumePolynomial(game, m);
      out.Check(volume.constant, tag + ": nonconstant volume polynomial");
      out.Check(volume.total.Evaluate(R("0")) == one, tag + ": g(0) != 1");
      out.Check(volume.total.Evaluate(one) == one, tag + ": g(1) != 1");
      out.Check(SampleCheck(game, volume),
                tag + ": coefficients disagree with direct determinants");
      std::vector<PreEquilibriumCert> certs = FindPreEquilibria(game, {m}, scan);
      std::set<int> certified;
      for (const auto& cert : certs) {
        if (Reverifies(game, cert)) {
          certified.insert(static_cast<int>(cert.cell.index));
        }
      }
      for (int c : volume.nonzero_at_one) {
        out.Check(certified.count(c) == 1,
                  tag + ": cell " + std::to_string(c) + " not certified");
      }
      out.Check(!volume.nonzero_at_one.empty(), tag + ": no cell survives");
      nlohmann::ordered_json entry;
      entry["game"] = io::GameToJson(game);
      entry["m"] = m;
      nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
      for (const Scalar& c : volume.total.coefficients()) {
        coefficients.push_back(io::ScalarToJson(c));
      }
      entry["coefficients"] = std::move(coefficients);
      entry["nonzero_at_one"] = volume.nonzero_at_one;
      log.push_back(std::move(entry));
    }
  }
  out.summary = std::to_string(cases) + " single-player cases";
  return out;
}

struct Timed {
  Outcome outcome;
  double seconds;
};

Timed Time(const std::function<Outcome()>& run) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome = run();
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return {std::move(outcome), elapsed.count()};
}

bool Report(int number, const std::string& title, Timed timed,
            double limit) {
  if (limit > 0 && timed.seconds > limit) {
    timed.outcome.Fail("runtime " + std::to_string(timed.seconds) +
                       " s exceeds " + std::to_string(limit) + " s");
  }
  char seconds[32];
  std::snprintf(seconds, sizeof(seconds), "%.2f", timed.seconds);
  std::cout << "criterion " << number << " "
            << (timed.outcome.pass ? "PASS" : "FAIL") << "  " << title << ": "
            << timed.outcome.summary << " [" << seconds << " s]\n";
  for (const std::string& d : timed.outcome.details) {
    std::cout << "    " << d << "\n";
  }
  return timed.outcome.pass;
}

struct SearchRun {
  Timed existence, convergence, volume;
  std::string serialized;
};

SearchRun RunSearchCriteria(const std::vector<Fixture>& suite, int threads) {
  ScanOptions scan;
  scan.threads = threads;
  nlohmann::ordered_json existence_log = nlohmann::ordered_json::array();
  nlohmann::ordered_json convergence_log = nlohmann::ordered_json::array();
  nlohmann::ordered_json volume_log = nlohmann::ordered_json::array();
  SearchRun run;
  run.existence = Time([&] { return Existence(suite, scan, existence_log); });
  run.convergence =
      Time([&] { return Convergence(suite, scan, convergence_log); });
  run.volume = Time([&] { return Volume(scan, volume_log); });
  nlohmann::ordered_json all;
  all["existence"] = std::move(existence_log);
  all["convergence"] = std::move(convergence_log);
  all["volume"] = std::move(volume_log);
  run.serialized = all.dump();
  return run;
}

int Main() {
  bool ok = true;
  std::vector<CorpusEntry> corpus = RandomCorpus();
  ok &= Report(1, "gain-table arithmetic",
               Time([&] { return GainTableArithmetic(corpus); }),
               kGainTableLimit);
  ok &= Report(2, "root-function laws", Time([&] { return RootLaws(corpus); }),
               kRootLawLimit);
  ok &= Report(3, "equilibrium characterization (exhaustive 2x2)",
               Time(Characterization), kCharacterizationLimit);

  std::vector<Fixture> suite = FixtureSuite();
  SearchRun first = RunSearchCriteria(suite, 1);
  ok &= Report(4, "pre-equilibrium existence", first.existence,
               kExistenceLimit);
  ok &= Report(5, "convergence", first.convergence, kConvergenceLimit);
  ok &= Report(6, "single-player volume mechanism", first.volume,
               kVolumeLimit);

  // Second run with a different worker count; reports exclude timings.
  Timed determinism = Time([&] {
    SearchRun second = RunSearchCriteria(suite, 2);
    Outcome out;
    out.Check(second.serialized == first.serialized,
              "serialized reports differ between runs");
    out.summary = std::to_string(first.serialized.size()) +
                  " bytes compared across two runs (1 and 2 threads)";
    return out;
  });
  ok &= Report(7, "determinism", determinism, 0);
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace nashcell

int main() { return nashcell::Main(); }
