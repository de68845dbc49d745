// Copyright 2026 The Generals Arena Authors
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

#ifndef GENERALS_RATING_H_
#define GENERALS_RATING_H_

// Evaluation statistics: Wilson score intervals, logistic Elo and the
// self-play opponent pool gate.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace generals {

inline constexpr double kEloScale = 400.0;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Wilson score interval for `successes` out of `n` trials. `successes` may be
// fractional when draws count as half a win. Requires n >= 1 and
// 0 <= successes <= n.
Interval WilsonInterval(double successes, int n, double z = 1.96);

class DegenerateRate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Expected score of a player rated `diff` points above its opponent.
double ExpectedScore(double diff);

// 400 * log10(p / (1 - p)); throws DegenerateRate unless 0 < p < 1.
double EloFromWinrate(double p);

// Pairwise results. wins[i][j] counts games i won against j; games is
// symmetric; the remainder of games[i][j] are draws.
class WinRateMatrix {
 public:
  explicit WinRateMatrix(std::vector<std::string> agents);

  int size() const { return static_cast<int>(agents_.size()); }
  const std::vector<std::string>& agents() const { return agents_; }
  int IndexOf(const std::string& agent) const;

  // winner: 0 -> i won, 1 -> j won, nullopt -> draw.
  void AddGame(int i, int j, std::optional<int> winner);
  void AddCounts(int i, int j, int wins_i, int wins_j, int draws);

  int wins(int i, int j) const { return wins_[i][j]; }
  int games(int i, int j) const { return games_[i][j]; }
  int draws(int i, int j) const {
    return games_[i][j] - wins_[i][j] - wins_[j][i];
  }
  // (wins + draws / 2) / games from i's perspective; nullopt without games.
  std::optional<double> Score(int i, int j) const;

 private:
  std::vector<std::string> agents_;
  std::vector<std::vector<int>> wins_;
  std::vector<std::vector<int>> games_;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// rates[i][j] is i's score against j (nullopt when unobserved); must satisfy
// rates[j][i] = 1 - rates[i][j]. Minimizes the squared error between rates
// and logistic predictions with the anchor's rating held fixed.
std::vector<double> FitEloFromRates(
    const std::vector<std::vector<std::optional<double>>>& rates, int anchor,
    double anchor_rating = 1500.0);

// Same fit on matrix scores. `smoothing` adds that many pseudo-games split
// evenly between the two sides of every observed pair, moving perfect
// records away from 0 and 1.
std::vector<double> FitElo(const WinRateMatrix& matrix, int anchor,
                           double anchor_rating = 1500.0,
                           double smoothing = 0.0);

struct PoolConfig {
  int size = 3;
  double gate = 0.45;
  void Validate() const;
};

struct PoolDecision {
  bool accepted = false;
  std::optional<std::string> evicted;
};

// FIFO opponent pool, oldest member first. A candidate whose measured win
// rate against the pool reaches the gate joins it; once the pool is full the
// oldest member leaves.
class OpponentPool {
 public:
  OpponentPool(PoolConfig config, std::vector<std::string> initial);

  PoolDecision Offer(const std::string& candidate, double pool_win_rate);
  const std::vector<std::string>& members() const { return members_; }

 private:
  PoolConfig config_;
  std::vector<std::string> members_;
};

}  // namespace generals

#endif  // GENERALS_RATING_H_
