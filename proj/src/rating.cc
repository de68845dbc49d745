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

#include "generals/rating.h"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Dense>

namespace generals {

Interval WilsonInterval(double successes, int n, double z) {
  if (n < 1) throw std::invalid_argument("Wilson interval needs n >= 1");
  if (successes < 0 || successes > n) {
    throw std::invalid_argument("successes must lie in [0, n]");
  }
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double ExpectedScore(double diff) {
  return 1.0 / (1.0 + std::pow(10.0, -diff / kEloScale));
}

double EloFromWinrate(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DegenerateRate("win rate must lie strictly between 0 and 1");
  }
  return kEloScale * std::log10(p / (1.0 - p));
}

WinRateMatrix::WinRateMatrix(std::vector<std::string> agents)
    : agents_(std::move(agents)),
      wins_(agents_.size(), std::vector<int>(agents_.size(), 0)),
      games_(agents_.size(), std::vector<int>(agents_.size(), 0)) {}

int WinRateMatrix::IndexOf(const std::string& agent) const {
  const auto it = std::find(agents_.begin(), agents_.end(), agent);
  if (it == agents_.end()) throw std::out_of_range("unknown agent " + agent);
  return static_cast<int>(it - agents_.begin());
}

void WinRateMatrix::AddGame(int i, int j, std::optional<int> winner) {
  AddCounts(i, j, winner == 0 ? 1 : 0, winner == 1 ? 1 : 0, winner ? 0 : 1);
}

void WinRateMatrix::AddCounts(int i, int j, int wins_i, int wins_j, int draws) {
  if (i == j) throw std::invalid_argument("an agent cannot play itself");
  wins_[i][j] += wins_i;
  wins_[j][i] += wins_j;
  const int total = wins_i + wins_j + draws;
  games_[i][j] += total;
  games_[j][i] += total;
}

std::optional<double> WinRateMatrix::Score(int i, int j) const {
  if (games_[i][j] == 0) return std::nullopt;
  return (wins_[i][j] + 0.5 * draws(i, j)) / games_[i][j];
}

std::vector<double> FitEloFromRates(
    const std::vector<std::vector<std::optional<double>>>& rates, int anchor,
    double anchor_rating) {
  const int n = static_cast<int>(rates.size());
  if (anchor < 0 || anchor >= n) throw std::out_of_range("anchor out of range");

  struct Pair {
    int i, j;
    double rate;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!rates[i][j]) continue;
      const double r = *rates[i][j];
      if (!(r > 0.0 && r < 1.0)) {
        throw DegenerateRate("rate between agents " + std::to_string(i) +
                             " and " + std::to_string(j) +
                             " is not strictly inside (0, 1)");
      }
      pairs.push_back({i, j, r});
    }
  }

  // Initial ratings along a BFS tree from the anchor; exact when the
  // comparison graph is a tree.
  std::vector<double> rating(n, anchor_rating);
  std::vector<bool> reached(n, false);
  std::deque<int> queue{anchor};
  reached[anchor] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const Pair& p : pairs) {
      if (p.i != u && p.j != u) continue;
      const int v = p.i == u ? p.j : p.i;
      if (reached[v]) continue;
      const double u_score = p.i == u ? p.rate : 1.0 - p.rate;
      rating[v] = rating[u] - EloFromWinrate(u_score);
      reached[v] = true;
      queue.push_back(v);
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw DisconnectedGraph("comparison graph is not connected");
  }

  // Levenberg-Marquardt over every rating except the anchor.
  std::vector<int> column(n, -1);
  int free = 0;
  for (int k = 0; k < n; ++k) {
    if (k != anchor) column[k] = free++;
  }
  if (free == 0 || pairs.empty()) return rating;

  const double slope_scale = std::log(10.0) / kEloScale;
  auto sum_sq = [&](const std::vector<double>& r) {
    double s = 0.0;
    for (const Pair& p : pairs) {
      const double e = p.rate - ExpectedScore(r[p.i] - r[p.j]);
      s += e * e;
    }
    return s;
  };

  double lambda = 1e-3;
  double cost = sum_sq(rating);
  for (int iter = 0; iter < 500 && cost > 0.0; ++iter) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(pairs.size(), free);
    Eigen::VectorXd res(pairs.size());
    for (std::size_t m = 0; m < pairs.size(); ++m) {
      const Pair& p = pairs[m];
      const double e = ExpectedScore(rating[p.i] - rating[p.j]);
      res[m] = p.rate - e;
      const double g = slope_scale * e * (1.0 - e);
      if (column[p.i] >= 0) jac(m, column[p.i]) = -g;
      if (column[p.j] >= 0) jac(m, column[p.j]) = g;
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * res;
    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      std::vector<double> trial = rating;
      for (int k = 0; k < n; ++k) {
        if (column[k] >= 0) trial[k] += step[column[k]];
      }
      const double trial_cost = sum_sq(trial);
      if (trial_cost < cost) {
        const double gain = cost - trial_cost;
        rating = std::move(trial);
        cost = trial_cost;
        lambda = std::max(lambda / 10.0, 1e-12);
        improved = gain > 1e-30;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }
  return rating;
}

std::vector<double> FitElo(const WinRateMatrix& matrix, int anchor,
                           double anchor_rating, double smoothing) {
  const int n = matrix.size();
  std::vector<std::vector<std::optional<double>>> rates(
      n, std::vector<std::optional<double>>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || matrix.games(i, j) == 0) continue;
      const double points = *matrix.Score(i, j) * matrix.games(i, j);
      rates[i][j] = (points + smoothing / 2.0) / (matrix.games(i, j) + smoothing);
    }
  }
  return FitEloFromRates(rates, anchor, anchor_rating);
}

void PoolConfig::Validate() const {
  if (size < 1) throw std::invalid_argument("pool size must be >= 1");
  if (!(gate > 0.0 && gate < 1.0)) {
    throw std::invalid_argument("pool gate must lie in (0, 1)");
  }
}

OpponentPool::OpponentPool(PoolConfig config, std::vector<std::string> initial)
    : config_(config), members_(std::move(initial)) {
  config_.Validate();
  if (static_cast<int>(members_.size()) > config_.size) {
    throw std::invalid_argument("initial pool exceeds its size");
  }
}

PoolDecision OpponentPool::Offer(const std::string& candidate,
                                 double pool_win_rate) {
  PoolDecision d;
  if (pool_win_rate < config_.gate) return d;
  d.accepted = true;
  if (static_cast<int>(members_.size()) == config_.size) {
    d.evicted = members_.front();
    members_.erase(members_.begin());
  }
  members_.push_back(candidate);
  return d;
}

}  // namespace generals
