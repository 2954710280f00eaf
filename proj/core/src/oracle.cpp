/*
 * Copyright 2026 the wvg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "wvg/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace wvg {
namespace oracle {

namespace {

void check_size(std::size_t n, const OracleLimits& limits) {
  if (n > limits.max_n) {
    throw std::invalid_argument("oracle refuses games with more than " +
                                std::to_string(limits.max_n) + " players");
  }
}

// weight of every subset, indexed by bitmask
std::vector<Weight> subset_weights(const std::vector<Weight>& w) {
  const std::size_t n = w.size();
  std::vector<Weight> sum(std::size_t(1) << n, 0);
  for (std::size_t mask = 1; mask < sum.size(); ++mask) {
    const unsigned low = std::countr_zero(mask);
    sum[mask] = sum[mask & (mask - 1)] + w[low];
  }
  return sum;
}

template <class Wins>
PowerDistribution enumerate_impl(std::size_t n, Weight quota, Weight c_total,
                                 Wins&& wins) {
  PowerDistribution dist;
  dist.players.assign(
      n, PlayerPower{BigInt(0), BigInt(0), BigRat(0), BigRat(0)});
  dist.quota = quota;
  dist.weight_sum = c_total;
  dist.has_banzhaf = true;
  dist.has_ssi = true;

  std::vector<BigInt> fact(n + 1);
  fact[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    fact[m] = fact[m - 1] * static_cast<unsigned long>(m);
  }

  const std::size_t full = std::size_t(1) << n;
  BigInt total_swings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t(1) << i;
    BigInt swings = 0;
    BigInt ssi = 0;
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (mask & bit) continue;
      if (!wins(mask) && wins(mask | bit)) {
        swings += 1;
        const unsigned s = static_cast<unsigned>(std::popcount(mask));
        ssi += fact[s] * fact[n - s - 1];
      }
    }
    total_swings += swings;
    dist.players[i].banzhaf_raw = std::move(swings);
    dist.players[i].ssi_raw = std::move(ssi);
  }

  dist.banzhaf_total = total_swings;
  dist.ssi_total = fact[n];
  for (PlayerPower& p : dist.players) {
    if (total_swings != 0) {
      p.banzhaf_share = BigRat(p.banzhaf_raw, total_swings);
      p.banzhaf_share.canonicalize();
    }
    p.ssi_share = BigRat(p.ssi_raw, fact[n]);
    p.ssi_share.canonicalize();
  }
  return dist;
}

}  // namespace

PowerDistribution enumerate_indices(const WeightedGame& game,
                                    OracleLimits limits) {
  const std::size_t n = game.player_count();
  check_size(n, limits);
  const std::vector<Weight> sums = subset_weights(game.weights);
  return enumerate_impl(n, game.quota, game.weight_sum(),
                        [&](std::size_t mask) {
                          return sums[mask] >= game.quota;
                        });
}

PowerDistribution enumerate_indices(const VectorWeightedGame& game,
                                    OracleLimits limits) {
  const std::size_t n = game.player_count();
  check_size(n, limits);
  std::vector<std::vector<Weight>> sums;
  sums.reserve(game.game_count());
  for (const WeightedGame& g : game.games) {
    sums.push_back(subset_weights(g.weights));
  }
  return enumerate_impl(n, 0, 0, [&](std::size_t mask) {
    for (std::size_t j = 0; j < sums.size(); ++j) {
      if (sums[j][mask] < game.games[j].quota) return false;
    }
    return true;
  });
}

ExactCounts enumerate_counts(const WeightedGame& game, OracleLimits limits) {
  const std::size_t n = game.player_count();
  check_size(n, limits);
  const std::vector<Weight> sums = subset_weights(game.weights);
  ExactCounts counts;
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    const unsigned s = static_cast<unsigned>(std::popcount(mask));
    counts.by_weight[sums[mask]] += 1;
    counts.by_weight_size[{sums[mask], s}] += 1;
  }
  return counts;
}

}  // namespace oracle
}  // namespace wvg
