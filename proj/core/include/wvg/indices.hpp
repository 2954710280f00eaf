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

#ifndef WVG_INDICES_HPP
#define WVG_INDICES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wvg/bigint.hpp"
#include "wvg/game.hpp"

namespace wvg {

enum class IndexKind { banzhaf, shapley_shubik, both };

struct RunOptions {
  int threads = 0;              // 0 = hardware concurrency
  bool parallel_primes = false; // per-prime passes in parallel (more memory)
  std::size_t cell_budget = std::size_t(1) << 26;  // vector-game tables
};

struct PlayerPower {
  BigInt banzhaf_raw;   // exact i-swing count of the input game
  BigInt ssi_raw;       // exact n! * SSI_i
  BigRat banzhaf_share; // banzhaf_raw / sum of all banzhaf_raw
  BigRat ssi_share;     // ssi_raw / n!
};

/// Exact power distribution in the original player order. stripped players
/// (zero weight) carry exact zeros.
struct PowerDistribution {
  std::vector<PlayerPower> players;
  BigInt banzhaf_total;  // sum of banzhaf_raw, 0 if not computed
  BigInt ssi_total;      // n! if SSI computed, else 0
  Weight quota = 0;
  Weight weight_sum = 0;
  bool has_banzhaf = false;
  bool has_ssi = false;

  std::size_t player_count() const { return players.size(); }
};

PowerDistribution banzhaf(const WeightedGame& game,
                          const RunOptions& options = {});
PowerDistribution shapley_shubik(const WeightedGame& game,
                                 const RunOptions& options = {});
PowerDistribution compute_power(const WeightedGame& game, IndexKind kind,
                                const RunOptions& options = {});

PowerDistribution banzhaf_vector(const VectorWeightedGame& game,
                                 const RunOptions& options = {});
PowerDistribution shapley_shubik_vector(const VectorWeightedGame& game,
                                        const RunOptions& options = {});
PowerDistribution compute_power_vector(const VectorWeightedGame& game,
                                       IndexKind kind,
                                       const RunOptions& options = {});

struct SweepPoint {
  std::uint64_t grid_index = 0;        // k, quota fraction = k * num / den
  BigRat quota_fraction;               // in [0, 1]
  std::vector<BigRat> banzhaf_shares;  // per original player
};

/// Banzhaf shares for quotas k * (step_num/step_den) * C, k = 0..1/step.
/// step must divide the full range evenly. Grid points whose quota would
/// resolve below 1, and any game with zero total swings, yield the uniform
/// distribution. Output is identical to calling banzhaf() per grid point;
/// internally one pair of count tables is shared across all quotas.
std::vector<SweepPoint> quota_sweep(const std::vector<Weight>& weights,
                                    std::uint64_t step_num,
                                    std::uint64_t step_den,
                                    const RunOptions& options = {});

/// One row of the between-years / between-indices comparison: l1 distances
/// of share vectors restricted to a player set, exact rationals in [0, 2].
struct DifferenceReport {
  std::string player_set;
  BigRat dp_super_y1, dp_super_y2;   // |Bz - SSI| per year, first quota
  BigRat dbz_super, dssi_super;      // per-index distance between years
  BigRat dp_simple_y1, dp_simple_y2; // same for the second quota
  BigRat dbz_simple, dssi_simple;
};

/// All four distributions must carry both indices and identical player
/// counts. `excluded` holds zero-based player positions left out of the set.
DifferenceReport difference_report(const PowerDistribution& super_y1,
                                   const PowerDistribution& super_y2,
                                   const PowerDistribution& simple_y1,
                                   const PowerDistribution& simple_y2,
                                   const std::vector<PlayerIndex>& excluded,
                                   std::string set_name);

}  // namespace wvg

#endif  // WVG_INDICES_HPP
