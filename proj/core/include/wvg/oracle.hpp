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

#ifndef WVG_ORACLE_HPP
#define WVG_ORACLE_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "wvg/bigint.hpp"
#include "wvg/game.hpp"
#include "wvg/indices.hpp"

namespace wvg {
namespace oracle {

/// Brute-force reference implementations over all 2^n coalitions. They share
/// nothing with the counting kernels beyond the game types, deliberately: a
/// bug in the fast path cannot be mirrored here. Exponential; refuses games
/// beyond max_n players.
struct OracleLimits {
  unsigned max_n = 25;
};

PowerDistribution enumerate_indices(const WeightedGame& game,
                                    OracleLimits limits = {});
PowerDistribution enumerate_indices(const VectorWeightedGame& game,
                                    OracleLimits limits = {});

struct ExactCounts {
  std::map<Weight, BigInt> by_weight;                           // c(x)
  std::map<std::pair<Weight, unsigned>, BigInt> by_weight_size;  // c(x, s)
};

ExactCounts enumerate_counts(const WeightedGame& game,
                             OracleLimits limits = {});

}  // namespace oracle
}  // namespace wvg

#endif  // WVG_ORACLE_HPP
