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

#ifndef WVG_GAME_HPP
#define WVG_GAME_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wvg {

using Weight = std::uint64_t;
using PlayerIndex = std::uint32_t;

/// Weighted voting game [q; w_1, ..., w_n]: a coalition wins when its total
/// weight reaches the quota. Immutable value type, validated on make().
struct WeightedGame {
  Weight quota = 0;
  std::vector<Weight> weights;
  std::vector<std::string> labels;  // empty, or one label per player

  /// Validates n >= 1, 1 <= quota <= sum of weights, and that the weight sum
  /// stays comfortably inside 64 bits. Throws std::invalid_argument.
  static WeightedGame make(Weight quota, std::vector<Weight> weights,
                           std::vector<std::string> labels = {});

  std::size_t player_count() const { return weights.size(); }
  Weight weight_sum() const;
};

/// Intersection of k weighted games over the same player set: a coalition
/// wins iff it wins in every component game.
struct VectorWeightedGame {
  std::vector<WeightedGame> games;

  static VectorWeightedGame make(std::vector<WeightedGame> games);

  std::size_t game_count() const { return games.size(); }
  std::size_t player_count() const {
    return games.empty() ? 0 : games.front().player_count();
  }
};

enum class TieRule {
  include_equal,  // coalitions at exactly the fractional quota win
  strict,         // they lose; quota resolves one unit higher on ties
};

/// Either an absolute integer quota, or a fraction r of the weight sum with
/// a tie rule deciding whether weight == r*C wins.
class QuotaSpec {
 public:
  static QuotaSpec absolute(Weight quota);
  static QuotaSpec fraction(std::uint64_t num, std::uint64_t den,
                            TieRule rule = TieRule::include_equal);

  bool is_absolute() const { return absolute_; }
  TieRule tie_rule() const { return rule_; }
  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

 private:
  QuotaSpec() = default;
  bool absolute_ = true;
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
  TieRule rule_ = TieRule::include_equal;
};

/// Smallest integer threshold t such that "weight >= t" is equivalent to the
/// fractional rule over integer coalition weights. Rejects quotas that would
/// resolve to 0 or exceed the weight sum.
Weight resolve_quota(const QuotaSpec& spec, Weight weight_sum);

/// Preprocessed game the counting kernels run on: weights capped at the
/// quota, vetoers squeezed down to C-q+1, zero weights stripped, remaining
/// players sorted by non-increasing weight. Winning coalitions are exactly
/// those of the input game restricted to the kept players.
struct NormalizedGame {
  Weight quota = 0;
  std::vector<Weight> weights;        // non-increasing, all >= 1
  std::vector<PlayerIndex> perm;      // perm[j] = original index of player j
  std::vector<PlayerIndex> stripped;  // original indices of removed players
  std::size_t original_count = 0;
  Weight weight_sum = 0;

  std::size_t player_count() const { return weights.size(); }
  Weight delta() const;
  WeightedGame as_game() const;
};

NormalizedGame normalize(const WeightedGame& game);

/// min(q, C-q+1): the cheaper counting side and the cost driver of every
/// kernel in this library.
Weight delta(const NormalizedGame& game);

namespace detail {
/// Stable non-increasing sort; returns the permutation mapping sorted
/// position to original index. Counting sort over weight values when the
/// range is small, comparison sort otherwise.
std::vector<PlayerIndex> sort_descending(std::vector<Weight>& weights);
}  // namespace detail

}  // namespace wvg

#endif  // WVG_GAME_HPP
