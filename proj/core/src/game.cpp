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

#include "wvg/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wvg {

namespace {

constexpr Weight kMaxWeightSum = Weight(1) << 62;

Weight checked_sum(const std::vector<Weight>& weights) {
  unsigned __int128 sum = 0;
  for (Weight w : weights) sum += w;
  if (sum > kMaxWeightSum) {
    throw std::invalid_argument("weight sum exceeds the supported range");
  }
  return static_cast<Weight>(sum);
}

}  // namespace

WeightedGame WeightedGame::make(Weight quota, std::vector<Weight> weights,
                                std::vector<std::string> labels) {
  if (weights.empty()) {
    throw std::invalid_argument("a game needs at least one player");
  }
  if (quota == 0) {
    throw std::invalid_argument(
        "quota must be at least 1, otherwise the empty coalition wins");
  }
  const Weight total = checked_sum(weights);
  if (quota > total) {
    throw std::invalid_argument(
        "quota exceeds the weight sum: the grand coalition would lose");
  }
  if (!labels.empty() && labels.size() != weights.size()) {
    throw std::invalid_argument("label count does not match player count");
  }
  WeightedGame g;
  g.quota = quota;
  g.weights = std::move(weights);
  g.labels = std::move(labels);
  return g;
}

Weight WeightedGame::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), Weight(0));
}

VectorWeightedGame VectorWeightedGame::make(std::vector<WeightedGame> games) {
  if (games.empty()) {
    throw std::invalid_argument("a vector game needs at least one component");
  }
  const std::size_t n = games.front().player_count();
  for (const WeightedGame& g : games) {
    if (g.player_count() != n) {
      throw std::invalid_argument(
          "all component games must share one player set");
    }
  }
  VectorWeightedGame v;
  v.games = std::move(games);
  return v;
}

QuotaSpec QuotaSpec::absolute(Weight quota) {
  QuotaSpec s;
  s.absolute_ = true;
  s.num_ = quota;
  s.den_ = 1;
  return s;
}

QuotaSpec QuotaSpec::fraction(std::uint64_t num, std::uint64_t den,
                              TieRule rule) {
  if (den == 0 || num == 0 || num > den) {
    throw std::invalid_argument("fractional quota must satisfy 0 < r <= 1");
  }
  QuotaSpec s;
  s.absolute_ = false;
  s.num_ = num;
  s.den_ = den;
  s.rule_ = rule;
  return s;
}

Weight resolve_quota(const QuotaSpec& spec, Weight weight_sum) {
  if (weight_sum == 0) {
    throw std::invalid_argument("weight sum must be positive");
  }
  if (spec.is_absolute()) {
    const Weight q = spec.numerator();
    if (q == 0) throw std::invalid_argument("quota must be at least 1");
    if (q > weight_sum) {
      throw std::invalid_argument("quota exceeds the weight sum");
    }
    return q;
  }

  const unsigned __int128 num = spec.numerator();
  const unsigned __int128 prod = num * weight_sum;
  const std::uint64_t den = spec.denominator();
  if (prod < den) {
    throw std::invalid_argument("fractional quota resolves below 1");
  }
  unsigned __int128 q;
  if (spec.tie_rule() == TieRule::include_equal) {
    // smallest t with (w >= t) == (w >= r*C): ceil(r*C)
    q = (prod + den - 1) / den;
  } else {
    // smallest t with (w >= t) == (w > r*C): floor(r*C) + 1
    q = prod / den + 1;
  }
  if (q > weight_sum) {
    throw std::invalid_argument("resolved quota exceeds the weight sum");
  }
  return static_cast<Weight>(q);
}

namespace detail {

std::vector<PlayerIndex> sort_descending(std::vector<Weight>& weights) {
  const std::size_t n = weights.size();
  std::vector<PlayerIndex> perm(n);
  std::iota(perm.begin(), perm.end(), PlayerIndex(0));
  if (n == 0) return perm;

  const Weight max_w = *std::max_element(weights.begin(), weights.end());
  if (max_w < (Weight(1) << 22)) {
    // counting sort: O(n + max_w), stable by original index
    std::vector<std::uint32_t> start(max_w + 2, 0);
    for (Weight w : weights) ++start[max_w - w + 1];
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<Weight> sorted(n);
    std::vector<PlayerIndex> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t pos = start[max_w - weights[i]]++;
      sorted[pos] = weights[i];
      order[pos] = static_cast<PlayerIndex>(i);
    }
    weights = std::move(sorted);
    return order;
  }

  std::stable_sort(perm.begin(), perm.end(), [&](PlayerIndex a, PlayerIndex b) {
    return weights[a] > weights[b];
  });
  std::vector<Weight> sorted(n);
  for (std::size_t j = 0; j < n; ++j) sorted[j] = weights[perm[j]];
  weights = std::move(sorted);
  return perm;
}

}  // namespace detail

NormalizedGame normalize(const WeightedGame& game) {
  std::vector<Weight> w = game.weights;
  Weight q = game.quota;

  // Cap weights at the quota and squeeze vetoers to C-q+1 until stable.
  // Each transform preserves the winning coalitions but can expose another
  // applicable transform by changing C and q, hence the loop.
  bool changed = true;
  while (changed) {
    changed = false;
    Weight total = std::accumulate(w.begin(), w.end(), Weight(0));
    for (Weight& wi : w) {
      if (wi > q) {
        total -= wi - q;
        wi = q;
        changed = true;
      }
    }
    const Weight slack = total - q;  // q <= total holds throughout
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > slack + 1) {
        // vetoer: every winning coalition contains i
        const Weight reduced = slack + 1;
        q = q - w[i] + reduced;
        w[i] = reduced;
        changed = true;
        break;  // C and q moved; recompute bounds before the next squeeze
      }
    }
  }

  NormalizedGame out;
  out.original_count = game.player_count();
  std::vector<Weight> kept;
  std::vector<PlayerIndex> kept_index;
  kept.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) {
      out.stripped.push_back(static_cast<PlayerIndex>(i));
    } else {
      kept.push_back(w[i]);
      kept_index.push_back(static_cast<PlayerIndex>(i));
    }
  }

  const std::vector<PlayerIndex> order = detail::sort_descending(kept);
  out.weights = std::move(kept);
  out.perm.reserve(order.size());
  for (PlayerIndex j : order) out.perm.push_back(kept_index[j]);
  out.quota = q;
  out.weight_sum =
      std::accumulate(out.weights.begin(), out.weights.end(), Weight(0));
  return out;
}

Weight NormalizedGame::delta() const {
  return std::min(quota, weight_sum - quota + 1);
}

WeightedGame NormalizedGame::as_game() const {
  return WeightedGame::make(quota, weights);
}

Weight delta(const NormalizedGame& game) { return game.delta(); }

}  // namespace wvg
