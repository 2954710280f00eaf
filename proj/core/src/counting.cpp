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

#include "wvg/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace wvg {

namespace detail {

std::vector<std::uint64_t> forward_slice(std::span<const Weight> weights,
                                         Weight bound, std::uint64_t p) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(bound) + 1, 0);
  c[0] = 1;
  Weight reach = 0;  // min(bound, sum of weights seen so far)
  for (Weight w : weights) {
    reach = std::min(bound, reach + w);
    if (w == 0 || w > reach) continue;
    // descending x keeps the update one-shot per player
    for (Weight x = reach; x >= w; --x) {
      c[x] = add_mod(c[x], c[x - w], p);
      if (x == w) break;
    }
  }
  return c;
}

std::vector<std::uint64_t> backward_slice(std::span<const Weight> weights,
                                          Weight lo, std::uint64_t p) {
  Weight c_total = 0;
  for (Weight w : weights) c_total += w;
  if (lo > c_total) throw std::invalid_argument("backward bound above C");
  std::vector<std::uint64_t> c(static_cast<std::size_t>(c_total - lo) + 1, 0);
  c[c_total - lo] = 1;  // grand coalition
  Weight removed = 0;  // sum of weights already processed
  for (Weight w : weights) {
    if (w != 0) {
      // mass currently lives in [c_total - removed, c_total]; writes to
      // x - w are only tracked at lo and above
      const Weight start = std::max(lo + w, c_total - removed);
      // ascending x keeps the update one-shot per player
      for (Weight x = start; x <= c_total; ++x) {
        c[x - w - lo] = add_mod(c[x - w - lo], c[x - lo], p);
      }
    }
    removed += w;
  }
  return c;
}

SizedLayout SizedLayout::plan(const NormalizedGame& game,
                              Direction direction) {
  const std::size_t n = game.player_count();
  SizedLayout layout;
  layout.direction = direction;
  layout.prefix.resize(n + 1, 0);
  layout.suffix.resize(n + 1, 0);
  for (std::size_t s = 1; s <= n; ++s) {
    layout.prefix[s] = layout.prefix[s - 1] + game.weights[s - 1];
    layout.suffix[s] = layout.suffix[s - 1] + game.weights[n - s];
  }
  if (direction == Direction::forward) {
    layout.x_lo = 0;
    layout.x_hi = game.quota;
    layout.s_lo = 0;
    unsigned s_hi = 0;
    while (s_hi < n && layout.suffix[s_hi + 1] <= game.quota) ++s_hi;
    layout.s_hi = s_hi;
  } else {
    layout.x_lo = game.quota;
    layout.x_hi = game.weight_sum;
    layout.s_hi = static_cast<unsigned>(n);
    unsigned s_lo = static_cast<unsigned>(n);
    while (s_lo > 0 && layout.prefix[s_lo - 1] >= game.quota) --s_lo;
    layout.s_lo = s_lo;
  }
  return layout;
}

namespace {

// s_min[x - x_lo]: smallest stored s with prefix[s] >= x (cells below are
// structurally zero); s_max[x - x_lo]: largest stored s with suffix[s] <= x.
// Both are monotone in x, so one two-pointer pass builds them.
struct RowBounds {
  std::vector<unsigned> s_min, s_max;

  RowBounds(const SizedLayout& layout) {
    const std::size_t len =
        static_cast<std::size_t>(layout.x_hi - layout.x_lo) + 1;
    s_min.resize(len);
    s_max.resize(len);
    unsigned lo = layout.s_lo, hi = layout.s_lo;
    for (std::size_t k = 0; k < len; ++k) {
      const Weight x = layout.x_lo + k;
      while (lo < layout.s_hi && layout.prefix[lo] < x) ++lo;
      while (hi < layout.s_hi && layout.suffix[hi + 1] <= x) ++hi;
      s_min[k] = lo;
      s_max[k] = hi;
    }
  }
};

}  // namespace

std::vector<std::uint64_t> sized_slice(const NormalizedGame& game,
                                       const SizedLayout& layout,
                                       std::uint64_t p) {
  const std::size_t n = game.player_count();
  const unsigned rows = layout.rows();
  std::vector<std::uint64_t> c(layout.cells(), 0);
  const RowBounds bounds(layout);
  const auto s_min_at = [&](Weight x) { return bounds.s_min[x - layout.x_lo]; };
  const auto s_max_at = [&](Weight x) { return bounds.s_max[x - layout.x_lo]; };

  if (layout.direction == Direction::forward) {
    c[0] = 1;  // (x=0, s=0); forward layouts store row 0
    Weight reach = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Weight w = game.weights[i];
      reach = std::min(layout.x_hi, reach + w);
      if (w > reach) continue;
      const unsigned s_cap =
          std::min<unsigned>(layout.s_hi, static_cast<unsigned>(i) + 1);
      for (Weight x = reach; x >= w; --x) {
        std::uint64_t* dst = c.data() + std::size_t(x) * rows;
        const std::uint64_t* src = c.data() + std::size_t(x - w) * rows;
        // c(x, s) += c(x - w, s - 1), over sizes reachable with the first
        // i+1 players and rows that can be nonzero at both x and x - w
        const unsigned s_first =
            std::max({s_min_at(x), s_min_at(x - w) + 1, layout.s_lo + 1});
        const unsigned s_last =
            std::min({s_max_at(x), s_max_at(x - w) + 1, s_cap});
        for (unsigned s = s_first; s <= s_last; ++s) {
          const unsigned k = s - layout.s_lo;
          dst[k] = add_mod(dst[k], src[k - 1], p);
        }
        if (x == w) break;
      }
    }
  } else {
    // seeded at the grand coalition (x = C, s = n)
    c[std::size_t(layout.x_hi - layout.x_lo) * rows +
      (static_cast<unsigned>(n) - layout.s_lo)] = 1;
    Weight removed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Weight w = game.weights[i];
      if (w == 0) continue;
      const Weight start = std::max(layout.x_lo + w,
                                    layout.x_hi > removed
                                        ? layout.x_hi - removed
                                        : layout.x_lo + w);
      // sizes still present before removing player i are at least n - i
      const unsigned s_floor =
          std::max<unsigned>(layout.s_lo + 1, static_cast<unsigned>(n - i));
      for (Weight x = start; x <= layout.x_hi; ++x) {
        std::uint64_t* dst = c.data() + std::size_t(x - w - layout.x_lo) * rows;
        const std::uint64_t* src = c.data() + std::size_t(x - layout.x_lo) * rows;
        // c(x - w, s - 1) += c(x, s)
        const unsigned s_first =
            std::max({s_min_at(x), s_min_at(x - w) + 1, s_floor});
        const unsigned s_last =
            std::min({s_max_at(x), s_max_at(x - w) + 1,
                      static_cast<unsigned>(n)});
        for (unsigned s = s_first; s <= s_last; ++s) {
          const unsigned k = s - layout.s_lo;
          dst[k - 1] = add_mod(dst[k - 1], src[k], p);
        }
      }
      removed += w;
    }
  }
  return c;
}

}  // namespace detail

namespace {

ResidueVector residues_at(const std::vector<std::vector<std::uint64_t>>& slices,
                          std::size_t offset) {
  ResidueVector v;
  v.r.reserve(slices.size());
  for (const auto& s : slices) v.r.push_back(s[offset]);
  return v;
}

}  // namespace

ResidueVector CountTable::at(Weight x) const {
  if (x < x_lo || x > x_hi) {
    return ResidueVector{std::vector<std::uint64_t>(primes.size(), 0)};
  }
  return residues_at(slices, x - x_lo);
}

ResidueVector CountTable::window_sum(Weight lo, Weight hi) const {
  ResidueVector out{std::vector<std::uint64_t>(primes.size(), 0)};
  const Weight a = std::max(lo, x_lo);
  const Weight b = std::min(hi, x_hi);
  for (std::size_t t = 0; t < primes.size(); ++t) {
    std::uint64_t acc = 0;
    for (Weight x = a; x <= b && b >= a; ++x) {
      acc = add_mod(acc, slices[t][x - x_lo], primes[t]);
      if (x == b) break;
    }
    out.r[t] = acc;
  }
  return out;
}

ResidueVector SizedCountTable::at(Weight x, unsigned s) const {
  if (x < x_lo || x > x_hi || s < s_lo || s > s_hi) {
    return ResidueVector{std::vector<std::uint64_t>(primes.size(), 0)};
  }
  return residues_at(slices, std::size_t(x - x_lo) * rows() + (s - s_lo));
}

ResidueVector SwingTable::at(Weight x) const {
  if (x < x_lo || x > x_hi) {
    return ResidueVector{std::vector<std::uint64_t>(primes.size(), 0)};
  }
  return residues_at(slices, x - x_lo);
}

ResidueVector SwingTable::window_sum(Weight lo, Weight hi) const {
  ResidueVector out{std::vector<std::uint64_t>(primes.size(), 0)};
  const Weight a = std::max(lo, x_lo);
  const Weight b = std::min(hi, x_hi);
  for (std::size_t t = 0; t < primes.size(); ++t) {
    std::uint64_t acc = 0;
    for (Weight x = a; x <= b && b >= a; ++x) {
      acc = add_mod(acc, slices[t][x - x_lo], primes[t]);
      if (x == b) break;
    }
    out.r[t] = acc;
  }
  return out;
}

CountTable forward_counts(const NormalizedGame& game,
                          const ResidueSystem& system) {
  CountTable table;
  table.direction = Direction::forward;
  table.x_lo = 0;
  table.x_hi = game.quota;
  table.primes = system.primes();
  table.slices.reserve(system.size());
  for (std::uint64_t p : system.primes()) {
    table.slices.push_back(detail::forward_slice(game.weights, game.quota, p));
  }
  return table;
}

CountTable backward_counts(const NormalizedGame& game,
                           const ResidueSystem& system) {
  CountTable table;
  table.direction = Direction::backward;
  table.x_lo = game.quota;
  table.x_hi = game.weight_sum;
  table.primes = system.primes();
  table.slices.reserve(system.size());
  for (std::uint64_t p : system.primes()) {
    table.slices.push_back(detail::backward_slice(game.weights, game.quota, p));
  }
  return table;
}

CountTable counts_by_delta(const NormalizedGame& game,
                           const ResidueSystem& system) {
  const Weight q = game.quota;
  const Weight back = game.weight_sum - q + 1;
  return q <= back ? forward_counts(game, system)
                   : backward_counts(game, system);
}

namespace {

detail::SizedLayout layout_for(const NormalizedGame& game, Direction d) {
  auto layout = detail::SizedLayout::plan(game, d);
  return layout;
}

SizedCountTable build_sized(const NormalizedGame& game,
                            const ResidueSystem& system, Direction d) {
  const auto layout = layout_for(game, d);
  SizedCountTable table;
  table.direction = d;
  table.x_lo = layout.x_lo;
  table.x_hi = layout.x_hi;
  table.s_lo = layout.s_lo;
  table.s_hi = layout.s_hi;
  table.primes = system.primes();
  table.slices.reserve(system.size());
  for (std::uint64_t p : system.primes()) {
    table.slices.push_back(detail::sized_slice(game, layout, p));
  }
  return table;
}

}  // namespace

SizedCountTable forward_counts_sized(const NormalizedGame& game,
                                     const ResidueSystem& system) {
  return build_sized(game, system, Direction::forward);
}

SizedCountTable backward_counts_sized(const NormalizedGame& game,
                                      const ResidueSystem& system) {
  return build_sized(game, system, Direction::backward);
}

SizedCountTable counts_by_delta_sized(const NormalizedGame& game,
                                      const ResidueSystem& system) {
  const Weight q = game.quota;
  const Weight back = game.weight_sum - q + 1;
  return build_sized(game, system, q <= back ? Direction::forward
                                             : Direction::backward);
}

SwingTable swings_without(const CountTable& table, Weight player_weight) {
  if (table.direction != Direction::forward) {
    throw std::invalid_argument("swings_without expects a forward table");
  }
  if (player_weight == 0) {
    throw std::invalid_argument("player weight must be positive");
  }
  const Weight q = table.x_hi;
  SwingTable out;
  out.direction = Direction::forward;
  out.x_lo = 0;
  out.x_hi = q == 0 ? 0 : q - 1;
  out.primes = table.primes;
  out.slices.assign(table.primes.size(), {});
  std::vector<std::uint64_t> scratch(player_weight);
  for (std::size_t t = 0; t < table.primes.size(); ++t) {
    auto& slice = out.slices[t];
    slice.resize(q);
    detail::walk_without(std::span<const std::uint64_t>(table.slices[t]), q,
                         player_weight, table.primes[t],
                         std::span<std::uint64_t>(scratch),
                         [&](Weight x, std::uint64_t v) { slice[x] = v; });
  }
  return out;
}

SwingTable swings_with(const CountTable& table, Weight player_weight) {
  if (table.direction != Direction::backward) {
    throw std::invalid_argument("swings_with expects a backward table");
  }
  if (player_weight == 0) {
    throw std::invalid_argument("player weight must be positive");
  }
  SwingTable out;
  out.direction = Direction::backward;
  out.x_lo = table.x_lo;
  out.x_hi = table.x_hi;
  out.primes = table.primes;
  out.slices.assign(table.primes.size(), {});
  std::vector<std::uint64_t> scratch(player_weight);
  for (std::size_t t = 0; t < table.primes.size(); ++t) {
    auto& slice = out.slices[t];
    slice.resize(table.cells());
    detail::walk_with(std::span<const std::uint64_t>(table.slices[t]),
                      table.x_lo, table.x_hi, player_weight, table.primes[t],
                      std::span<std::uint64_t>(scratch),
                      [&](Weight x, std::uint64_t v) {
                        slice[x - table.x_lo] = v;
                      });
  }
  return out;
}

ResidueVector swing_count(const CountTable& table, Weight player_weight) {
  if (player_weight == 0) {
    throw std::invalid_argument("player weight must be positive");
  }
  ResidueVector out{std::vector<std::uint64_t>(table.primes.size(), 0)};
  std::vector<std::uint64_t> scratch(player_weight);
  for (std::size_t t = 0; t < table.primes.size(); ++t) {
    const std::uint64_t p = table.primes[t];
    std::uint64_t acc = 0;
    if (table.direction == Direction::forward) {
      const Weight q = table.x_hi;
      const Weight win_lo = player_weight >= q ? 0 : q - player_weight;
      detail::walk_without(std::span<const std::uint64_t>(table.slices[t]), q,
                           player_weight, p, std::span<std::uint64_t>(scratch),
                           [&](Weight x, std::uint64_t v) {
                             if (x >= win_lo) acc = add_mod(acc, v, p);
                           });
    } else {
      const Weight q = table.x_lo;
      const Weight win_hi =
          std::min(table.x_hi, q + player_weight - 1);
      detail::walk_with(std::span<const std::uint64_t>(table.slices[t]), q,
                        table.x_hi, player_weight, p,
                        std::span<std::uint64_t>(scratch),
                        [&](Weight x, std::uint64_t v) {
                          if (x <= win_hi) acc = add_mod(acc, v, p);
                        });
    }
    out.r[t] = acc;
  }
  return out;
}

std::pair<BigInt, BigInt> tally_coalitions(const NormalizedGame& game) {
  const ResidueSystem system = default_system(game.player_count());
  const CountTable table = counts_by_delta(game, system);
  const BigInt total = pow2(static_cast<unsigned long>(game.player_count()));
  if (table.direction == Direction::forward) {
    const BigInt losing =
        system.reconstruct(table.window_sum(0, game.quota - 1));
    return {losing, total - losing};
  }
  const BigInt winning =
      system.reconstruct(table.window_sum(game.quota, game.weight_sum));
  return {total - winning, winning};
}

}  // namespace wvg
