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

#ifndef WVG_COUNTING_HPP
#define WVG_COUNTING_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/residue.hpp"

namespace wvg {

enum class Direction { forward, backward };

/// Coalition counts per weight, one flat 64-bit slice per prime.
///
/// forward:  value at x = number of coalitions of weight exactly x, for
///           0 <= x <= q. Mass above q is dropped, never folded into q, so
///           every stored cell is an exact count.
/// backward: the same for q <= x <= C, seeded from the grand coalition.
struct CountTable {
  Direction direction = Direction::forward;
  Weight x_lo = 0, x_hi = 0;  // inclusive weight range
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> slices;  // slices[t][x - x_lo]

  std::size_t cells() const { return static_cast<std::size_t>(x_hi - x_lo) + 1; }
  ResidueVector at(Weight x) const;
  /// Residues of sum over the window [lo, hi] clipped to the stored range.
  ResidueVector window_sum(Weight lo, Weight hi) const;
};

/// Counts per weight and coalition size. Only size rows that are reachable
/// under the sorted-weight bounds are stored:
///   cell (x, s) lives at slices[t][(x - x_lo) * rows() + (s - s_lo)]
/// and any (x, s) outside [s_lo, s_hi] is an implicit zero. at() hides the
/// offset arithmetic; kernels that index slices directly must keep the
/// (x - x_lo) * rows() + (s - s_lo) layout in mind.
struct SizedCountTable {
  Direction direction = Direction::forward;
  Weight x_lo = 0, x_hi = 0;
  unsigned s_lo = 0, s_hi = 0;  // stored size rows, inclusive
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> slices;

  unsigned rows() const { return s_hi - s_lo + 1; }
  std::size_t cells() const {
    return (static_cast<std::size_t>(x_hi - x_lo) + 1) * rows();
  }
  ResidueVector at(Weight x, unsigned s) const;
};

/// Per-player swing recovery table: c-without (forward direction, weights in
/// [0, q-1]) or c-with (backward direction, weights in [q, C]).
struct SwingTable {
  Direction direction = Direction::forward;
  Weight x_lo = 0, x_hi = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> slices;

  ResidueVector at(Weight x) const;
  ResidueVector window_sum(Weight lo, Weight hi) const;
};

/// In-place knapsack over x descending: c(x) += c(x - w_i), tracked on
/// [0, q]. O(n*q) additions and O(q) cells per prime.
CountTable forward_counts(const NormalizedGame& game,
                          const ResidueSystem& system);

/// Complementary recursion seeded at the grand coalition, tracked on [q, C]:
/// c(x - w_i) += c(x) for x ascending. O(n*(C-q+1)) additions per prime.
CountTable backward_counts(const NormalizedGame& game,
                           const ResidueSystem& system);

/// Whichever of the two sides is cheaper: forward iff q <= C - q + 1.
CountTable counts_by_delta(const NormalizedGame& game,
                           const ResidueSystem& system);

SizedCountTable forward_counts_sized(const NormalizedGame& game,
                                     const ResidueSystem& system);
SizedCountTable backward_counts_sized(const NormalizedGame& game,
                                      const ResidueSystem& system);
SizedCountTable counts_by_delta_sized(const NormalizedGame& game,
                                      const ResidueSystem& system);

/// c-without for one player over [0, q-1]:
///   c_wo(x) = c(x)            for x < w_i   (no such coalition contains i)
///   c_wo(x) = c(x) - c_wo(x - w_i)  otherwise.
/// The player's swing count is the window sum over [q - w_i, q - 1].
SwingTable swings_without(const CountTable& table, Weight player_weight);

/// c-with for one player over [q, C]:
///   c_w(x) = c(x)             for x > C - w_i  (all of them contain i)
///   c_w(x) = c(x) - c_w(x + w_i)   otherwise.
/// The swing count is the window sum over [q, q + w_i - 1].
SwingTable swings_with(const CountTable& table, Weight player_weight);

/// Banzhaf numerator of one player straight from a count table, without
/// materializing the swing table.
ResidueVector swing_count(const CountTable& table, Weight player_weight);

/// Exact (losing, winning) coalition counts. Computes the cheaper side by
/// delta dispatch and derives the other as 2^n minus it.
std::pair<BigInt, BigInt> tally_coalitions(const NormalizedGame& game);

namespace detail {

/// Single-prime forward slice over [0, bound]; bound is usually the quota
/// but sweeps reuse one table for many quotas by passing a larger bound.
std::vector<std::uint64_t> forward_slice(std::span<const Weight> weights,
                                         Weight bound, std::uint64_t p);

/// Single-prime backward slice over [lo, C]; index [x - lo].
std::vector<std::uint64_t> backward_slice(std::span<const Weight> weights,
                                          Weight lo, std::uint64_t p);

/// Walks c-without over x = 0..q-1 in ascending order, invoking
/// visit(x, value). `slice` must cover [0, q]. Scratch must hold w cells.
template <class Visit>
void walk_without(std::span<const std::uint64_t> slice, Weight q, Weight w,
                  std::uint64_t p, std::span<std::uint64_t> scratch,
                  Visit&& visit) {
  for (Weight x = 0; x < q; ++x) {
    const std::uint64_t prev = x >= w ? scratch[x % w] : 0;
    const std::uint64_t value =
        x >= w ? sub_mod(slice[x], prev, p) : slice[x];
    scratch[x % w] = value;
    visit(x, value);
  }
}

/// Walks c-with over x = C..q in descending order, invoking visit(x, value).
/// `slice` must cover [q, C] with index [x - q]. Scratch must hold w cells.
template <class Visit>
void walk_with(std::span<const std::uint64_t> slice, Weight q, Weight c_total,
               Weight w, std::uint64_t p, std::span<std::uint64_t> scratch,
               Visit&& visit) {
  for (Weight x = c_total; x >= q; --x) {
    const bool base = x + w > c_total;
    const std::uint64_t value =
        base ? slice[x - q] : sub_mod(slice[x - q], scratch[x % w], p);
    scratch[x % w] = value;
    visit(x, value);
    if (x == q) break;  // Weight is unsigned
  }
}

/// Layout plan for sized tables: stored size-row range plus the sorted
/// prefix/suffix weight sums driving loop-bound pruning.
struct SizedLayout {
  Direction direction = Direction::forward;
  Weight x_lo = 0, x_hi = 0;
  unsigned s_lo = 0, s_hi = 0;
  std::vector<Weight> prefix;  // prefix[s] = sum of the s largest weights
  std::vector<Weight> suffix;  // suffix[s] = sum of the s smallest weights

  unsigned rows() const { return s_hi - s_lo + 1; }
  std::size_t cells() const {
    return (static_cast<std::size_t>(x_hi - x_lo) + 1) * rows();
  }
  static SizedLayout plan(const NormalizedGame& game, Direction direction);
};

/// Single-prime sized slice laid out per SizedLayout.
std::vector<std::uint64_t> sized_slice(const NormalizedGame& game,
                                       const SizedLayout& layout,
                                       std::uint64_t p);

/// Streaming sized c-without: for each x in [0, q-1] ascending within each
/// residue class mod w, passes a row view r where r[s - s_lo] = c_wo(x, s).
/// Rows are only valid inside the visit callback. Forward layouts always
/// store size row 0, and c_wo(x, 0) = c(x, 0).
template <class Visit>
void walk_without_sized(std::span<const std::uint64_t> slice,
                        const SizedLayout& layout, Weight w, std::uint64_t p,
                        Visit&& visit) {
  const unsigned rows = layout.rows();
  const Weight q = layout.x_hi;  // forward layout covers [0, q]
  std::vector<std::uint64_t> prev(rows), cur(rows);
  for (Weight r = 0; r < w && r < q; ++r) {
    bool base = true;
    for (Weight x = r; x < q; x += w) {
      const std::uint64_t* cx = slice.data() + std::size_t(x) * rows;
      if (base) {  // x < w: no coalition of weight x contains the player
        std::copy(cx, cx + rows, cur.begin());
        base = false;
      } else {
        // c_wo(x, s) = c(x, s) - c_wo(x - w, s - 1); row below s_lo is zero
        cur[0] = cx[0];
        for (unsigned k = 1; k < rows; ++k) {
          cur[k] = sub_mod(cx[k], prev[k - 1], p);
        }
      }
      visit(x, std::span<const std::uint64_t>(cur));
      std::swap(prev, cur);
    }
  }
}

/// Streaming sized c-with: x in [q, C] descending within each residue class
/// mod w; the row view satisfies r[s - s_lo] = c_w(x, s).
template <class Visit>
void walk_with_sized(std::span<const std::uint64_t> slice,
                     const SizedLayout& layout, Weight w, std::uint64_t p,
                     Visit&& visit) {
  const unsigned rows = layout.rows();
  const Weight q = layout.x_lo, c_total = layout.x_hi;
  std::vector<std::uint64_t> prev(rows), cur(rows);
  for (Weight r = 0; r < w; ++r) {
    const Weight top = c_total - (c_total - r) % w;  // largest x == r mod w
    if (top < q || top > c_total) continue;
    for (Weight x = top;; x -= w) {
      const std::uint64_t* cx = slice.data() + std::size_t(x - q) * rows;
      if (x + w > c_total) {  // every coalition this heavy contains the player
        std::copy(cx, cx + rows, cur.begin());
      } else {
        // c_w(x, s) = c(x, s) - c_w(x + w, s + 1); row above s_hi is zero
        for (unsigned k = 0; k + 1 < rows; ++k) {
          cur[k] = sub_mod(cx[k], prev[k + 1], p);
        }
        cur[rows - 1] = cx[rows - 1];
      }
      visit(x, std::span<const std::uint64_t>(cur));
      std::swap(prev, cur);
      if (x < q + w) break;
    }
  }
}

}  // namespace detail

}  // namespace wvg

#endif  // WVG_COUNTING_HPP
