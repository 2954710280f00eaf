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

#ifndef WVG_VECTOR_COUNTING_HPP
#define WVG_VECTOR_COUNTING_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/residue.hpp"

namespace wvg {

class CellBudgetExceeded : public std::runtime_error {
 public:
  explicit CellBudgetExceeded(std::size_t required, std::size_t budget);
  std::size_t required_cells() const { return required_; }

 private:
  std::size_t required_;
};

/// Coalition counts per weight vector for an intersection of k games,
/// tracked on the box [0, caps[0]] x ... x [0, caps[k-1]] in row-major
/// order. Mass outside any cap is dropped, exactly like the scalar
/// forward table.
struct VectorCountTable {
  std::vector<Weight> caps;
  std::vector<std::size_t> strides;
  std::size_t cells = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint64_t>> slices;

  ResidueVector at(std::span<const Weight> coords) const;
};

/// Forward k-dimensional table with caps q_j per dimension, so the k = 1
/// case coincides cell-for-cell with the scalar forward table. Throws
/// CellBudgetExceeded when the box would exceed cell_budget cells.
VectorCountTable vector_counts(const VectorWeightedGame& game,
                               const ResidueSystem& system,
                               std::size_t cell_budget);

namespace detail {

struct Box {
  std::vector<Weight> caps;          // inclusive per-dimension bounds
  std::vector<std::size_t> strides;  // row-major, strides.back() == 1
  std::size_t cells = 0;

  static Box make(std::span<const Weight> caps, std::size_t cell_budget);
  std::size_t offset(std::span<const Weight> coords) const;
};

/// Truncated knapsack over the box: one pass per player in descending
/// lexicographic order. player_dim_weights[i][d] is player i's weight in
/// dimension d; an all-zero row doubles every cell (the player is free).
std::vector<std::uint64_t> box_slice(
    const std::vector<std::vector<Weight>>& player_dim_weights,
    const Box& box, std::uint64_t p);

/// Turns a copy of the count slice into counts of coalitions avoiding one
/// player, walking cells in ascending lexicographic order:
///   c_wo(x) = c(x) - c_wo(x - w)   componentwise, base c_wo = c where any
///   coordinate is below w. An all-zero w halves every cell instead.
void to_without(std::vector<std::uint64_t>& slice, const Box& box,
                std::span<const Weight> player_dims, std::uint64_t p);

/// Sum over the sub-box [lower[d], upper[d]] per dimension, mod p. An upper
/// below its lower makes the sum empty; bounds outside the box are clipped.
std::uint64_t box_sum(std::span<const std::uint64_t> slice, const Box& box,
                      std::span<const std::int64_t> lower,
                      std::span<const std::int64_t> upper, std::uint64_t p);

}  // namespace detail

}  // namespace wvg

#endif  // WVG_VECTOR_COUNTING_HPP
