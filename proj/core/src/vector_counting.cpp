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

#include "wvg/vector_counting.hpp"

#include <algorithm>
#include <string>

namespace wvg {

CellBudgetExceeded::CellBudgetExceeded(std::size_t required,
                                       std::size_t budget)
    : std::runtime_error("vector game needs " + std::to_string(required) +
                         " table cells, budget is " + std::to_string(budget)),
      required_(required) {}

namespace detail {

Box Box::make(std::span<const Weight> caps, std::size_t cell_budget) {
  Box box;
  box.caps.assign(caps.begin(), caps.end());
  unsigned __int128 cells = 1;
  for (Weight cap : caps) {
    cells *= static_cast<unsigned __int128>(cap) + 1;
    if (cells > cell_budget) {
      const std::size_t reported =
          cells > static_cast<unsigned __int128>(SIZE_MAX)
              ? SIZE_MAX
              : static_cast<std::size_t>(cells);
      throw CellBudgetExceeded(reported, cell_budget);
    }
  }
  box.cells = static_cast<std::size_t>(cells);
  box.strides.assign(caps.size(), 1);
  for (std::size_t d = caps.size(); d-- > 1;) {
    box.strides[d - 1] = box.strides[d] * (box.caps[d] + 1);
  }
  return box;
}

std::size_t Box::offset(std::span<const Weight> coords) const {
  std::size_t off = 0;
  for (std::size_t d = 0; d < caps.size(); ++d) {
    off += coords[d] * strides[d];
  }
  return off;
}

namespace {

// Descending-lexicographic in-place update c(x) += c(x - w) for one player.
// Recursion keeps per-dimension bounds exact: x_d runs from caps[d] down to
// w[d], so the source index never wraps a dimension.
void add_player(std::vector<std::uint64_t>& c, const Box& box,
                std::span<const Weight> w, std::uint64_t p, std::size_t dim,
                std::size_t dst, std::size_t src) {
  if (dim == box.caps.size()) {
    c[dst] = add_mod(c[dst], c[src], p);
    return;
  }
  const std::size_t stride = box.strides[dim];
  for (Weight x = box.caps[dim]; x >= w[dim]; --x) {
    add_player(c, box, w, p, dim + 1, dst + x * stride,
               src + (x - w[dim]) * stride);
    if (x == w[dim]) break;
  }
}

}  // namespace

std::vector<std::uint64_t> box_slice(
    const std::vector<std::vector<Weight>>& player_dim_weights,
    const Box& box, std::uint64_t p) {
  std::vector<std::uint64_t> c(box.cells, 0);
  c[0] = 1;
  for (const std::vector<Weight>& w : player_dim_weights) {
    add_player(c, box, w, p, 0, 0, 0);
  }
  return c;
}

void to_without(std::vector<std::uint64_t>& slice, const Box& box,
                std::span<const Weight> player_dims, std::uint64_t p) {
  const std::size_t k = box.caps.size();
  const bool all_zero =
      std::all_of(player_dims.begin(), player_dims.end(),
                  [](Weight w) { return w == 0; });
  if (all_zero) {
    // exactly half the coalitions at every tracked cell contain the player
    const std::uint64_t inv2 = (p + 1) / 2;
    for (std::uint64_t& v : slice) v = mul_mod(v, inv2, p);
    return;
  }
  // ascending lexicographic order: the source cell x - w is already final
  std::vector<Weight> x(k, 0);
  const std::size_t off_w = box.offset(player_dims);
  for (std::size_t idx = 0; idx < box.cells; ++idx) {
    bool in_range = true;
    for (std::size_t d = 0; d < k; ++d) {
      if (x[d] < player_dims[d]) {
        in_range = false;
        break;
      }
    }
    if (in_range) {
      slice[idx] = sub_mod(slice[idx], slice[idx - off_w], p);
    }
    for (std::size_t d = k; d-- > 0;) {
      if (x[d] < box.caps[d]) {
        ++x[d];
        break;
      }
      x[d] = 0;
    }
  }
}

std::uint64_t box_sum(std::span<const std::uint64_t> slice, const Box& box,
                      std::span<const std::int64_t> lower,
                      std::span<const std::int64_t> upper, std::uint64_t p) {
  const std::size_t k = box.caps.size();
  std::vector<Weight> lo(k), hi(k);
  for (std::size_t d = 0; d < k; ++d) {
    if (upper[d] < 0 || upper[d] < lower[d]) return 0;
    lo[d] = lower[d] < 0 ? 0 : static_cast<Weight>(lower[d]);
    if (lo[d] > box.caps[d]) return 0;
    hi[d] = std::min<Weight>(box.caps[d], static_cast<Weight>(upper[d]));
  }
  std::uint64_t acc = 0;
  std::vector<Weight> x = lo;
  std::size_t idx = box.offset(x);
  for (;;) {
    acc = add_mod(acc, slice[idx], p);
    if (k == 0) return acc;
    std::size_t d = k;
    for (;;) {
      --d;
      if (x[d] < hi[d]) {
        ++x[d];
        idx += box.strides[d];
        break;
      }
      idx -= static_cast<std::size_t>(x[d] - lo[d]) * box.strides[d];
      x[d] = lo[d];
      if (d == 0) return acc;
    }
  }
}

}  // namespace detail

ResidueVector VectorCountTable::at(std::span<const Weight> coords) const {
  std::size_t off = 0;
  for (std::size_t d = 0; d < caps.size(); ++d) {
    if (coords[d] > caps[d]) {
      return ResidueVector{std::vector<std::uint64_t>(primes.size(), 0)};
    }
    off += coords[d] * strides[d];
  }
  ResidueVector v;
  v.r.reserve(primes.size());
  for (const auto& s : slices) v.r.push_back(s[off]);
  return v;
}

VectorCountTable vector_counts(const VectorWeightedGame& game,
                               const ResidueSystem& system,
                               std::size_t cell_budget) {
  const std::size_t k = game.game_count();
  const std::size_t n = game.player_count();
  std::vector<Weight> caps(k);
  for (std::size_t j = 0; j < k; ++j) caps[j] = game.games[j].quota;
  const detail::Box box = detail::Box::make(caps, cell_budget);

  std::vector<std::vector<Weight>> pw(n, std::vector<Weight>(k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) pw[i][j] = game.games[j].weights[i];
  }

  VectorCountTable table;
  table.caps = box.caps;
  table.strides = box.strides;
  table.cells = box.cells;
  table.primes = system.primes();
  table.slices.reserve(system.size());
  for (std::uint64_t p : system.primes()) {
    table.slices.push_back(detail::box_slice(pw, box, p));
  }
  return table;
}

}  // namespace wvg
