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

#include "wvg/indices.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wvg/counting.hpp"
#include "wvg/parallel.hpp"
#include "wvg/residue.hpp"
#include "wvg/vector_counting.hpp"

namespace wvg {

namespace {

// Mapping from the reduced player set the kernels run on back to the input
// game: kept_to_orig[j] is the original position of reduced player j, and
// every missing player is a stripped null player.
struct PlayerMap {
  std::vector<PlayerIndex> kept_to_orig;
  std::size_t original_count = 0;

  std::size_t stripped_count() const {
    return original_count - kept_to_orig.size();
  }
};

// Every stripped player doubles the number of coalitions a swing of the
// reduced game embeds into.
BigInt lift_swings(const BigInt& value, std::size_t stripped_count) {
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), value.get_mpz_t(),
               static_cast<mp_bitcnt_t>(stripped_count));
  return out;
}

PowerDistribution assemble(const PlayerMap& map,
                           const std::vector<BigInt>* bz_reduced,
                           const std::vector<BigInt>* ssi_reduced) {
  const std::size_t n = map.original_count;
  PowerDistribution dist;
  dist.players.assign(
      n, PlayerPower{BigInt(0), BigInt(0), BigRat(0), BigRat(0)});

  if (bz_reduced != nullptr) {
    dist.has_banzhaf = true;
    BigInt total = 0;
    for (std::size_t j = 0; j < map.kept_to_orig.size(); ++j) {
      BigInt lifted = lift_swings((*bz_reduced)[j], map.stripped_count());
      total += lifted;
      dist.players[map.kept_to_orig[j]].banzhaf_raw = std::move(lifted);
    }
    if (total == 0) {
      // impossible for 1 <= q <= C: some minimal winning coalition exists
      throw std::logic_error("no swings found in a proper weighted game");
    }
    for (PlayerPower& p : dist.players) {
      p.banzhaf_share = BigRat(p.banzhaf_raw, total);
      p.banzhaf_share.canonicalize();
    }
    dist.banzhaf_total = std::move(total);
  }

  if (ssi_reduced != nullptr) {
    dist.has_ssi = true;
    // reduced-game value is n'!*SSI; the input game scales it by n!/n'!
    BigInt scale = 1;
    for (std::size_t m = map.kept_to_orig.size() + 1; m <= n; ++m) {
      scale *= static_cast<unsigned long>(m);
    }
    const BigInt n_fact = factorial(static_cast<unsigned long>(n));
    for (std::size_t j = 0; j < map.kept_to_orig.size(); ++j) {
      dist.players[map.kept_to_orig[j]].ssi_raw = (*ssi_reduced)[j] * scale;
    }
    for (PlayerPower& p : dist.players) {
      p.ssi_share = BigRat(p.ssi_raw, n_fact);
      p.ssi_share.canonicalize();
    }
    dist.ssi_total = n_fact;
  }
  return dist;
}

std::vector<BigInt> banzhaf_raw_normalized(const NormalizedGame& norm,
                                           const ResidueSystem& system,
                                           const RunOptions& options) {
  const CountTable table = counts_by_delta(norm, system);
  const std::size_t n = norm.player_count();
  std::vector<BigInt> raw(n);
  parallel_for(n, resolve_threads(options.threads),
               [&](std::size_t begin, std::size_t end) {
                 for (std::size_t j = begin; j < end; ++j) {
                   raw[j] = system.reconstruct(
                       swing_count(table, norm.weights[j]));
                 }
               });
  return raw;
}

// Sized swing window sums: result[j][k*l + t] holds, mod primes[t], player
// j's swing count restricted to stored size row k. One sized slice lives in
// memory at a time unless parallel_primes trades memory for speed.
std::vector<std::vector<std::uint64_t>> sized_window_sums(
    const NormalizedGame& norm, const ResidueSystem& system,
    const detail::SizedLayout& layout, const RunOptions& options) {
  const std::size_t n = norm.player_count();
  const std::size_t l = system.size();
  const unsigned rows = layout.rows();
  std::vector<std::vector<std::uint64_t>> sums(
      n, std::vector<std::uint64_t>(static_cast<std::size_t>(rows) * l, 0));

  const auto run_prime = [&](std::size_t t, unsigned player_threads) {
    const std::uint64_t p = system.primes()[t];
    const std::vector<std::uint64_t> slice =
        detail::sized_slice(norm, layout, p);
    parallel_for(n, player_threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t j = begin; j < end; ++j) {
        const Weight w = norm.weights[j];
        std::uint64_t* out = sums[j].data();
        if (layout.direction == Direction::forward) {
          const Weight q = norm.quota;
          const Weight win_lo = w >= q ? 0 : q - w;
          detail::walk_without_sized(
              std::span<const std::uint64_t>(slice), layout, w, p,
              [&](Weight x, std::span<const std::uint64_t> row) {
                if (x < win_lo) return;
                for (unsigned k = 0; k < rows; ++k) {
                  out[std::size_t(k) * l + t] =
                      add_mod(out[std::size_t(k) * l + t], row[k], p);
                }
              });
        } else {
          const Weight q = norm.quota;
          const Weight win_hi = std::min(norm.weight_sum, q + w - 1);
          detail::walk_with_sized(
              std::span<const std::uint64_t>(slice), layout, w, p,
              [&](Weight x, std::span<const std::uint64_t> row) {
                if (x > win_hi) return;
                for (unsigned k = 0; k < rows; ++k) {
                  out[std::size_t(k) * l + t] =
                      add_mod(out[std::size_t(k) * l + t], row[k], p);
                }
              });
        }
      }
    });
  };

  const unsigned threads = resolve_threads(options.threads);
  if (options.parallel_primes && l > 1) {
    parallel_for(l, static_cast<unsigned>(l),
                 [&](std::size_t b, std::size_t e) {
                   for (std::size_t t = b; t < e; ++t) run_prime(t, 1);
                 });
  } else {
    for (std::size_t t = 0; t < l; ++t) run_prime(t, threads);
  }
  return sums;
}

// n'!*SSI per normalized player. Window sums stay in residue arithmetic;
// the factorial weighting happens after reconstruction.
std::vector<BigInt> ssi_raw_normalized(const NormalizedGame& norm,
                                       const ResidueSystem& system,
                                       const RunOptions& options) {
  const std::size_t n = norm.player_count();
  const Weight back = norm.weight_sum - norm.quota + 1;
  const Direction direction =
      norm.quota <= back ? Direction::forward : Direction::backward;
  const auto layout = detail::SizedLayout::plan(norm, direction);
  const auto sums = sized_window_sums(norm, system, layout, options);

  const std::vector<BigInt> pairs =
      pivot_factor_table(static_cast<unsigned long>(n));  // s!(n-1-s)!
  const std::size_t l = system.size();
  std::vector<BigInt> raw(n, BigInt(0));
  parallel_for(
      n, resolve_threads(options.threads),
      [&](std::size_t begin, std::size_t end) {
        ResidueVector rv{std::vector<std::uint64_t>(l, 0)};
        for (std::size_t j = begin; j < end; ++j) {
          BigInt acc = 0;
          for (unsigned k = 0; k < layout.rows(); ++k) {
            // forward rows count the coalition without the player; backward
            // rows include the player, so the pivot size sits one below
            const long s_wo = direction == Direction::forward
                                  ? static_cast<long>(layout.s_lo + k)
                                  : static_cast<long>(layout.s_lo + k) - 1;
            if (s_wo < 0 || s_wo >= static_cast<long>(n)) continue;
            for (std::size_t t = 0; t < l; ++t) {
              rv.r[t] = sums[j][std::size_t(k) * l + t];
            }
            BigInt count = system.reconstruct(rv);
            if (count != 0) {
              acc += pairs[static_cast<std::size_t>(s_wo)] * count;
            }
          }
          raw[j] = std::move(acc);
        }
      });
  return raw;
}

}  // namespace

PowerDistribution compute_power(const WeightedGame& game, IndexKind kind,
                                const RunOptions& options) {
  const NormalizedGame norm = normalize(game);
  const ResidueSystem system = default_system(norm.player_count());

  const bool want_bz = kind != IndexKind::shapley_shubik;
  const bool want_ssi = kind != IndexKind::banzhaf;
  std::vector<BigInt> bz, ssi;
  if (want_bz) bz = banzhaf_raw_normalized(norm, system, options);
  if (want_ssi) ssi = ssi_raw_normalized(norm, system, options);

  PlayerMap map{norm.perm, game.player_count()};
  PowerDistribution dist =
      assemble(map, want_bz ? &bz : nullptr, want_ssi ? &ssi : nullptr);
  dist.quota = game.quota;
  dist.weight_sum = game.weight_sum();
  return dist;
}

PowerDistribution banzhaf(const WeightedGame& game,
                          const RunOptions& options) {
  return compute_power(game, IndexKind::banzhaf, options);
}

PowerDistribution shapley_shubik(const WeightedGame& game,
                                 const RunOptions& options) {
  return compute_power(game, IndexKind::shapley_shubik, options);
}

// ---------------------------------------------------------------------------
// Intersections of weighted games

namespace {

struct VectorSetup {
  std::vector<std::vector<Weight>> dims;  // kept players x k game weights
  PlayerMap map;
  std::vector<Weight> quotas;
  std::vector<Weight> totals;
  bool forward = false;
};

VectorSetup vector_setup(const VectorWeightedGame& game) {
  const std::size_t k = game.game_count();
  const std::size_t n = game.player_count();
  VectorSetup setup;
  setup.map.original_count = n;
  setup.quotas.resize(k);
  setup.totals.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    setup.quotas[j] = game.games[j].quota;
    setup.totals[j] = game.games[j].weight_sum();
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Weight> w(k);
    bool any = false;
    for (std::size_t j = 0; j < k; ++j) {
      w[j] = game.games[j].weights[i];
      any = any || w[j] != 0;
    }
    if (any) {
      setup.dims.push_back(std::move(w));
      setup.map.kept_to_orig.push_back(static_cast<PlayerIndex>(i));
    }
  }
  unsigned __int128 fwd = 1, bwd = 1;
  for (std::size_t j = 0; j < k; ++j) {
    fwd *= setup.quotas[j];
    bwd *= setup.totals[j] - setup.quotas[j] + 1;
  }
  setup.forward = fwd <= bwd;
  return setup;
}

// Per-player, per-size-slot swing residues for the intersection game.
// Unsized callers get one aggregate slot; sized callers get slot s = size of
// the swung coalition (without the player), 0..n-1. The size axis rides
// along as dimension 0 of every box with per-player weight 1.
std::vector<std::vector<ResidueVector>> vector_swings(
    const VectorSetup& setup, const ResidueSystem& system, bool sized,
    std::size_t cell_budget, const RunOptions& options) {
  const std::size_t k = setup.quotas.size();
  const std::size_t n = setup.dims.size();
  const std::size_t slots = sized ? n : 1;
  const std::size_t base = sized ? 1 : 0;
  std::vector<std::vector<ResidueVector>> swings(
      n, std::vector<ResidueVector>(slots, system.zero()));

  const auto player_rows = [&](const std::vector<std::size_t>& dims_used) {
    std::vector<std::vector<Weight>> pw(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sized) pw[i].push_back(1);
      for (std::size_t j : dims_used) pw[i].push_back(setup.dims[i][j]);
    }
    return pw;
  };

  if (setup.forward) {
    // losing is "below quota somewhere": inclusion-exclusion over the
    // subset of component games a coalition stays below
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      std::vector<std::size_t> dims_used;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (std::size_t(1) << j)) dims_used.push_back(j);
      }
      const bool negate = std::popcount(mask) % 2 == 1;

      std::vector<Weight> caps;
      if (sized) caps.push_back(static_cast<Weight>(n));
      for (std::size_t j : dims_used) caps.push_back(setup.quotas[j] - 1);
      const detail::Box box = detail::Box::make(caps, cell_budget);
      const auto pw = player_rows(dims_used);

      for (std::size_t t = 0; t < system.size(); ++t) {
        const std::uint64_t p = system.primes()[t];
        const std::vector<std::uint64_t> counts =
            detail::box_slice(pw, box, p);
        parallel_for(
            n, resolve_threads(options.threads),
            [&](std::size_t begin, std::size_t end) {
              std::vector<std::uint64_t> cwo;
              const std::size_t dcount = caps.size();
              std::vector<std::int64_t> lo(dcount, 0), up_full(dcount),
                  up_shift(dcount);
              for (std::size_t i = begin; i < end; ++i) {
                cwo = counts;
                detail::to_without(cwo, box, pw[i], p);
                for (std::size_t d = 0; d < dims_used.size(); ++d) {
                  const std::size_t j = dims_used[d];
                  up_full[base + d] =
                      static_cast<std::int64_t>(setup.quotas[j]) - 1;
                  up_shift[base + d] =
                      static_cast<std::int64_t>(setup.quotas[j]) - 1 -
                      static_cast<std::int64_t>(setup.dims[i][j]);
                }
                for (std::size_t slot = 0; slot < slots; ++slot) {
                  if (sized) {
                    lo[0] = static_cast<std::int64_t>(slot);
                    up_full[0] = up_shift[0] = lo[0];
                  }
                  // B(q - w_i) - B(q), counting coalitions below the
                  // reduced and the plain quotas on the chosen games
                  const std::uint64_t shifted =
                      detail::box_sum(cwo, box, lo, up_shift, p);
                  const std::uint64_t full =
                      detail::box_sum(cwo, box, lo, up_full, p);
                  const std::uint64_t d_val = sub_mod(shifted, full, p);
                  std::uint64_t& acc = swings[i][slot].r[t];
                  acc = negate ? sub_mod(acc, d_val, p)
                               : add_mod(acc, d_val, p);
                }
              }
            });
      }
    }
  } else {
    // complements: a winning coalition without the player maps to one with
    // the player whose weights stay within the per-game slack C_j - q_j
    std::vector<Weight> caps;
    if (sized) caps.push_back(static_cast<Weight>(n));
    for (std::size_t j = 0; j < k; ++j) {
      caps.push_back(setup.totals[j] - setup.quotas[j]);
    }
    std::vector<std::size_t> all_dims(k);
    for (std::size_t j = 0; j < k; ++j) all_dims[j] = j;
    const detail::Box box = detail::Box::make(caps, cell_budget);
    const auto pw = player_rows(all_dims);

    for (std::size_t t = 0; t < system.size(); ++t) {
      const std::uint64_t p = system.primes()[t];
      const std::vector<std::uint64_t> counts = detail::box_slice(pw, box, p);
      parallel_for(
          n, resolve_threads(options.threads),
          [&](std::size_t begin, std::size_t end) {
            std::vector<std::uint64_t> cwo;
            const std::size_t dcount = caps.size();
            std::vector<std::int64_t> lo(dcount, 0), up_wins(dcount),
                up_wins_without(dcount);
            for (std::size_t i = begin; i < end; ++i) {
              cwo = counts;
              detail::to_without(cwo, box, pw[i], p);
              for (std::size_t j = 0; j < k; ++j) {
                const std::int64_t slack = static_cast<std::int64_t>(
                    setup.totals[j] - setup.quotas[j]);
                up_wins[base + j] = slack;
                up_wins_without[base + j] =
                    slack - static_cast<std::int64_t>(setup.dims[i][j]);
              }
              for (std::size_t slot = 0; slot < slots; ++slot) {
                if (sized) {
                  // swung coalition has size slot; its complement minus the
                  // player has n - 1 - slot members
                  lo[0] = static_cast<std::int64_t>(n) - 1 -
                          static_cast<std::int64_t>(slot);
                  up_wins[0] = up_wins_without[0] = lo[0];
                }
                const std::uint64_t with_player =
                    detail::box_sum(cwo, box, lo, up_wins, p);
                const std::uint64_t already_winning =
                    detail::box_sum(cwo, box, lo, up_wins_without, p);
                swings[i][slot].r[t] =
                    add_mod(swings[i][slot].r[t],
                            sub_mod(with_player, already_winning, p), p);
              }
            }
          });
    }
  }
  return swings;
}

}  // namespace

PowerDistribution compute_power_vector(const VectorWeightedGame& game,
                                       IndexKind kind,
                                       const RunOptions& options) {
  const VectorSetup setup = vector_setup(game);
  const std::size_t n = setup.dims.size();
  if (n == 0) {
    throw std::invalid_argument("every player has zero weight in every game");
  }
  const ResidueSystem system = default_system(n);

  const bool want_bz = kind != IndexKind::shapley_shubik;
  const bool want_ssi = kind != IndexKind::banzhaf;

  std::vector<BigInt> bz, ssi;
  if (want_bz) {
    const auto swings =
        vector_swings(setup, system, false, options.cell_budget, options);
    bz.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      bz[i] = system.reconstruct(swings[i][0]);
    }
  }
  if (want_ssi) {
    const auto swings =
        vector_swings(setup, system, true, options.cell_budget, options);
    const std::vector<BigInt> pairs =
        pivot_factor_table(static_cast<unsigned long>(n));
    ssi.assign(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 0; s < n; ++s) {
        const BigInt count = system.reconstruct(swings[i][s]);
        if (count != 0) ssi[i] += pairs[s] * count;
      }
    }
  }

  PowerDistribution dist =
      assemble(setup.map, want_bz ? &bz : nullptr, want_ssi ? &ssi : nullptr);
  dist.quota = 0;  // no single quota describes an intersection
  dist.weight_sum = 0;
  return dist;
}

PowerDistribution banzhaf_vector(const VectorWeightedGame& game,
                                 const RunOptions& options) {
  return compute_power_vector(game, IndexKind::banzhaf, options);
}

PowerDistribution shapley_shubik_vector(const VectorWeightedGame& game,
                                        const RunOptions& options) {
  return compute_power_vector(game, IndexKind::shapley_shubik, options);
}

// ---------------------------------------------------------------------------
// Quota sweep

std::vector<SweepPoint> quota_sweep(const std::vector<Weight>& weights,
                                    std::uint64_t step_num,
                                    std::uint64_t step_den,
                                    const RunOptions& options) {
  if (step_num == 0 || step_den == 0 || step_num > step_den ||
      step_den % step_num != 0) {
    throw std::invalid_argument("step must divide the quota range evenly");
  }
  const std::uint64_t grid = step_den / step_num;  // points 0..grid

  const std::size_t n_orig = weights.size();
  if (n_orig == 0) throw std::invalid_argument("no players");
  std::vector<Weight> sorted;
  std::vector<PlayerIndex> kept;
  for (std::size_t i = 0; i < n_orig; ++i) {
    if (weights[i] > 0) {
      sorted.push_back(weights[i]);
      kept.push_back(static_cast<PlayerIndex>(i));
    }
  }
  if (sorted.empty()) throw std::invalid_argument("all weights are zero");
  const std::vector<PlayerIndex> order = detail::sort_descending(sorted);
  std::vector<PlayerIndex> kept_sorted(sorted.size());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    kept_sorted[j] = kept[order[j]];
  }
  const std::size_t n = sorted.size();
  Weight c_total = 0;
  for (Weight w : sorted) c_total += w;
  const ResidueSystem system = default_system(n);
  const std::size_t l = system.size();

  // integer quotas per grid point, include-equal rule: ceil(k*C/grid);
  // points whose quota would resolve below 1 fall back to uniform shares
  std::vector<Weight> quota_at(grid + 1, 0);
  std::vector<bool> degenerate(grid + 1, false);
  Weight fwd_top = 0;          // largest forward quota
  Weight bwd_low = c_total + 1;  // smallest backward quota
  for (std::uint64_t kk = 0; kk <= grid; ++kk) {
    const unsigned __int128 prod =
        static_cast<unsigned __int128>(kk) * c_total;
    if (prod < grid) {
      degenerate[kk] = true;
      continue;
    }
    const Weight q = static_cast<Weight>((prod + grid - 1) / grid);
    quota_at[kk] = q;
    if (q <= c_total - q + 1) {
      fwd_top = std::max(fwd_top, q);
    } else {
      bwd_low = std::min(bwd_low, q);
    }
  }

  // window_residues[kk][j*l + t]: player j's swing count mod primes[t]
  std::vector<std::vector<std::uint64_t>> window_residues(
      grid + 1, std::vector<std::uint64_t>(n * l, 0));

  const unsigned threads = resolve_threads(options.threads);
  for (std::size_t t = 0; t < l; ++t) {
    const std::uint64_t p = system.primes()[t];
    if (fwd_top >= 1) {
      // one shared table serves every forward grid point: the cells below
      // any quota are exact counts regardless of the tracking bound
      const std::vector<std::uint64_t> slice =
          detail::forward_slice(sorted, fwd_top, p);
      parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> scratch;
        std::vector<std::uint64_t> prefix(fwd_top + 1, 0);
        for (std::size_t j = begin; j < end; ++j) {
          const Weight w = sorted[j];
          scratch.assign(w, 0);
          // prefix[x] = sum of c_wo over [0, x]
          std::uint64_t run = 0;
          detail::walk_without(std::span<const std::uint64_t>(slice),
                               fwd_top + 1, w, p,
                               std::span<std::uint64_t>(scratch),
                               [&](Weight x, std::uint64_t v) {
                                 run = add_mod(run, v, p);
                                 prefix[x] = run;
                               });
          for (std::uint64_t kk = 0; kk <= grid; ++kk) {
            if (degenerate[kk]) continue;
            const Weight q = quota_at[kk];
            if (q > c_total - q + 1) continue;
            std::uint64_t sum = prefix[q - 1];
            if (q > w) sum = sub_mod(sum, prefix[q - w - 1], p);
            window_residues[kk][j * l + t] = sum;
          }
        }
      });
    }
    if (bwd_low <= c_total) {
      const std::vector<std::uint64_t> slice =
          detail::backward_slice(sorted, bwd_low, p);
      parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::uint64_t> scratch;
        std::vector<std::uint64_t> prefix(c_total - bwd_low + 1, 0);
        for (std::size_t j = begin; j < end; ++j) {
          const Weight w = sorted[j];
          scratch.assign(w, 0);
          detail::walk_with(std::span<const std::uint64_t>(slice), bwd_low,
                            c_total, w, p, std::span<std::uint64_t>(scratch),
                            [&](Weight x, std::uint64_t v) {
                              prefix[x - bwd_low] = v;
                            });
          // prefix[x] = sum of c_w over [bwd_low, x]
          std::uint64_t run = 0;
          for (Weight x = bwd_low; x <= c_total; ++x) {
            run = add_mod(run, prefix[x - bwd_low], p);
            prefix[x - bwd_low] = run;
          }
          for (std::uint64_t kk = 0; kk <= grid; ++kk) {
            if (degenerate[kk]) continue;
            const Weight q = quota_at[kk];
            if (q <= c_total - q + 1) continue;
            const Weight hi = std::min(c_total, q + w - 1);
            std::uint64_t sum = prefix[hi - bwd_low];
            if (q > bwd_low) sum = sub_mod(sum, prefix[q - 1 - bwd_low], p);
            window_residues[kk][j * l + t] = sum;
          }
        }
      });
    }
  }

  std::vector<SweepPoint> out(grid + 1);
  parallel_for(grid + 1, threads, [&](std::size_t begin, std::size_t end) {
    ResidueVector rv{std::vector<std::uint64_t>(l, 0)};
    for (std::size_t kk = begin; kk < end; ++kk) {
      SweepPoint& point = out[kk];
      point.grid_index = kk;
      point.quota_fraction = BigRat(static_cast<unsigned long>(kk),
                                    static_cast<unsigned long>(grid));
      point.quota_fraction.canonicalize();
      point.banzhaf_shares.assign(n_orig, BigRat(0));
      if (degenerate[kk]) {
        const BigRat uniform(1, static_cast<unsigned long>(n_orig));
        for (BigRat& share : point.banzhaf_shares) share = uniform;
        continue;
      }
      std::vector<BigInt> raw(n);
      BigInt total = 0;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < l; ++t) {
          rv.r[t] = window_residues[kk][j * l + t];
        }
        raw[j] = system.reconstruct(rv);
        total += raw[j];
      }
      if (total == 0) {  // zero swings: uniform by convention
        const BigRat uniform(1, static_cast<unsigned long>(n_orig));
        for (BigRat& share : point.banzhaf_shares) share = uniform;
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        BigRat share(raw[j], total);
        share.canonicalize();
        point.banzhaf_shares[kept_sorted[j]] = share;
      }
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Difference report

namespace {

BigRat abs_diff(const BigRat& a, const BigRat& b) {
  BigRat d = a - b;
  if (d < 0) d = -d;
  d.canonicalize();
  return d;
}

}  // namespace

DifferenceReport difference_report(const PowerDistribution& super_y1,
                                   const PowerDistribution& super_y2,
                                   const PowerDistribution& simple_y1,
                                   const PowerDistribution& simple_y2,
                                   const std::vector<PlayerIndex>& excluded,
                                   std::string set_name) {
  const std::size_t n = super_y1.player_count();
  for (const PowerDistribution* d :
       {&super_y1, &super_y2, &simple_y1, &simple_y2}) {
    if (d->player_count() != n) {
      throw std::invalid_argument("distributions cover different player sets");
    }
    if (!d->has_banzhaf || !d->has_ssi) {
      throw std::invalid_argument("difference report needs both indices");
    }
  }
  std::vector<bool> skip(n, false);
  for (PlayerIndex i : excluded) {
    if (i >= n) throw std::invalid_argument("excluded player out of range");
    skip[i] = true;
  }

  DifferenceReport report;
  report.player_set = std::move(set_name);
  for (std::size_t i = 0; i < n; ++i) {
    if (skip[i]) continue;
    report.dp_super_y1 += abs_diff(super_y1.players[i].banzhaf_share,
                                   super_y1.players[i].ssi_share);
    report.dp_super_y2 += abs_diff(super_y2.players[i].banzhaf_share,
                                   super_y2.players[i].ssi_share);
    report.dbz_super += abs_diff(super_y1.players[i].banzhaf_share,
                                 super_y2.players[i].banzhaf_share);
    report.dssi_super += abs_diff(super_y1.players[i].ssi_share,
                                  super_y2.players[i].ssi_share);
    report.dp_simple_y1 += abs_diff(simple_y1.players[i].banzhaf_share,
                                    simple_y1.players[i].ssi_share);
    report.dp_simple_y2 += abs_diff(simple_y2.players[i].banzhaf_share,
                                    simple_y2.players[i].ssi_share);
    report.dbz_simple += abs_diff(simple_y1.players[i].banzhaf_share,
                                  simple_y2.players[i].banzhaf_share);
    report.dssi_simple += abs_diff(simple_y1.players[i].ssi_share,
                                   simple_y2.players[i].ssi_share);
  }
  return report;
}

}  // namespace wvg
