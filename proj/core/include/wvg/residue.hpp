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

#ifndef WVG_RESIDUE_HPP
#define WVG_RESIDUE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "wvg/bigint.hpp"

namespace wvg {

/// The 32 largest primes below 2^63. Residues of values below the product of
/// a prefix of this pool fit the plain unsigned 64-bit add/subtract pattern
/// used by the counting kernels. Primality is asserted by the test suite.
inline constexpr std::array<std::uint64_t, 32> kPrimePool = {
    9223372036854775783ull,  // 2^63 - 25
    9223372036854775643ull,  // 2^63 - 165
    9223372036854775549ull,  // 2^63 - 259
    9223372036854775507ull,  // 2^63 - 301
    9223372036854775433ull,  // 2^63 - 375
    9223372036854775421ull,  // 2^63 - 387
    9223372036854775417ull,  // 2^63 - 391
    9223372036854775399ull,  // 2^63 - 409
    9223372036854775351ull,  // 2^63 - 457
    9223372036854775337ull,  // 2^63 - 471
    9223372036854775291ull,  // 2^63 - 517
    9223372036854775279ull,  // 2^63 - 529
    9223372036854775259ull,  // 2^63 - 549
    9223372036854775181ull,  // 2^63 - 627
    9223372036854775159ull,  // 2^63 - 649
    9223372036854775139ull,  // 2^63 - 669
    9223372036854775097ull,  // 2^63 - 711
    9223372036854775073ull,  // 2^63 - 735
    9223372036854775057ull,  // 2^63 - 751
    9223372036854774959ull,  // 2^63 - 849
    9223372036854774937ull,  // 2^63 - 871
    9223372036854774917ull,  // 2^63 - 891
    9223372036854774893ull,  // 2^63 - 915
    9223372036854774797ull,  // 2^63 - 1011
    9223372036854774739ull,  // 2^63 - 1069
    9223372036854774713ull,  // 2^63 - 1095
    9223372036854774679ull,  // 2^63 - 1129
    9223372036854774629ull,  // 2^63 - 1179
    9223372036854774587ull,  // 2^63 - 1221
    9223372036854774571ull,  // 2^63 - 1237
    9223372036854774559ull,  // 2^63 - 1249
    9223372036854774511ull,  // 2^63 - 1297
};

/// a + b mod p without a division: one compare-and-subtract. Requires
/// a, b < p < 2^63 so the intermediate sum cannot wrap.
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  std::uint64_t s = a + b;
  s -= p & -static_cast<std::uint64_t>(s >= p);
  return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  std::uint64_t d = a - b;
  d += p & -static_cast<std::uint64_t>(a < b);
  return d;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

/// A value held as one residue per prime of the owning ResidueSystem.
struct ResidueVector {
  std::vector<std::uint64_t> r;

  bool operator==(const ResidueVector&) const = default;
};

/// A fixed set of pairwise distinct primes together with the Garner tables
/// needed to map residue vectors back to exact integers. Immutable after
/// construction and safe to share across threads.
class ResidueSystem {
 public:
  explicit ResidueSystem(std::vector<std::uint64_t> primes);

  /// Smallest prefix of kPrimePool whose product exceeds 2^bits. Throws
  /// std::length_error once the pool is exhausted.
  static ResidueSystem with_capacity_bits(unsigned bits);

  std::size_t size() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const BigInt& capacity() const { return capacity_; }

  ResidueVector residues(const BigInt& value) const;
  ResidueVector zero() const { return ResidueVector{std::vector<std::uint64_t>(size(), 0)}; }

  /// The unique integer in [0, capacity) congruent to every residue,
  /// recovered by mixed-radix (Garner) reconstruction.
  BigInt reconstruct(const ResidueVector& v) const;

  ResidueVector add(const ResidueVector& a, const ResidueVector& b) const;
  ResidueVector sub(const ResidueVector& a, const ResidueVector& b) const;

 private:
  std::vector<std::uint64_t> primes_;
  BigInt capacity_;
  std::vector<std::uint64_t> prefix_inverse_;         // (prod mod p_i)^-1 mod p_i
  std::vector<std::vector<std::uint64_t>> prefix_mod_;  // [i][j]: prod_[0..j) mod p_i
};

/// System sized so the product of primes exceeds 2^n_players, the hard bound
/// on any coalition count of an n-player game.
ResidueSystem default_system(std::size_t n_players);

ResidueVector add_mod(const ResidueVector& a, const ResidueVector& b,
                      const ResidueSystem& system);
ResidueVector sub_mod(const ResidueVector& a, const ResidueVector& b,
                      const ResidueSystem& system);
BigInt reconstruct(const ResidueVector& v, const ResidueSystem& system);

}  // namespace wvg

#endif  // WVG_RESIDUE_HPP
