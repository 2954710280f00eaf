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

#include "wvg/residue.hpp"

#include <stdexcept>
#include <unordered_set>

namespace wvg {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

// p is prime, so a^(p-2) inverts a. Runs once per system, off the hot path.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t p) {
  BigInt m = value % p;
  if (m < 0) m += p;
  return mpz_get_ui(m.get_mpz_t());
}

}  // namespace

ResidueSystem::ResidueSystem(std::vector<std::uint64_t> primes)
    : primes_(std::move(primes)) {
  if (primes_.empty()) {
    throw std::invalid_argument("residue system needs at least one prime");
  }
  std::unordered_set<std::uint64_t> seen(primes_.begin(), primes_.end());
  if (seen.size() != primes_.size()) {
    throw std::invalid_argument("residue system primes must be distinct");
  }

  const std::size_t l = primes_.size();
  capacity_ = 1;
  prefix_inverse_.resize(l);
  prefix_mod_.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    prefix_mod_[i].resize(i);
    std::uint64_t prod_mod = 1;
    for (std::size_t j = 0; j < i; ++j) {
      prefix_mod_[i][j] = prod_mod;  // product of primes_[0..j) mod p_i
      prod_mod = mul_mod(prod_mod, primes_[j] % primes_[i], primes_[i]);
    }
    prefix_inverse_[i] = inv_mod(prod_mod, primes_[i]);
    capacity_ *= BigInt(static_cast<unsigned long>(primes_[i]));
  }
}

ResidueSystem ResidueSystem::with_capacity_bits(unsigned bits) {
  const BigInt target = pow2(bits);
  BigInt product = 1;
  std::vector<std::uint64_t> chosen;
  for (std::uint64_t p : kPrimePool) {
    chosen.push_back(p);
    product *= BigInt(static_cast<unsigned long>(p));
    if (product > target) {
      return ResidueSystem(std::move(chosen));
    }
  }
  throw std::length_error(
      "prime pool exhausted: cannot certify values beyond " +
      std::to_string(kPrimePool.size() * 62) + " bits");
}

ResidueVector ResidueSystem::residues(const BigInt& value) const {
  ResidueVector v;
  v.r.reserve(size());
  for (std::uint64_t p : primes_) {
    v.r.push_back(mod_u64(value, p));
  }
  return v;
}

BigInt ResidueSystem::reconstruct(const ResidueVector& v) const {
  if (v.r.size() != size()) {
    throw std::invalid_argument("residue vector length mismatch");
  }
  // Mixed-radix digits d_i < p_i with
  //   x = d_0 + d_1*p_0 + d_2*p_0*p_1 + ...
  // computed entirely in 64/128-bit arithmetic; only the final assembly
  // touches arbitrary precision.
  const std::size_t l = size();
  std::vector<std::uint64_t> digit(l);
  for (std::size_t i = 0; i < l; ++i) {
    const std::uint64_t p = primes_[i];
    std::uint64_t partial = 0;  // x mod p_i using digits so far
    for (std::size_t j = 0; j < i; ++j) {
      partial = add_mod(partial,
                        mul_mod(digit[j] % p, prefix_mod_[i][j], p), p);
    }
    digit[i] = mul_mod(sub_mod(v.r[i], partial, p), prefix_inverse_[i], p);
  }
  // Horner over the mixed radix: x = d_0 + p_0*(d_1 + p_1*(d_2 + ...)).
  BigInt x = 0;
  for (std::size_t i = l; i-- > 0;) {
    x = x * BigInt(static_cast<unsigned long>(primes_[i])) +
        BigInt(static_cast<unsigned long>(digit[i]));
  }
  return x;
}

ResidueVector ResidueSystem::add(const ResidueVector& a,
                                 const ResidueVector& b) const {
  ResidueVector out = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    out.r[i] = add_mod(a.r[i], b.r[i], primes_[i]);
  }
  return out;
}

ResidueVector ResidueSystem::sub(const ResidueVector& a,
                                 const ResidueVector& b) const {
  ResidueVector out = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    out.r[i] = sub_mod(a.r[i], b.r[i], primes_[i]);
  }
  return out;
}

ResidueSystem default_system(std::size_t n_players) {
  if (n_players == 0) {
    throw std::invalid_argument("default_system needs at least one player");
  }
  return ResidueSystem::with_capacity_bits(static_cast<unsigned>(n_players));
}

ResidueVector add_mod(const ResidueVector& a, const ResidueVector& b,
                      const ResidueSystem& system) {
  return system.add(a, b);
}

ResidueVector sub_mod(const ResidueVector& a, const ResidueVector& b,
                      const ResidueSystem& system) {
  return system.sub(a, b);
}

BigInt reconstruct(const ResidueVector& v, const ResidueSystem& system) {
  return system.reconstruct(v);
}

}  // namespace wvg
