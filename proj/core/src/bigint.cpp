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

#include "wvg/bigint.hpp"

namespace wvg {

BigInt pow2(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::vector<BigInt> pivot_factor_table(unsigned long n) {
  // fact[s] built incrementally, partner factor taken from a second pass.
  std::vector<BigInt> fact(n);
  BigInt f = 1;
  for (unsigned long s = 0; s < n; ++s) {
    fact[s] = f;
    f *= static_cast<unsigned long>(s + 1);
  }
  std::vector<BigInt> table(n);
  for (unsigned long s = 0; s < n; ++s) {
    table[s] = fact[s] * fact[n - 1 - s];
  }
  return table;
}

std::string to_decimal_string(const BigInt& value) { return value.get_str(); }

}  // namespace wvg
