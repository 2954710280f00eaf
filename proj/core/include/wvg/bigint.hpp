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

#ifndef WVG_BIGINT_HPP
#define WVG_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wvg {

/// Exact integers and rationals. Cell counts, swing counts and factorial
/// products all exceed 64 bits for realistic committees, so everything that
/// leaves the fixed-width residue domain lives in these types.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt pow2(unsigned long n);
BigInt factorial(unsigned long n);

/// pivot_factor_table(n)[s] == s! * (n-1-s)! for 0 <= s <= n-1.
std::vector<BigInt> pivot_factor_table(unsigned long n);

std::string to_decimal_string(const BigInt& value);

}  // namespace wvg

#endif  // WVG_BIGINT_HPP
