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

#include "wvg/decimal.hpp"

#include <cctype>
#include <stdexcept>

namespace wvg {

namespace {

// Rounds num/den (den > 0) to the nearest integer, ties to even.
BigInt round_half_even(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const BigInt twice = 2 * r;
  const int cmp = mpz_cmp(twice.get_mpz_t(), den.get_mpz_t());
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) {
    q += 1;
  }
  return q;
}

}  // namespace

std::string format_decimal(const BigRat& value, unsigned decimals) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, decimals);
  const BigInt scaled =
      round_half_even(value.get_num() * scale, value.get_den());

  const bool negative = scaled < 0;
  std::string digits = to_decimal_string(negative ? BigInt(-scaled) : scaled);
  if (decimals == 0) {
    return negative && digits != "0" ? "-" + digits : digits;
  }
  if (digits.size() <= decimals) {
    digits.insert(0, decimals + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - decimals, ".");
  if (negative && digits.find_first_not_of("0.") != std::string::npos) {
    digits.insert(0, "-");
  }
  return digits;
}

std::string format_percent(const BigRat& value, unsigned decimals) {
  BigRat scaled = value * 100;
  scaled.canonicalize();
  return format_decimal(scaled, decimals) + "%";
}

BigRat parse_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty decimal literal");
  }
  std::string intpart, fracpart;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("malformed decimal literal");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_dot ? fracpart : intpart) += c;
    } else {
      throw std::invalid_argument(std::string("malformed decimal literal: ") +
                                  std::string(text));
    }
  }
  if (intpart.empty() && fracpart.empty()) {
    throw std::invalid_argument("malformed decimal literal");
  }
  BigInt num(intpart.empty() ? "0" : intpart);
  BigInt den = 1;
  for (char c : fracpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat parse_percent(std::string_view text) {
  if (text.empty() || text.back() != '%') {
    throw std::invalid_argument("percentage must end with '%'");
  }
  text.remove_suffix(1);
  BigRat r = parse_decimal(text) / 100;
  r.canonicalize();
  return r;
}

}  // namespace wvg
