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

#ifndef WVG_DECIMAL_HPP
#define WVG_DECIMAL_HPP

#include <string>
#include <string_view>

#include "wvg/bigint.hpp"

namespace wvg {

/// Fixed-point rendering of an exact rational with round-half-even ties,
/// e.g. format_decimal(1/3, 4) == "0.3333". decimals == 0 drops the point.
std::string format_decimal(const BigRat& value, unsigned decimals);

/// Same, scaled by 100 and suffixed with '%'.
std::string format_percent(const BigRat& value, unsigned decimals);

/// Parses "12", "12.5", ".5" into an exact rational. Throws
/// std::invalid_argument on anything else (exponents, signs, empty).
BigRat parse_decimal(std::string_view text);

/// Parses "85%" or "0.1%" into the fraction of one (85% -> 17/20).
BigRat parse_percent(std::string_view text);

}  // namespace wvg

#endif  // WVG_DECIMAL_HPP
