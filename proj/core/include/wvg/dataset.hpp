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

#ifndef WVG_DATASET_HPP
#define WVG_DATASET_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "wvg/bigint.hpp"
#include "wvg/game.hpp"

namespace wvg {

struct MemberRecord {
  std::uint32_t index = 0;  // 1-based, contiguous
  std::string name;
  Weight weight = 0;  // votes, >= 1
};

/// A named voting body: member list plus the weight total. Immutable after
/// load; loaders validate contiguity of indices and positive weights.
struct Dataset {
  std::string year;  // free-form tag, may be empty
  std::vector<MemberRecord> members;
  Weight total = 0;

  std::size_t size() const { return members.size(); }
  std::vector<Weight> weights() const;
  std::vector<std::string> names() const;
  WeightedGame to_game(Weight quota) const;
};

/// CSV with header "index,name,weight"; names containing commas or quotes
/// are double-quoted. Parse errors carry the offending line number.
Dataset load_csv(std::istream& in);
Dataset load_csv_file(const std::string& path);

/// {"year": ..., "members": [{"index":..., "name":..., "weight":...}]}
Dataset load_json(std::istream& in);
Dataset load_json_file(const std::string& path);

/// Dispatches on the filename extension (.json vs everything else).
Dataset load_file(const std::string& path);

void save_csv(const Dataset& ds, std::ostream& out);
void save_json(const Dataset& ds, std::ostream& out);

/// Exact member shares weight/total, in member order.
std::vector<BigRat> weight_shares(const Dataset& ds);

/// IMF Board of Governors voting weights, bundled with the library.
/// 2015 totals 2520571 votes, 2016 totals 3572928 votes, 188 members each.
const Dataset& imf_dataset_2015();
const Dataset& imf_dataset_2016();

}  // namespace wvg

#endif  // WVG_DATASET_HPP
