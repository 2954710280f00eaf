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

#include "wvg/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wvg {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

// One CSV record; supports double-quoted fields with doubled inner quotes.
std::vector<std::string> split_csv(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) parse_fail(lineno, "unterminated quoted field");
  fields.push_back(cur);
  return fields;
}

std::uint64_t parse_uint(const std::string& text, std::size_t lineno,
                         const char* what) {
  const std::string t = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    parse_fail(lineno, std::string(what) + " is not a non-negative integer: '" +
                           t + "'");
  }
  return value;
}

Dataset finalize(std::vector<MemberRecord> members, std::string year) {
  if (members.empty()) {
    throw std::runtime_error("dataset has no members");
  }
  std::sort(members.begin(), members.end(),
            [](const MemberRecord& a, const MemberRecord& b) {
              return a.index < b.index;
            });
  Dataset ds;
  ds.year = std::move(year);
  ds.total = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].index != i + 1) {
      const bool dup = i > 0 && members[i].index == members[i - 1].index;
      throw std::runtime_error(
          dup ? "duplicate member index " + std::to_string(members[i].index)
              : "member indices must be contiguous from 1 (problem near " +
                    std::to_string(i + 1) + ")");
    }
    if (members[i].weight == 0) {
      throw std::runtime_error("member " + std::to_string(members[i].index) +
                               " has non-positive weight");
    }
    ds.total += members[i].weight;
  }
  ds.members = std::move(members);
  return ds;
}

}  // namespace

std::vector<Weight> Dataset::weights() const {
  std::vector<Weight> w;
  w.reserve(members.size());
  for (const MemberRecord& m : members) w.push_back(m.weight);
  return w;
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const MemberRecord& m : members) out.push_back(m.name);
  return out;
}

WeightedGame Dataset::to_game(Weight quota) const {
  return WeightedGame::make(quota, weights(), names());
}

Dataset load_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<MemberRecord> members;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.size() >= 3 && line[0] == '\xEF' &&
        line[1] == '\xBB' && line[2] == '\xBF') {
      line.erase(0, 3);  // UTF-8 BOM
    }
    if (trim(line).empty()) continue;
    if (!saw_header) {
      const auto header = split_csv(line, lineno);
      if (header.size() != 3 || trim(header[0]) != "index" ||
          trim(header[1]) != "name" || trim(header[2]) != "weight") {
        parse_fail(lineno, "expected header 'index,name,weight'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split_csv(line, lineno);
    if (fields.size() != 3) {
      parse_fail(lineno, "expected 3 fields, got " +
                             std::to_string(fields.size()));
    }
    MemberRecord m;
    const std::uint64_t idx = parse_uint(fields[0], lineno, "index");
    if (idx == 0 || idx > UINT32_MAX) parse_fail(lineno, "index out of range");
    m.index = static_cast<std::uint32_t>(idx);
    m.name = trim(fields[1]);
    m.weight = parse_uint(fields[2], lineno, "weight");
    if (m.weight == 0) parse_fail(lineno, "weight must be positive");
    members.push_back(std::move(m));
  }
  if (!saw_header) {
    throw std::runtime_error("line 1: empty file, expected CSV header");
  }
  return finalize(std::move(members), "");
}

Dataset load_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_csv(in);
}

Dataset load_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("members") ||
      !doc["members"].is_array()) {
    throw std::runtime_error("JSON dataset needs a 'members' array");
  }
  std::string year;
  if (doc.contains("year")) {
    year = doc["year"].is_string() ? doc["year"].get<std::string>()
                                   : doc["year"].dump();
  }
  std::vector<MemberRecord> members;
  for (const auto& item : doc["members"]) {
    if (!item.is_object() || !item.contains("index") ||
        !item.contains("name") || !item.contains("weight")) {
      throw std::runtime_error(
          "each member needs 'index', 'name' and 'weight'");
    }
    if (!item["weight"].is_number_unsigned()) {
      throw std::runtime_error("member weight must be a positive integer");
    }
    MemberRecord m;
    m.index = item["index"].get<std::uint32_t>();
    m.name = item["name"].get<std::string>();
    m.weight = item["weight"].get<std::uint64_t>();
    members.push_back(std::move(m));
  }
  return finalize(std::move(members), std::move(year));
}

Dataset load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_json(in);
}

Dataset load_file(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return ext == ".json" ? load_json_file(path) : load_csv_file(path);
}

void save_csv(const Dataset& ds, std::ostream& out) {
  out << "index,name,weight\n";
  for (const MemberRecord& m : ds.members) {
    std::string name = m.name;
    if (name.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      quoted += '"';
      name = std::move(quoted);
    }
    out << m.index << ',' << name << ',' << m.weight << '\n';
  }
}

void save_json(const Dataset& ds, std::ostream& out) {
  nlohmann::ordered_json doc;
  if (!ds.year.empty()) doc["year"] = ds.year;
  doc["members"] = nlohmann::ordered_json::array();
  for (const MemberRecord& m : ds.members) {
    doc["members"].push_back(nlohmann::ordered_json{
        {"index", m.index}, {"name", m.name}, {"weight", m.weight}});
  }
  out << doc.dump(2) << '\n';
}

std::vector<BigRat> weight_shares(const Dataset& ds) {
  std::vector<BigRat> shares;
  shares.reserve(ds.members.size());
  for (const MemberRecord& m : ds.members) {
    BigRat share(static_cast<unsigned long>(m.weight),
                 static_cast<unsigned long>(ds.total));
    share.canonicalize();
    shares.push_back(std::move(share));
  }
  return shares;
}

namespace {

Dataset parse_embedded(const char* text, const char* year) {
  std::istringstream in(text);
  Dataset ds = load_csv(in);
  ds.year = year;
  return ds;
}

constexpr const char* kImf2015 =
#include "data/imf_2015_csv.inc"
    ;
constexpr const char* kImf2016 =
#include "data/imf_2016_csv.inc"
    ;

}  // namespace

const Dataset& imf_dataset_2015() {
  static const Dataset ds = parse_embedded(kImf2015, "2015");
  return ds;
}

const Dataset& imf_dataset_2016() {
  static const Dataset ds = parse_embedded(kImf2016, "2016");
  return ds;
}

}  // namespace wvg
