#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wvg/dataset.hpp"
#include "wvg/decimal.hpp"

using namespace wvg;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("bundled IMF datasets carry the published totals") {
  const Dataset& d15 = imf_dataset_2015();
  const Dataset& d16 = imf_dataset_2016();
  CHECK(d15.size() == 188);
  CHECK(d16.size() == 188);
  CHECK(d15.total == 2520571);
  CHECK(d16.total == 3572928);
  CHECK(d16.members[179].name == "United States");
  CHECK(d16.members[179].weight == 830988);
  CHECK(d15.members[174].name == "Tuvalu");
  CHECK(d15.members[174].weight == 756);
  // France and the United Kingdom tie in both years
  CHECK(d15.members[57].weight == d15.members[178].weight);
  CHECK(d16.members[57].weight == d16.members[178].weight);
}

TEST_CASE("weight shares render to the published percentages") {
  const auto shares15 = weight_shares(imf_dataset_2015());
  const auto shares16 = weight_shares(imf_dataset_2016());
  CHECK(format_percent(shares16[179], 3) == "23.258%");
  CHECK(format_percent(shares15[174], 3) == "0.030%");

  std::ifstream golden(std::string(WVG_SOURCE_DIR) +
                       "/tests/golden/weight_shares.csv");
  REQUIRE(golden.good());
  std::string line;
  std::getline(golden, line);  // header
  std::size_t row = 0;
  while (std::getline(golden, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', line.find(',') + 1);
    REQUIRE(c2 != std::string::npos);
    const std::string p15 = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string p16 = line.substr(c2 + 1);
    CHECK(format_percent(shares15[row], 3) == p15 + "%");
    CHECK(format_percent(shares16[row], 3) == p16 + "%");
    ++row;
  }
  CHECK(row == 188);
}

TEST_CASE("single-member dataset owns the full share") {
  std::istringstream in("index,name,weight\n1,Solo,42\n");
  const Dataset ds = load_csv(in);
  CHECK(weight_shares(ds) == std::vector<BigRat>{BigRat(1)});
}

TEST_CASE("csv roundtrip preserves content") {
  const Dataset& ds = imf_dataset_2016();
  std::ostringstream out;
  save_csv(ds, out);
  std::istringstream in(out.str());
  const Dataset back = load_csv(in);
  REQUIRE(back.size() == ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(back.members[i].index == ds.members[i].index);
    CHECK(back.members[i].name == ds.members[i].name);
    CHECK(back.members[i].weight == ds.members[i].weight);
  }
  // and the serialized form matches the repository file byte for byte
  CHECK(out.str() == slurp(std::string(WVG_SOURCE_DIR) + "/data/imf2016.csv"));
}

TEST_CASE("json roundtrip preserves content") {
  const Dataset& ds = imf_dataset_2015();
  std::ostringstream out;
  save_json(ds, out);
  std::istringstream in(out.str());
  const Dataset back = load_json(in);
  CHECK(back.year == "2015");
  REQUIRE(back.size() == ds.size());
  CHECK(back.members[57].name == ds.members[57].name);
  CHECK(back.total == ds.total);
}

TEST_CASE("quoted names with commas survive") {
  std::istringstream in(
      "index,name,weight\n1,\"Congo, Republic of\",5\n2,Benin,3\n");
  const Dataset ds = load_csv(in);
  CHECK(ds.members[0].name == "Congo, Republic of");
  CHECK(ds.total == 8);
}

TEST_CASE("loader rejects malformed input") {
  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS(load_csv(in));
  };
  reject("");                                      // empty file
  reject("index,name\n1,x\n");                     // bad header
  reject("index,name,weight\n1,x,0\n");            // non-positive weight
  reject("index,name,weight\n1,x,2.5\n");          // non-integer weight
  reject("index,name,weight\n1,x,5\n1,y,5\n");     // duplicate index
  reject("index,name,weight\n2,x,5\n");            // not contiguous from 1
  reject("index,name,weight\n1,\"x,5\n");          // unterminated quote
}

TEST_CASE("parse errors name the offending line") {
  std::istringstream in("index,name,weight\n1,x,5\n2,y,oops\n");
  try {
    load_csv(in);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("dataset converts to a labeled game") {
  const Dataset& ds = imf_dataset_2016();
  const WeightedGame g = ds.to_game(3036989);
  CHECK(g.player_count() == 188);
  CHECK(g.labels[179] == "United States");
  CHECK(g.weight_sum() == 3572928);
}
