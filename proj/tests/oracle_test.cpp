#include <doctest.h>

#include "wvg/oracle.hpp"

using namespace wvg;
using namespace wvg::oracle;

// The oracle is the ground truth for every property test, so it gets its
// own hand-computed smoke tests.

TEST_CASE("oracle indices on [3; 2,1,1]") {
  const PowerDistribution d = enumerate_indices(WeightedGame::make(3, {2, 1, 1}));
  CHECK(d.players[0].banzhaf_raw == 3);
  CHECK(d.players[1].banzhaf_raw == 1);
  CHECK(d.players[2].banzhaf_raw == 1);
  CHECK(d.players[0].ssi_raw == 4);
  CHECK(d.players[1].ssi_raw == 1);
  CHECK(d.players[2].ssi_raw == 1);
}

TEST_CASE("oracle respects the basic axioms") {
  // symmetric pair
  const PowerDistribution sym = enumerate_indices(WeightedGame::make(2, {1, 1}));
  CHECK(sym.players[0].ssi_share == BigRat(1, 2));
  CHECK(sym.players[1].ssi_share == BigRat(1, 2));
  // null player
  const PowerDistribution nul = enumerate_indices(WeightedGame::make(1, {1, 0}));
  CHECK(nul.players[1].banzhaf_raw == 0);
  CHECK(nul.players[1].ssi_raw == 0);
  // efficiency
  BigInt sum = 0;
  for (const auto& p : nul.players) sum += p.ssi_raw;
  CHECK(sum == factorial(2));
}

TEST_CASE("oracle counts on [3; 2,1,1]") {
  const ExactCounts counts = enumerate_counts(WeightedGame::make(3, {2, 1, 1}));
  CHECK(counts.by_weight.at(0) == 1);
  CHECK(counts.by_weight.at(1) == 2);
  CHECK(counts.by_weight.at(2) == 2);
  CHECK(counts.by_weight.at(3) == 2);
  CHECK(counts.by_weight.at(4) == 1);
  CHECK(counts.by_weight_size.at({3, 2}) == 2);
  CHECK(counts.by_weight_size.at({0, 0}) == 1);
}

TEST_CASE("oracle counts are binomial for unit weights") {
  const ExactCounts counts =
      enumerate_counts(WeightedGame::make(1, std::vector<Weight>(10, 1)));
  BigInt binom = 1;
  for (unsigned x = 0; x <= 10; ++x) {
    CHECK(counts.by_weight.at(x) == binom);
    // uniform weights: c(x, s) is nonzero only on the diagonal x == s
    CHECK(counts.by_weight_size.at({x, x}) == binom);
    binom = binom * (10 - x) / (x + 1);
  }
}

TEST_CASE("oracle refuses oversized games") {
  OracleLimits limits;
  limits.max_n = 10;
  CHECK_THROWS(
      enumerate_indices(WeightedGame::make(1, std::vector<Weight>(11, 1)),
                        limits));
  CHECK_NOTHROW(
      enumerate_indices(WeightedGame::make(1, std::vector<Weight>(10, 1)),
                        limits));
}
