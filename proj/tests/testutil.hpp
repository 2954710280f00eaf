#ifndef WVG_TESTS_TESTUTIL_HPP
#define WVG_TESTS_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wvg/bigint.hpp"
#include "wvg/game.hpp"

namespace wvgtest {

// Deterministic random weighted games for property tests. Weights may be
// zero so null-player handling is exercised; the quota is always valid.
struct GameGen {
  std::mt19937 rng;

  explicit GameGen(std::uint32_t seed) : rng(seed) {}

  wvg::WeightedGame next(std::size_t max_n = 16, wvg::Weight max_w = 50) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n);
    const std::size_t n = n_dist(rng);
    std::vector<wvg::Weight> w(n);
    std::uniform_int_distribution<wvg::Weight> w_dist(0, max_w);
    wvg::Weight total = 0;
    for (auto& wi : w) {
      wi = w_dist(rng);
      total += wi;
    }
    if (total == 0) {
      w[0] = 1 + w_dist(rng);
      total = w[0];
    }
    std::uniform_int_distribution<wvg::Weight> q_dist(1, total);
    return wvg::WeightedGame::make(q_dist(rng), std::move(w));
  }
};

inline std::string str(const wvg::BigInt& v) { return v.get_str(); }

}  // namespace wvgtest

#endif
