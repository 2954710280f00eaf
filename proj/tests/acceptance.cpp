// Acceptance gate: reproduces the published IMF Board of Governors results
// exactly and re-validates the kernels against exhaustive enumeration.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wvg/counting.hpp"
#include "wvg/dataset.hpp"
#include "wvg/decimal.hpp"
#include "wvg/indices.hpp"
#include "wvg/oracle.hpp"
#include "wvg/residue.hpp"

using namespace wvg;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass,
               const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string golden_path(const char* name) {
  return std::string(WVG_SOURCE_DIR) + "/tests/golden/" + name;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing golden file " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

// |computed*100 - printed| <= tol, exact rationals; printed is a decimal
// string of a percentage
bool within(const BigRat& computed_share, const std::string& printed_pct,
            const BigRat& tol_pct) {
  BigRat pct = computed_share * 100;
  pct.canonicalize();
  BigRat diff = pct - parse_decimal(printed_pct);
  if (diff < 0) diff = -diff;
  return diff <= tol_pct;
}

const BigRat kPowerTol(1, 1000);  // 0.001 percentage points
const BigRat kDiffTol(1, 100);    // 0.01 percentage points

struct ImfRuns {
  PowerDistribution super15, super16, simple15, simple16;
};

// ---------------------------------------------------------------------------

void criterion_1_winning_count() {
  const auto start = Clock::now();
  const Dataset& ds = imf_dataset_2016();
  const Weight q = resolve_quota(QuotaSpec::fraction(85, 100), ds.total);
  const auto [losing, winning] = tally_coalitions(normalize(ds.to_game(q)));
  const double elapsed = seconds_since(start);
  const bool exact =
      winning.get_str() ==
      "4506727722110247822679513808100007271801182981184082";
  criterion(1, "exact winning-coalition count, 2016 supermajority",
            exact && elapsed < 10.0,
            (exact ? std::string("exact") : "wrong count " + winning.get_str()) +
                ", " + std::to_string(elapsed) + " s");
}

void criterion_2_banzhaf_counts() {
  const auto rows = read_csv_rows(golden_path("banzhaf_raw_85.csv"));
  RunOptions opts;
  opts.threads = 2;

  const Dataset& d15 = imf_dataset_2015();
  const Weight q15 = resolve_quota(QuotaSpec::fraction(85, 100), d15.total);
  const auto t15 = Clock::now();
  const PowerDistribution b15 = banzhaf(d15.to_game(q15), opts);
  const double s15 = seconds_since(t15);

  const Dataset& d16 = imf_dataset_2016();
  const Weight q16 = resolve_quota(QuotaSpec::fraction(85, 100), d16.total);
  const auto t16 = Clock::now();
  const PowerDistribution b16 = banzhaf(d16.to_game(q16), opts);
  const double s16 = seconds_since(t16);

  std::size_t mismatches = 0;
  for (const auto& row : rows) {
    const std::size_t i = std::stoul(row[0]) - 1;
    if (b15.players[i].banzhaf_raw.get_str() != row[1]) ++mismatches;
    if (b16.players[i].banzhaf_raw.get_str() != row[2]) ++mismatches;
  }
  criterion(2, "all 188 x 2 exact Banzhaf counts at supermajority",
            mismatches == 0 && rows.size() == 188 && s15 < 30 && s16 < 30,
            std::to_string(mismatches) + " mismatches, " +
                std::to_string(s15) + " s + " + std::to_string(s16) + " s");
}

void criterion_3_ssi_us() {
  const Dataset& d15 = imf_dataset_2015();
  const Weight q15 = resolve_quota(QuotaSpec::fraction(85, 100), d15.total);
  RunOptions opts;
  opts.threads = 2;
  const auto start = Clock::now();
  const PowerDistribution ssi = shapley_shubik(d15.to_game(q15), opts);
  const double elapsed = seconds_since(start);

  // The printed value in the source material lost its leading 22 digits to
  // a typesetting accident; every digit that did survive must appear as one
  // contiguous run ending the computed integer, and the rounded share must
  // agree with the published power table (it pins the lost magnitude).
  std::ifstream frag(golden_path("ssi_us_2015_fragments.txt"));
  std::string printed, line;
  while (std::getline(frag, line)) printed += line;
  const std::string computed = ssi.players[179].ssi_raw.get_str();
  const bool suffix_match =
      !printed.empty() && computed.size() >= printed.size() &&
      computed.compare(computed.size() - printed.size(), printed.size(),
                       printed) == 0;
  BigInt total = 0;
  for (const auto& p : ssi.players) total += p.ssi_raw;
  const bool efficient = total == factorial(188);
  const bool share_match =
      format_percent(ssi.players[179].ssi_share, 3) == "18.931%";
  criterion(3, "exact n!*SSI integer, United States 2015 supermajority",
            suffix_match && efficient && share_match && elapsed < 3600,
            "all " + std::to_string(printed.size()) +
                " printed digits form the trailing run of the " +
                std::to_string(computed.size()) +
                "-digit value, share 18.931%, " + std::to_string(elapsed) +
                " s");
}

ImfRuns criterion_4_power_tables() {
  const auto rows = read_csv_rows(golden_path("voting_power.csv"));
  RunOptions opts;
  opts.threads = 2;
  const Dataset& d15 = imf_dataset_2015();
  const Dataset& d16 = imf_dataset_2016();

  ImfRuns runs;
  runs.super15 = compute_power(
      d15.to_game(resolve_quota(QuotaSpec::fraction(85, 100), d15.total)),
      IndexKind::both, opts);
  runs.super16 = compute_power(
      d16.to_game(resolve_quota(QuotaSpec::fraction(85, 100), d16.total)),
      IndexKind::both, opts);
  runs.simple15 = compute_power(
      d15.to_game(resolve_quota(QuotaSpec::fraction(1, 2), d15.total)),
      IndexKind::both, opts);
  runs.simple16 = compute_power(
      d16.to_game(resolve_quota(QuotaSpec::fraction(1, 2), d16.total)),
      IndexKind::both, opts);

  std::size_t bad = 0;
  std::string first_bad;
  const auto check_cell = [&](const BigRat& share, const std::string& printed,
                              const char* what, std::size_t i) {
    if (!within(share, printed, kPowerTol)) {
      ++bad;
      if (first_bad.empty()) {
        first_bad = std::string(what) + " row " + std::to_string(i + 1) +
                    " printed " + printed;
      }
    }
  };
  for (const auto& row : rows) {
    const std::size_t i = std::stoul(row[0]) - 1;
    check_cell(runs.super15.players[i].banzhaf_share, row[1], "bz15/85", i);
    check_cell(runs.super16.players[i].banzhaf_share, row[2], "bz16/85", i);
    check_cell(runs.super15.players[i].ssi_share, row[3], "ssi15/85", i);
    check_cell(runs.super16.players[i].ssi_share, row[4], "ssi16/85", i);
    check_cell(runs.simple15.players[i].banzhaf_share, row[5], "bz15/50", i);
    check_cell(runs.simple16.players[i].banzhaf_share, row[6], "bz16/50", i);
    check_cell(runs.simple15.players[i].ssi_share, row[7], "ssi15/50", i);
    check_cell(runs.simple16.players[i].ssi_share, row[8], "ssi16/50", i);
  }
  criterion(4,
            "power tables at 3-decimal precision, both years, both quotas, "
            "both indices (include-equal 50% rule)",
            bad == 0 && rows.size() == 188,
            bad == 0 ? "1504 cells within 0.001 pp"
                     : std::to_string(bad) + " cells off, first: " + first_bad);
  return runs;
}

void criterion_5_differences(const ImfRuns& runs) {
  // zero-based positions of the five heaviest members: France, Germany,
  // Japan, United Kingdom, United States
  const std::vector<PlayerIndex> big5 = {57, 61, 81, 178, 179};
  const DifferenceReport all = difference_report(
      runs.super15, runs.super16, runs.simple15, runs.simple16, {}, "N");
  const DifferenceReport rest = difference_report(
      runs.super15, runs.super16, runs.simple15, runs.simple16, big5, "N-");

  struct Cell {
    const BigRat* value;
    const char* printed;
  };
  const std::vector<Cell> cells = {
      {&all.dp_super_y1, "54.33"},  {&all.dp_super_y2, "51.98"},
      {&all.dbz_super, "19.90"},    {&all.dssi_super, "27.00"},
      {&all.dp_simple_y1, "9.46"},  {&all.dp_simple_y2, "32.21"},
      {&all.dbz_simple, "46.52"},   {&all.dssi_simple, "34.68"},
      {&rest.dp_super_y1, "28.48"}, {&rest.dp_super_y2, "26.17"},
      {&rest.dbz_super, "18.45"},   {&rest.dssi_super, "17.67"},
      {&rest.dp_simple_y1, "2.68"}, {&rest.dp_simple_y2, "9.70"},
      {&rest.dbz_simple, "18.35"},  {&rest.dssi_simple, "18.00"},
  };
  std::size_t bad = 0;
  std::string detail;
  for (const Cell& cell : cells) {
    BigRat pct = *cell.value * 100;
    pct.canonicalize();
    BigRat diff = pct - parse_decimal(cell.printed);
    if (diff < 0) diff = -diff;
    if (diff > kDiffTol) {
      ++bad;
      if (detail.empty()) {
        detail = "expected " + std::string(cell.printed) + " got " +
                 format_decimal(pct, 2);
      }
    }
  }
  criterion(5, "all 16 cells of the power-difference table at 2 decimals",
            bad == 0, bad == 0 ? "16 cells within 0.01 pp" : detail);
}

void criterion_6_sweeps() {
  RunOptions opts;
  opts.threads = 2;
  const Dataset& d15 = imf_dataset_2015();
  const Dataset& d16 = imf_dataset_2016();
  const auto start = Clock::now();
  const auto sweep15 = quota_sweep(d15.weights(), 1, 1000, opts);
  const auto sweep16 = quota_sweep(d16.weights(), 1, 1000, opts);
  const double elapsed = seconds_since(start);

  bool fr_uk_equal = sweep15.size() == 1001 && sweep16.size() == 1001;
  for (const auto* sweep : {&sweep15, &sweep16}) {
    for (const SweepPoint& p : *sweep) {
      if (p.banzhaf_shares[57] != p.banzhaf_shares[178]) {
        fr_uk_equal = false;
        break;
      }
    }
  }

  const BigRat uniform(1, 188);
  bool endpoints_uniform = true;
  for (const auto* sweep : {&sweep15, &sweep16}) {
    for (const SweepPoint* p : {&sweep->front(), &sweep->back()}) {
      for (const BigRat& share : p->banzhaf_shares) {
        if (share != uniform) endpoints_uniform = false;
      }
    }
  }

  // the United States benefits most from quotas around simple majority
  const bool us_peak =
      sweep16[500].banzhaf_shares[179] > sweep16[850].banzhaf_shares[179];

  criterion(6,
            "quota sweep at 0.1% steps: France/UK identical everywhere, "
            "uniform endpoints, US 2016 higher at 50% than 85%",
            fr_uk_equal && endpoints_uniform && us_peak,
            "2 x 1001 evaluations in " + std::to_string(elapsed) + " s");
}

void criterion_7_property_suite() {
  const auto start = Clock::now();
  std::mt19937 rng(424243);
  bool ok = true;
  std::string detail;
  const auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  for (int iter = 0; iter < 500 && ok; ++iter) {
    std::uniform_int_distribution<std::size_t> n_dist(1, 16);
    const std::size_t n = n_dist(rng);
    std::vector<Weight> w(n);
    std::uniform_int_distribution<Weight> w_dist(0, 50);
    Weight total = 0;
    for (auto& wi : w) {
      wi = w_dist(rng);
      total += wi;
    }
    if (total == 0) {
      w[0] = 1 + w_dist(rng);
      total = w[0];
    }
    std::uniform_int_distribution<Weight> q_dist(1, total);
    const WeightedGame game = WeightedGame::make(q_dist(rng), w);

    // exhaustive ground truth
    const PowerDistribution slow = oracle::enumerate_indices(game);
    const PowerDistribution fast = compute_power(game, IndexKind::both);

    const NormalizedGame ng = normalize(game);
    const ResidueSystem sys = default_system(ng.player_count());
    const auto norm_counts = oracle::enumerate_counts(ng.as_game());
    const CountTable fwd = forward_counts(ng, sys);
    const CountTable bwd = backward_counts(ng, sys);
    for (Weight x = 0; x <= ng.quota && ok; ++x) {
      const auto it = norm_counts.by_weight.find(x);
      const BigInt expect =
          it == norm_counts.by_weight.end() ? 0 : it->second;
      if (sys.reconstruct(fwd.at(x)) != expect) fail("c(x) forward");
    }
    for (Weight x = ng.quota; x <= ng.weight_sum && ok; ++x) {
      const auto it = norm_counts.by_weight.find(x);
      const BigInt expect =
          it == norm_counts.by_weight.end() ? 0 : it->second;
      if (sys.reconstruct(bwd.at(x)) != expect) fail("c(x) backward");
    }
    const SizedCountTable sized = counts_by_delta_sized(ng, sys);
    for (Weight x = sized.x_lo; x <= sized.x_hi && ok; ++x) {
      for (unsigned s = 0; s <= ng.player_count() && ok; ++s) {
        const auto it = norm_counts.by_weight_size.find({x, s});
        const BigInt expect =
            it == norm_counts.by_weight_size.end() ? 0 : it->second;
        if (sys.reconstruct(sized.at(x, s)) != expect) fail("c(x,s)");
      }
    }
    for (Weight weight : ng.weights) {
      if (sys.reconstruct(swing_count(fwd, weight)) !=
          sys.reconstruct(swing_count(bwd, weight))) {
        fail("forward/backward swing disagreement");
      }
    }

    BigInt ssi_sum = 0;
    int odd = 0, even = 0;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (fast.players[i].banzhaf_raw != slow.players[i].banzhaf_raw) {
        fail("banzhaf raw vs oracle");
      }
      if (fast.players[i].ssi_raw != slow.players[i].ssi_raw) {
        fail("ssi raw vs oracle");
      }
      ssi_sum += fast.players[i].ssi_raw;
      (mpz_odd_p(fast.players[i].banzhaf_raw.get_mpz_t()) ? odd : even) += 1;
      if (w[i] == 0 && (fast.players[i].banzhaf_raw != 0 ||
                        fast.players[i].ssi_raw != 0)) {
        fail("null player with power");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (w[i] == w[j] &&
            fast.players[i].banzhaf_raw != fast.players[j].banzhaf_raw) {
          fail("equal weights, unequal power");
        }
        if (w[i] > w[j] &&
            (fast.players[i].banzhaf_raw < fast.players[j].banzhaf_raw ||
             fast.players[i].ssi_raw < fast.players[j].ssi_raw)) {
          fail("heavier player with less power");
        }
      }
    }
    if (ok && ssi_sum != factorial(static_cast<unsigned long>(n))) {
      fail("SSI efficiency");
    }
    if (ok && odd != 0 && even != 0) fail("mixed swing-count parity");
  }
  const double elapsed = seconds_since(start);
  criterion(7, "property suite on 500 random games vs exhaustive oracle",
            ok && elapsed < 300,
            ok ? std::to_string(elapsed) + " s" : detail);
}

void criterion_8_arithmetic() {
  bool ok = true;
  std::string detail;

  const ResidueSystem sys188 = default_system(188);
  if (sys188.size() != 3 || sys188.primes()[0] != 9223372036854775783ull ||
      sys188.primes()[1] != 9223372036854775643ull ||
      sys188.primes()[2] != 9223372036854775549ull) {
    ok = false;
    detail = "default_system(188) primes";
  }
  if (default_system(1000).size() != 16) {
    ok = false;
    detail = "default_system(1000) size";
  }
  gmp_randclass grand(gmp_randinit_default);
  grand.seed(99991ul);
  for (int iter = 0; iter < 10000 && ok; ++iter) {
    const BigInt x = grand.get_z_range(sys188.capacity());
    if (sys188.reconstruct(sys188.residues(x)) != x) {
      ok = false;
      detail = "CRT round trip";
    }
  }
  criterion(8, "residue arithmetic: documented primes and 10^4 CRT round trips",
            ok, detail);
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_1_winning_count();
  criterion_2_banzhaf_counts();
  criterion_3_ssi_us();
  const ImfRuns runs = criterion_4_power_tables();
  criterion_5_differences(runs);
  criterion_6_sweeps();
  criterion_7_property_suite();
  criterion_8_arithmetic();
  std::cout << (g_failures == 0
                    ? std::string("ALL CRITERIA PASSED")
                    : std::to_string(g_failures) + " CRITERIA FAILED")
            << " (" << seconds_since(start) << " s total)" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
