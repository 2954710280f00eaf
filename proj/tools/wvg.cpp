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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wvg/counting.hpp"
#include "wvg/dataset.hpp"
#include "wvg/decimal.hpp"
#include "wvg/indices.hpp"
#include "wvg/oracle.hpp"
#include "wvg/residue.hpp"

namespace {

using namespace wvg;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Timer {
  Clock::time_point start = Clock::now();

  // timings go to stderr only, keeping data outputs byte-reproducible
  void lap(const std::string& phase) {
    const auto now = Clock::now();
    std::cerr << "timing " << phase << " "
              << std::chrono::duration<double>(now - start).count() << "s\n";
    start = now;
  }
};

int default_threads() {
  if (const char* env = std::getenv("WVG_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // hardware concurrency
}

struct QuotaArg {
  std::string text = "";
  TieRule rule = TieRule::include_equal;

  QuotaSpec spec() const {
    if (!text.empty() && text.back() == '%') {
      const BigRat r = parse_percent(text);
      return QuotaSpec::fraction(r.get_num().get_ui(), r.get_den().get_ui(),
                                 rule);
    }
    std::size_t used = 0;
    const unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument("quota must be an integer or a percentage");
    }
    return QuotaSpec::absolute(v);
  }

  std::string rule_name() const {
    return rule == TieRule::include_equal ? "include-equal" : "strict";
  }
};

struct OutputTarget {
  std::string path;  // empty = stdout

  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
  }
};

std::string primes_string(std::size_t players) {
  const ResidueSystem sys = default_system(players);
  std::string s;
  for (std::uint64_t p : sys.primes()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(p);
  }
  return s;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string dataset;
  QuotaArg quota;
  std::string index = "bz";
  std::string format = "csv";
  unsigned precision = 5;
  OutputTarget out;
  RunOptions run;
};

int run_compute(const ComputeArgs& args) {
  Timer timer;
  const Dataset ds = load_file(args.dataset);
  const Weight quota = resolve_quota(args.quota.spec(), ds.total);
  const WeightedGame game = ds.to_game(quota);
  timer.lap("load");

  const IndexKind kind = args.index == "bz"    ? IndexKind::banzhaf
                         : args.index == "ssi" ? IndexKind::shapley_shubik
                                               : IndexKind::both;
  const PowerDistribution dist = compute_power(game, kind, args.run);
  timer.lap(args.index == "bz" ? "banzhaf" : args.index == "ssi"
                ? "shapley-shubik"
                : "both-indices");

  const std::size_t kept = normalize(game).player_count();
  std::ostringstream body;
  if (args.format == "json") {
    ordered_json doc;
    doc["metadata"] = {
        {"n", ds.size()},
        {"weight_sum", std::to_string(ds.total)},
        {"quota", std::to_string(quota)},
        {"quota_rule", args.quota.text + " (" + args.quota.rule_name() + ")"},
        {"index", args.index},
        {"primes", primes_string(kept)},
        {"share_precision", args.precision},
    };
    doc["players"] = ordered_json::array();
    for (std::size_t i = 0; i < dist.player_count(); ++i) {
      const auto& p = dist.players[i];
      ordered_json row = {
          {"index", ds.members[i].index},
          {"name", ds.members[i].name},
          {"weight", std::to_string(ds.members[i].weight)},
      };
      if (dist.has_banzhaf) {
        row["banzhaf_raw"] = to_decimal_string(p.banzhaf_raw);
        row["banzhaf_share"] = format_decimal(p.banzhaf_share, args.precision);
      }
      if (dist.has_ssi) {
        row["ssi_raw"] = to_decimal_string(p.ssi_raw);
        row["ssi_share"] = format_decimal(p.ssi_share, args.precision);
      }
      doc["players"].push_back(std::move(row));
    }
    body << doc.dump(2) << '\n';
  } else {
    body << "# n: " << ds.size() << "\n# weight_sum: " << ds.total
         << "\n# quota: " << quota << " (" << args.quota.text << ", "
         << args.quota.rule_name() << ")\n# primes: " << primes_string(kept)
         << "\n";
    body << "index,name,weight";
    if (dist.has_banzhaf) body << ",banzhaf_raw,banzhaf_share";
    if (dist.has_ssi) body << ",ssi_raw,ssi_share";
    body << "\n";
    for (std::size_t i = 0; i < dist.player_count(); ++i) {
      const auto& p = dist.players[i];
      std::string name = ds.members[i].name;
      if (name.find_first_of(",\"") != std::string::npos) {
        std::string quoted = "\"";
        for (char c : name) {
          if (c == '"') quoted += '"';
          quoted += c;
        }
        quoted += '"';
        name = std::move(quoted);
      }
      body << ds.members[i].index << ',' << name << ','
           << ds.members[i].weight;
      if (dist.has_banzhaf) {
        body << ',' << to_decimal_string(p.banzhaf_raw) << ','
             << format_decimal(p.banzhaf_share, args.precision);
      }
      if (dist.has_ssi) {
        body << ',' << to_decimal_string(p.ssi_raw) << ','
             << format_decimal(p.ssi_share, args.precision);
      }
      body << '\n';
    }
  }
  args.out.write(body.str());
  timer.lap("write");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string dataset;
  std::string step = "0.1%";
  std::string players = "all";
  unsigned precision = 5;
  OutputTarget out;
  RunOptions run;
};

int run_sweep(const SweepArgs& args) {
  Timer timer;
  const Dataset ds = load_file(args.dataset);
  const BigRat step = parse_percent(args.step);
  if (step <= 0 || step > 1) {
    throw std::invalid_argument("step must be in (0%, 100%]");
  }
  const std::uint64_t num = step.get_num().get_ui();
  const std::uint64_t den = step.get_den().get_ui();

  std::vector<std::uint32_t> chosen;  // zero-based positions
  if (args.players == "all") {
    for (std::uint32_t i = 0; i < ds.size(); ++i) chosen.push_back(i);
  } else if (args.players == "top5") {
    std::vector<std::uint32_t> order(ds.size());
    for (std::uint32_t i = 0; i < ds.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return ds.members[a].weight > ds.members[b].weight;
                     });
    order.resize(std::min<std::size_t>(5, order.size()));
    chosen = order;
    std::sort(chosen.begin(), chosen.end());
  } else {
    std::stringstream list(args.players);
    std::string item;
    while (std::getline(list, item, ',')) {
      const unsigned long idx = std::stoul(item);
      if (idx < 1 || idx > ds.size()) {
        throw std::invalid_argument("player index out of range: " + item);
      }
      chosen.push_back(static_cast<std::uint32_t>(idx - 1));
    }
    if (chosen.empty()) throw std::invalid_argument("empty player list");
  }

  const auto sweep = quota_sweep(ds.weights(), num, den, args.run);
  timer.lap("sweep");

  // quota_pct rendered with the step's own precision
  const std::string& s = args.step;
  const auto dot = s.find('.');
  const unsigned pct_decimals =
      dot == std::string::npos
          ? 0
          : static_cast<unsigned>(s.size() - dot - 2);  // minus '.' and '%'

  std::ostringstream body;
  body << "quota_pct,player_index,bz_share\n";
  for (const SweepPoint& point : sweep) {
    BigRat pct = point.quota_fraction * 100;
    pct.canonicalize();
    const std::string pct_text = format_decimal(pct, pct_decimals);
    for (std::uint32_t pos : chosen) {
      body << pct_text << ',' << ds.members[pos].index << ','
           << format_decimal(point.banzhaf_shares[pos], args.precision)
           << '\n';
    }
  }
  args.out.write(body.str());
  timer.lap("write");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// diff

struct DiffArgs {
  std::string dataset_y1;
  std::string dataset_y2;
  std::string format = "csv";
  TieRule rule = TieRule::include_equal;
  OutputTarget out;
  RunOptions run;
};

int run_diff(const DiffArgs& args) {
  Timer timer;
  const Dataset ds1 = load_file(args.dataset_y1);
  const Dataset ds2 = load_file(args.dataset_y2);
  if (ds1.size() != ds2.size()) {
    throw std::invalid_argument("datasets cover different member counts");
  }

  const auto game_at = [&](const Dataset& ds, std::uint64_t num,
                           std::uint64_t den) {
    return ds.to_game(
        resolve_quota(QuotaSpec::fraction(num, den, args.rule), ds.total));
  };
  const PowerDistribution super1 =
      compute_power(game_at(ds1, 85, 100), IndexKind::both, args.run);
  timer.lap("super-y1");
  const PowerDistribution super2 =
      compute_power(game_at(ds2, 85, 100), IndexKind::both, args.run);
  timer.lap("super-y2");
  const PowerDistribution simple1 =
      compute_power(game_at(ds1, 1, 2), IndexKind::both, args.run);
  timer.lap("simple-y1");
  const PowerDistribution simple2 =
      compute_power(game_at(ds2, 1, 2), IndexKind::both, args.run);
  timer.lap("simple-y2");

  // the five heaviest members of the first dataset, excluded from the
  // reduced player set
  std::vector<std::uint32_t> order(ds1.size());
  for (std::uint32_t i = 0; i < ds1.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return ds1.members[a].weight > ds1.members[b].weight;
                   });
  std::vector<PlayerIndex> big5(order.begin(),
                                order.begin() +
                                    std::min<std::size_t>(5, order.size()));

  const DifferenceReport all =
      difference_report(super1, super2, simple1, simple2, {}, "all");
  const DifferenceReport rest = difference_report(super1, super2, simple1,
                                                  simple2, big5, "minus-top5");

  const auto pct = [](const BigRat& v) { return format_percent(v, 2); };
  std::ostringstream body;
  if (args.format == "json") {
    ordered_json doc;
    for (const DifferenceReport* r : {&all, &rest}) {
      doc[r->player_set] = {
          {"dP_super_y1", pct(r->dp_super_y1)},
          {"dP_super_y2", pct(r->dp_super_y2)},
          {"dBz_super", pct(r->dbz_super)},
          {"dSSI_super", pct(r->dssi_super)},
          {"dP_simple_y1", pct(r->dp_simple_y1)},
          {"dP_simple_y2", pct(r->dp_simple_y2)},
          {"dBz_simple", pct(r->dbz_simple)},
          {"dSSI_simple", pct(r->dssi_simple)},
      };
    }
    body << doc.dump(2) << '\n';
  } else {
    body << "player_set,dP_super_y1,dP_super_y2,dBz_super,dSSI_super,"
            "dP_simple_y1,dP_simple_y2,dBz_simple,dSSI_simple\n";
    for (const DifferenceReport* r : {&all, &rest}) {
      body << r->player_set << ',' << pct(r->dp_super_y1) << ','
           << pct(r->dp_super_y2) << ',' << pct(r->dbz_super) << ','
           << pct(r->dssi_super) << ',' << pct(r->dp_simple_y1) << ','
           << pct(r->dp_simple_y2) << ',' << pct(r->dbz_simple) << ','
           << pct(r->dssi_simple) << '\n';
    }
  }
  args.out.write(body.str());
  timer.lap("write");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oracle-check

struct OracleArgs {
  std::string dataset;
  QuotaArg quota;
  unsigned max_n = 20;
  bool corrupt = false;
  RunOptions run;
};

int run_oracle_check(const OracleArgs& args) {
  const Dataset ds = load_file(args.dataset);
  if (ds.size() > args.max_n) {
    throw std::invalid_argument(
        "dataset too large for exhaustive verification (max-n = " +
        std::to_string(args.max_n) + ")");
  }
  const Weight quota = resolve_quota(args.quota.spec(), ds.total);
  const WeightedGame game = ds.to_game(quota);

  PowerDistribution fast = compute_power(game, IndexKind::both, args.run);
  oracle::OracleLimits limits;
  limits.max_n = args.max_n;
  const PowerDistribution slow = oracle::enumerate_indices(game, limits);

  if (args.corrupt && !fast.players.empty()) {
    fast.players[0].banzhaf_raw += 1;  // test hook: force a mismatch
  }

  bool ok = true;
  for (std::size_t i = 0; i < fast.player_count(); ++i) {
    const bool match =
        fast.players[i].banzhaf_raw == slow.players[i].banzhaf_raw &&
        fast.players[i].ssi_raw == slow.players[i].ssi_raw;
    std::cout << "player " << ds.members[i].index << " (" << ds.members[i].name
              << "): ";
    if (match) {
      std::cout << "OK\n";
    } else {
      ok = false;
      std::cout << "MISMATCH fast bz=" << fast.players[i].banzhaf_raw.get_str()
                << " ssi=" << fast.players[i].ssi_raw.get_str()
                << " oracle bz=" << slow.players[i].banzhaf_raw.get_str()
                << " ssi=" << slow.players[i].ssi_raw.get_str() << "\n";
    }
  }
  std::cout << (ok ? "OK" : "MISMATCH") << "\n";
  return ok ? kExitOk : kExitMismatch;
}

void add_run_options(CLI::App* cmd, RunOptions& run) {
  cmd->add_option("--threads", run.threads,
                  "worker threads (0 = all cores, env WVG_THREADS)");
  cmd->add_flag("--parallel-primes", run.parallel_primes,
                "run per-prime passes concurrently (uses more memory)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Banzhaf and Shapley-Shubik power indices for weighted voting "
      "games, computed by dynamic programming over coalition weights"};
  app.require_subcommand(1);

  ComputeArgs compute;
  compute.run.threads = default_threads();
  CLI::App* c = app.add_subcommand(
      "compute", "Compute power indices for a dataset at a fixed quota");
  c->add_option("dataset", compute.dataset, "CSV or JSON member file")
      ->required();
  c->add_option("--quota", compute.quota.text,
                "integer quota or percentage like 85%")
      ->required();
  c->add_option("--tie-rule", compute.quota.rule,
                "include-equal: weight == fractional quota wins")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TieRule>{
              {"include-equal", TieRule::include_equal},
              {"strict", TieRule::strict}},
          CLI::ignore_case));
  c->add_option("--index", compute.index, "bz, ssi or both")
      ->check(CLI::IsMember({"bz", "ssi", "both"}));
  c->add_option("--format", compute.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  c->add_option("--precision", compute.precision, "share decimal digits");
  c->add_option("--out", compute.out.path, "output file (default stdout)");
  add_run_options(c, compute.run);

  SweepArgs sweep;
  sweep.run.threads = default_threads();
  CLI::App* s = app.add_subcommand(
      "sweep", "Banzhaf shares across the whole quota range");
  s->add_option("dataset", sweep.dataset, "CSV or JSON member file")
      ->required();
  s->add_option("--step", sweep.step, "grid step, e.g. 0.1% (default)");
  s->add_option("--players", sweep.players,
                "all, top5, or comma-separated member indices");
  s->add_option("--precision", sweep.precision, "share decimal digits");
  s->add_option("--out", sweep.out.path, "output file (default stdout)");
  add_run_options(s, sweep.run);

  DiffArgs diff;
  diff.run.threads = default_threads();
  CLI::App* d = app.add_subcommand(
      "diff",
      "Between-years and between-indices power differences at 85% and 50% "
      "quotas");
  d->add_option("dataset_y1", diff.dataset_y1, "first dataset")->required();
  d->add_option("dataset_y2", diff.dataset_y2, "second dataset")->required();
  d->add_option("--tie-rule", diff.rule, "fractional quota tie rule")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TieRule>{
              {"include-equal", TieRule::include_equal},
              {"strict", TieRule::strict}},
          CLI::ignore_case));
  d->add_option("--format", diff.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  d->add_option("--out", diff.out.path, "output file (default stdout)");
  add_run_options(d, diff.run);

  OracleArgs oracle_args;
  oracle_args.run.threads = default_threads();
  CLI::App* o = app.add_subcommand(
      "oracle-check",
      "Cross-check the fast path against exhaustive enumeration");
  o->add_option("dataset", oracle_args.dataset, "CSV or JSON member file")
      ->required();
  o->add_option("--quota", oracle_args.quota.text, "integer quota or percent")
      ->required();
  o->add_option("--tie-rule", oracle_args.quota.rule, "fractional tie rule")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TieRule>{
              {"include-equal", TieRule::include_equal},
              {"strict", TieRule::strict}},
          CLI::ignore_case));
  o->add_option("--max-n", oracle_args.max_n,
                "refuse datasets larger than this");
  o->add_flag("--corrupt-fast-path", oracle_args.corrupt)->group("");
  add_run_options(o, oracle_args.run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c) return run_compute(compute);
    if (*s) return run_sweep(sweep);
    if (*d) return run_diff(diff);
    if (*o) return run_oracle_check(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
