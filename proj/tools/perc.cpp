// Command-line front end: exact walk counts, ring censuses, series brackets,
// and Monte Carlo estimators, emitted as csv or json tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "perc/boundary_walks.hpp"
#include "perc/cluster.hpp"
#include "perc/lattice.hpp"
#include "perc/montecarlo.hpp"
#include "perc/series.hpp"

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : t.meta) j["config"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : t.meta) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

std::string cycle_to_string(const perc::Cycle& c) {
  std::string s;
  for (perc::Vertex v : c.vertices) {
    s += std::to_string(v.x);
    s += ":";
    s += std::to_string(v.y);
    s += ";";
  }
  return s;
}

// DFS count over successor candidates; the independent check behind the
// validate subcommand's walk test.
void dfs_walks(perc::Vertex u, perc::Vertex v, int remaining, perc::BigInt& plus,
               perc::BigInt& times) {
  if (remaining == 0) {
    if (perc::phi_adjacent(u, v))
      ++plus;
    else
      ++times;
    return;
  }
  for (perc::Vertex w : perc::successor_candidates(u, v))
    dfs_walks(v, w, remaining - 1, plus, times);
}

struct CommonOpts {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 0;
  int workers = 1;
};

int run_emit(const Table& t, const CommonOpts& common) {
  if (common.output.empty()) {
    emit(t, common.format, std::cout);
  } else {
    std::ofstream f(common.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << common.output << "\n";
      return 2;
    }
    emit(t, common.format, f);
  }
  return 0;
}

void add_estimate(std::vector<std::string>& row, const perc::SimEstimate& e) {
  row.push_back(fmt12(e.value));
  row.push_back(fmt12(e.std_error));
}

int run_validate(const CommonOpts& common) {
  using namespace perc;
  Table t;
  t.meta = {{"subcommand", "validate"}, {"seed", std::to_string(common.seed)}};
  t.columns = {"check", "pass"};
  bool all_ok = true;
  auto check = [&](const std::string& name, bool ok) {
    t.rows.push_back({name, ok ? "1" : "0"});
    all_ok = all_ok && ok;
  };

  {  // transfer-matrix counts vs direct DFS enumeration
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
      BigInt plus = 0, times = 0;
      for (Vertex first : walk_first_steps)
        dfs_walks(Vertex{0, 0}, first, n - 1, plus, times);
      WalkCounts wc = walk_counts(n);
      ok = plus == wc.s_plus && times == wc.s_times;
    }
    check("walk_counts_match_dfs", ok);
  }
  {  // growth bound, equality at n = 1
    bool ok = walk_counts(1).s_n == 4 && walk_count_bound(1) == 4.0;
    for (int n = 1; n <= 30 && ok; ++n)
      ok = walk_counts(n).s_n.convert_to<double>() <= walk_count_bound(n);
    check("walk_growth_bound", ok);
  }
  {  // small censuses: diamond uniqueness, invariants, successor membership
    bool ok = enumerate_cycles(2).r_k() == 1;
    for (int k = 2; k <= 3 && ok; ++k) {
      CycleCensus census = enumerate_cycles(k);
      ok = BigInt(census.r_k()) <= cycle_count_bound(k);
      for (const Cycle& c : census.cycles) {
        if (!ok) break;
        try {
          validate_cycle(c);
        } catch (const CycleValidation&) {
          ok = false;
          break;
        }
        std::size_t n = c.length();
        for (std::size_t i = 0; i < n && ok; ++i) {
          Vertex u = c.vertices[i], v = c.vertices[(i + 1) % n],
                 w = c.vertices[(i + 2) % n];
          auto cand = successor_candidates(u, v);
          ok = std::find(cand.begin(), cand.end(), w) != cand.end();
        }
      }
    }
    check("cycle_census_sound", ok);
  }
  {  // tail bound diverges exactly below 3 - sqrt(5)
    bool ok = true;
    for (int m = 2; m <= 10; ++m) {
      ok = ok && std::isfinite(tail_bound(0.764, m));
      ok = ok && std::isinf(tail_bound(0.763, m));
    }
    check("tail_divergence_boundary", ok);
  }
  {  // one-term series equals the closed form c (1-c)^4
    double c = 0.5;
    double got = partial_sum(c, 2).partial_sum;
    check("diamond_series_term", std::abs(got - c * std::pow(1 - c, 4)) < 1e-12);
  }
  {  // threshold constant
    double c0 = threshold_upper_bound();
    check("threshold_constant", std::abs(c0 - (3.0 - std::sqrt(5.0))) == 0.0 &&
                                    c0 > 1.0 / 3.0 && c0 < 6.0 / 7.0);
  }
  {  // exact partition of the occupied event
    OriginStats st = estimate_origin_stats(0.5, 16, 2000, common.seed, common.workers);
    check("mc_partition_identity",
          st.p_fin.successes + st.p_inf.successes == st.occupied);
  }
  {  // diamond ring frequency vs its exact probability
    Cycle diamond = make_cycle({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    double exact = p_gamma(diamond, 0.5);
    SimEstimate est = estimate_b_gamma_frequency(diamond, 0.5, 8, 20000,
                                                 common.seed, common.workers);
    check("mc_diamond_frequency", std::abs(est.value - exact) <= 3.0 * est.std_error);
  }

  int rc = run_emit(t, common);
  if (rc != 0) return rc;
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"site percolation on the square lattice: exact series, walk "
               "bounds, and Monte Carlo cross-checks"};
  app.require_subcommand(1);

  CommonOpts common;
  if (const char* env = std::getenv("PERC_SEED")) common.seed = std::strtoull(env, nullptr, 10);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", common.output, "write to file instead of stdout");
    sub->add_option("--seed", common.seed, "PRNG seed (default from PERC_SEED or 0)");
    sub->add_option("--workers", common.workers, "worker thread cap")
        ->check(CLI::PositiveNumber);
  };

  int max_n = 20;
  auto* walks = app.add_subcommand("walks", "exact boundary-walk counts and growth bound");
  walks->add_option("--max-n", max_n, "largest walk length")->check(CLI::PositiveNumber);
  add_common(walks);

  int max_k = 4, cap = 5;
  bool list_cycles = false;
  auto* cycles = app.add_subcommand("cycles", "census of origin-enclosing rings");
  cycles->add_option("--max-k", max_k, "largest half-length k");
  cycles->add_option("--cap", cap, "enumeration cap on k");
  cycles->add_flag("--list", list_cycles, "list the rings themselves");
  add_common(cycles);

  double conc = 0.85;
  int ser_max_k = 4, ser_cap = 5;
  auto* series_cmd = app.add_subcommand("series", "truncated cluster series with tail bracket");
  series_cmd->add_option("--c", conc, "concentration")->check(CLI::Range(0.0, 1.0));
  series_cmd->add_option("--max-k", ser_max_k, "truncation order");
  series_cmd->add_option("--cap", ser_cap, "census cap on k");
  add_common(series_cmd);

  double sim_c = 0.5;
  int size = 32;
  long long samples = 10000;
  auto* simulate = app.add_subcommand("simulate", "origin statistics and crossing frequency");
  simulate->add_option("--c", sim_c, "concentration")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--size", size, "window half-width")->check(CLI::PositiveNumber);
  simulate->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  add_common(simulate);

  double c_min = 0.0, c_max = 1.0;
  int steps = 10;
  auto* sweep_cmd = app.add_subcommand("sweep", "simulate across a concentration grid");
  sweep_cmd->add_option("--c-min", c_min)->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--c-max", c_max)->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--steps", steps, "grid steps (emits steps+1 rows)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--size", size, "window half-width")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--samples", samples, "samples per row")->check(CLI::PositiveNumber);
  add_common(sweep_cmd);

  double tol = 0.01;
  long long tsamples = 2000;
  auto* threshold = app.add_subcommand("threshold", "bisect for crossing probability 1/2");
  threshold->add_option("--size", size, "window half-width")->check(CLI::PositiveNumber);
  threshold->add_option("--samples", tsamples, "samples per bisection point")
      ->check(CLI::PositiveNumber);
  threshold->add_option("--tol", tol, "interval width target")->check(CLI::PositiveNumber);
  add_common(threshold);

  auto* validate = app.add_subcommand("validate", "run the cross-module check suite");
  add_common(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    using namespace perc;
    if (*walks) {
      Table t;
      t.meta = {{"subcommand", "walks"}, {"max_n", std::to_string(max_n)}};
      t.columns = {"n", "s_plus", "s_times", "s_n", "growth_bound", "ratio_over_lambda"};
      TransferVector tv;
      double lambda = growth_rate().first;
      BigInt prev = 0;
      for (int n = 1; n <= max_n; ++n) {
        if (n > 1) tv = transfer_step(tv);
        BigInt sn = tv.s_plus + tv.s_times;
        std::string ratio = "nan";
        if (n > 1) {
          double r = sn.convert_to<double>() / prev.convert_to<double>();
          ratio = fmt12(r / lambda);
        }
        t.rows.push_back({std::to_string(n), tv.s_plus.str(), tv.s_times.str(),
                          sn.str(), fmt12(walk_count_bound(n)), ratio});
        prev = sn;
      }
      return run_emit(t, common);
    }
    if (*cycles) {
      Table t;
      t.meta = {{"subcommand", "cycles"},
                {"max_k", std::to_string(max_k)},
                {"cap", std::to_string(cap)}};
      if (list_cycles) {
        t.columns = {"k", "index", "length", "vertices"};
        for (int k = 2; k <= max_k; ++k) {
          CycleCensus census = enumerate_cycles(k, cap);
          for (std::size_t i = 0; i < census.cycles.size(); ++i)
            t.rows.push_back({std::to_string(k), std::to_string(i),
                              std::to_string(census.cycles[i].length()),
                              cycle_to_string(census.cycles[i])});
        }
      } else {
        t.columns = {"k", "r_k", "walk_bound"};
        for (int k = 2; k <= max_k; ++k) {
          CycleCensus census = enumerate_cycles(k, cap);
          t.rows.push_back({std::to_string(k), std::to_string(census.r_k()),
                            cycle_count_bound(k).str()});
        }
      }
      return run_emit(t, common);
    }
    if (*series_cmd) {
      Table t;
      t.meta = {{"subcommand", "series"},
                {"c", fmt12(conc)},
                {"max_k", std::to_string(ser_max_k)},
                {"cap", std::to_string(ser_cap)}};
      t.columns = {"k", "partial_sum", "tail_bound", "lower", "upper"};
      for (int k = 2; k <= ser_max_k; ++k) {
        SeriesBracket b = finite_cluster_probability_bracket(conc, k, ser_cap);
        t.rows.push_back({std::to_string(k), fmt12(b.partial_sum), fmt12(b.tail),
                          fmt12(b.lower()), fmt12(b.upper())});
      }
      return run_emit(t, common);
    }
    if (*simulate) {
      Table t;
      t.meta = {{"subcommand", "simulate"},     {"c", fmt12(sim_c)},
                {"size", std::to_string(size)}, {"samples", std::to_string(samples)},
                {"seed", std::to_string(common.seed)}};
      t.columns = {"c",     "p_fin",    "p_fin_se",    "p_inf",
                   "p_inf_se", "crossing", "crossing_se"};
      OriginStats st = estimate_origin_stats(sim_c, size, samples, common.seed,
                                             common.workers);
      SimEstimate cross = crossing_probability(sim_c, size, samples, common.seed,
                                               common.workers);
      std::vector<std::string> row{fmt12(sim_c)};
      add_estimate(row, st.p_fin);
      add_estimate(row, st.p_inf);
      add_estimate(row, cross);
      t.rows.push_back(std::move(row));
      return run_emit(t, common);
    }
    if (*sweep_cmd) {
      Table t;
      t.meta = {{"subcommand", "sweep"},
                {"c_min", fmt12(c_min)},
                {"c_max", fmt12(c_max)},
                {"steps", std::to_string(steps)},
                {"size", std::to_string(size)},
                {"samples", std::to_string(samples)},
                {"seed", std::to_string(common.seed)}};
      t.columns = {"c",     "p_fin",    "p_fin_se",    "p_inf",
                   "p_inf_se", "crossing", "crossing_se"};
      std::vector<double> cs;
      for (int i = 0; i <= steps; ++i)
        cs.push_back(c_min + (c_max - c_min) * i / steps);
      for (const SweepRow& r : sweep(cs, size, samples, common.seed, common.workers)) {
        std::vector<std::string> row{fmt12(r.concentration)};
        add_estimate(row, r.p_fin);
        add_estimate(row, r.p_inf);
        add_estimate(row, r.crossing);
        t.rows.push_back(std::move(row));
      }
      return run_emit(t, common);
    }
    if (*threshold) {
      Table t;
      t.meta = {{"subcommand", "threshold"},
                {"size", std::to_string(size)},
                {"samples", std::to_string(tsamples)},
                {"tol", fmt12(tol)},
                {"seed", std::to_string(common.seed)}};
      t.columns = {"c_lo", "c_hi", "iterations"};
      ThresholdInterval iv = estimate_threshold(size, tsamples, tol, common.seed,
                                                common.workers);
      t.rows.push_back({fmt12(iv.c_lo), fmt12(iv.c_hi), std::to_string(iv.iterations)});
      return run_emit(t, common);
    }
    if (*validate) return run_validate(common);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
