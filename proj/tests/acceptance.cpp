// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criterion 10 shells out to the CLI named by PERC_CLI_BIN.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "perc/boundary_walks.hpp"
#include "perc/cluster.hpp"
#include "perc/lattice.hpp"
#include "perc/montecarlo.hpp"
#include "perc/series.hpp"

using namespace perc;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double seconds) {
  std::printf("%s: criterion %2d (%s) [%.1fs]\n", ok ? "PASS" : "FAIL", id, what,
              seconds);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <typename F>
void criterion(int id, const char* what, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
    ok = false;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, what, ok, dt);
}

std::string run_cli(const std::string& args) {
  const char* bin = std::getenv("PERC_CLI_BIN");
  if (!bin) return "<PERC_CLI_BIN unset>";
  std::string cmd = std::string(bin) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  criterion(1, "transfer matrix equals DFS enumeration", [] {
    for (int n = 1; n <= 8; ++n) {
      auto [plus, times] = oracles::dfs_walk_counts(n);
      WalkCounts wc = walk_counts(n);
      if (wc.s_plus != plus || wc.s_times != times) return false;
    }
    return true;
  });

  criterion(2, "walk growth bound, equality at n=1", [] {
    using HighPrec = boost::multiprecision::cpp_bin_float_50;
    HighPrec lambda = 2 + sqrt(HighPrec(5));
    if (walk_counts(1).s_n != 4 || walk_count_bound(1) != 4.0) return false;
    for (int n = 1; n <= 30; ++n) {
      HighPrec bound = 4 * pow(lambda, n - 1);
      HighPrec sn(walk_counts(n).s_n);
      if (sn > bound) return false;
      if (std::abs(static_cast<double>(bound) - walk_count_bound(n)) >
          1e-12 * walk_count_bound(n))
        return false;
    }
    return true;
  });

  criterion(3, "ring census soundness and count bound, k <= 4", [] {
    if (enumerate_cycles(2).r_k() != 1) return false;
    for (int k = 2; k <= 4; ++k) {
      CycleCensus census = enumerate_cycles(k);
      if (BigInt(census.r_k()) > cycle_count_bound(k)) return false;
      Window win(k + 2);
      for (const Cycle& c : census.cycles) {
        validate_cycle(c);
        auto inside = interior(c, win);
        if (!std::binary_search(inside.begin(), inside.end(), Vertex{0, 0}))
          return false;
        std::size_t n = c.length();
        for (std::size_t i = 0; i < n; ++i) {
          auto cand = successor_candidates(c.vertices[i], c.vertices[(i + 1) % n]);
          if (std::find(cand.begin(), cand.end(), c.vertices[(i + 2) % n]) ==
              cand.end())
            return false;
        }
      }
    }
    return true;
  });

  criterion(4, "boundary extraction sound on 10^4 random fields", [] {
    long long clusters_checked = 0;
    std::uint64_t seed = 1234;
    for (double c : {0.3, 0.5, 0.7}) {
      for (int r = 0; r < 3334; ++r) {
        auto cfg = sample_configuration(Window(15), c, seed, r);
        auto lab = label_clusters(cfg);
        std::vector<std::uint8_t> done(lab.cluster_count(), 0);
        for (std::size_t i = 0; i < cfg.window.size(); ++i) {
          std::int32_t id = lab.label[i];
          if (id < 0 || done[id] || lab.touches_frame[id]) continue;
          done[id] = 1;
          auto cl = *cluster_of(cfg, cfg.window.vertex_at(i));
          Cycle cyc = external_boundary(cl, cfg);  // throws on any violation
          validate_cycle(cyc);
          Window wide(cfg.window.half_width() + 2);
          auto inside = interior(cyc, wide);
          if (!std::binary_search(inside.begin(), inside.end(), cl.anchor))
            return false;
          ++clusters_checked;
        }
      }
      ++seed;
    }
    return clusters_checked > 100000;
  });

  criterion(5, "empirical ring frequencies match exact probabilities", [] {
    std::vector<Cycle> rings;
    rings.push_back(make_cycle({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    for (auto dom : {std::vector<Vertex>{{0, 0}, {1, 0}},
                     std::vector<Vertex>{{-1, 0}, {0, 0}},
                     std::vector<Vertex>{{0, 0}, {0, 1}},
                     std::vector<Vertex>{{0, -1}, {0, 0}}}) {
      auto cfg = make_configuration(Window(4), dom);
      rings.push_back(external_boundary(*cluster_of(cfg, {0, 0}), cfg));
    }
    std::uint64_t seed = 9000;
    for (double c : {0.3, 0.5, 0.7}) {
      for (const Cycle& gamma : rings) {
        double exact = p_gamma(gamma, c);
        SimEstimate est = estimate_b_gamma_frequency(gamma, c, 8, 100000, seed++);
        double sigma = std::sqrt(exact * (1 - exact) / 100000.0);
        if (std::abs(est.value - exact) > 3 * sigma) return false;
        if (c == 0.5 && gamma.length() == 4 && exact != 0.03125) return false;
      }
    }
    return true;
  });

  criterion(6, "series bracket contains the Monte Carlo estimate at c=0.85", [] {
    SeriesBracket b = finite_cluster_probability_bracket(0.85, 5);
    double width = b.upper() - b.lower();
    if (std::abs(width - 0.0368) > 0.002) return false;
    OriginStats st = estimate_origin_stats(0.85, 64, 100000, 77);
    double lo = b.lower() - 3 * st.p_fin.std_error;
    double hi = b.upper() + 3 * st.p_fin.std_error;
    return st.p_fin.value >= lo && st.p_fin.value <= hi;
  });

  criterion(7, "threshold constant and pseudo-threshold consistency", [] {
    double c0 = threshold_upper_bound();
    if (std::abs(c0 - (3.0 - std::sqrt(5.0))) > 1e-12 * c0) return false;
    ThresholdInterval iv = estimate_threshold(64, 2000, 0.01, 4242);
    return iv.c_lo > 1.0 / 3.0 && iv.c_hi < 6.0 / 7.0 && iv.c_hi < c0;
  });

  criterion(8, "occupied-origin partition identity is exact", [] {
    OriginStats st = estimate_origin_stats(0.55, 24, 40000, 8);
    if (st.p_fin.successes + st.p_inf.successes != st.occupied) return false;
    auto rows = sweep({0.1, 0.5, 0.9}, 16, 10000, 8);
    for (const SweepRow& r : rows)
      if (r.p_fin.successes + r.p_inf.successes != r.occupied) return false;
    return true;
  });

  criterion(9, "tail bound divergence boundary straddles 3-sqrt(5)", [] {
    for (int m = 2; m <= 10; ++m) {
      if (!std::isfinite(tail_bound(0.764, m))) return false;
      if (!std::isinf(tail_bound(0.763, m))) return false;
    }
    return true;
  });

  criterion(10, "CLI output is byte-identical across reruns and workers", [] {
    std::string a = run_cli("walks --max-n 12");
    std::string b = run_cli("walks --max-n 12");
    if (a.empty() || a != b) return false;
    std::string w1 = run_cli("simulate --c 0.6 --size 16 --samples 2000 --seed 7 --workers 1");
    std::string w3 = run_cli("simulate --c 0.6 --size 16 --samples 2000 --seed 7 --workers 3");
    if (w1.empty() || w1 != w3) return false;
    std::string s1 = run_cli("series --c 0.85 --max-k 4 --format json");
    std::string s2 = run_cli("series --c 0.85 --max-k 4 --format json");
    return !s1.empty() && s1 == s2;
  });

  std::printf("%s (%d %s failed)\n", failures == 0 ? "ALL PASS" : "FAILURES",
              failures, failures == 1 ? "criterion" : "criteria");
  return failures == 0 ? 0 : 1;
}
