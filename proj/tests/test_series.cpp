#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "perc/cluster.hpp"
#include "perc/series.hpp"

using namespace perc;

namespace {

Cycle diamond() { return make_cycle({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

Cycle domino_ring() {
  auto cfg = make_configuration(Window(4), std::vector<Vertex>{{0, 0}, {1, 0}});
  return external_boundary(*cluster_of(cfg, {0, 0}), cfg);
}

}  // namespace

TEST_CASE("exact ring probability of the diamond") {
  CHECK(p_gamma(diamond(), 0.5) == doctest::Approx(0.03125).epsilon(1e-14));
  CHECK(p_gamma(diamond(), 0.0) == 0.0);
  CHECK(p_gamma(diamond(), 1.0) == 0.0);
}

TEST_CASE("exact ring probability of a domino boundary") {
  for (double c : {0.2, 0.4, 0.6, 0.8}) {
    double expect = c * c * std::pow(1 - c, 6);
    CHECK(p_gamma(domino_ring(), c) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("elementary majorant") {
  CHECK(p_gamma_upper(diamond(), 0.5) == doctest::Approx(0.0625).epsilon(1e-14));
  CHECK(p_gamma_upper(diamond(), 1.0) == 0.0);
  CHECK(p_gamma_upper(diamond(), 0.0) == 1.0);
  for (int k = 2; k <= 4; ++k)
    for (const Cycle& gamma : enumerate_cycles(k).cycles)
      for (double c : {0.1, 0.3, 0.5, 0.7, 0.9})
        CHECK(p_gamma(gamma, c) <= p_gamma_upper(gamma, c) + 1e-15);
}

TEST_CASE("single-term truncation equals the closed form") {
  for (double c : {0.0, 0.3, 0.5, 0.85}) {
    SeriesBracket b = partial_sum(c, 2);
    CHECK(b.partial_sum == doctest::Approx(c * std::pow(1 - c, 4)).epsilon(1e-13));
  }
}

TEST_CASE("partial sums are nondecreasing in the truncation and bounded by c") {
  for (double c : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double prev = 0.0;
    for (int k = 2; k <= 4; ++k) {
      double s = partial_sum(c, k).partial_sum;
      CHECK(s >= prev);
      CHECK(s <= c + 1e-12);
      prev = s;
    }
  }
}

TEST_CASE("per-length majorant chain") {
  for (int k = 2; k <= 4; ++k) {
    CycleCensus census = enumerate_cycles(k);
    for (double c : {0.3, 0.6, 0.9}) {
      double level = 0.0;
      for (const Cycle& gamma : census.cycles) level += p_gamma_upper(gamma, c);
      double rk_term = static_cast<double>(census.r_k()) * std::pow(1 - c, 2 * k);
      CHECK(level == doctest::Approx(rk_term).epsilon(1e-12));
      CHECK(rk_term <=
            std::pow(1 - c, 2 * k) * cycle_count_bound(k).convert_to<double>());
    }
  }
}

TEST_CASE("tail bound diverges at and below the threshold bound") {
  double c0 = threshold_upper_bound();
  for (int m = 2; m <= 10; ++m) {
    CHECK(std::isinf(tail_bound(c0, m)));
    CHECK(std::isinf(tail_bound(0.5, m)));
    CHECK(std::isfinite(tail_bound(0.85, m)));
  }
}

TEST_CASE("tail bound value and geometric decay at c = 0.85") {
  CHECK(tail_bound(0.85, 5) == doctest::Approx(0.0368).epsilon(2e-3));
  for (double c : {0.80, 0.85, 0.95})
    for (int m = 2; m <= 9; ++m)
      CHECK(tail_bound(c, m + 1) < tail_bound(c, m));
}

TEST_CASE("bracket assembly") {
  SeriesBracket b = finite_cluster_probability_bracket(0.85, 5);
  CHECK(b.lower() == b.partial_sum);
  CHECK(b.upper() == b.partial_sum + b.tail);
  CHECK(b.upper() - b.lower() == doctest::Approx(0.0368).epsilon(2e-3));

  SeriesBracket below = finite_cluster_probability_bracket(0.5, 3);
  CHECK(std::isfinite(below.lower()));
  CHECK(std::isinf(below.upper()));

  double prev_width = std::numeric_limits<double>::infinity();
  for (int k = 3; k <= 5; ++k) {
    SeriesBracket bk = finite_cluster_probability_bracket(0.85, k);
    double width = bk.upper() - bk.lower();
    CHECK(width <= prev_width);
    prev_width = width;
  }
}

TEST_CASE("threshold constant") {
  double c0 = threshold_upper_bound();
  CHECK(c0 == doctest::Approx(0.76393202250021).epsilon(1e-12));
  CHECK(c0 > 1.0 / 3.0);
  CHECK(c0 < 6.0 / 7.0);
  // 3 - sqrt(5) is where the walk-growth majorant stops decaying
  auto decays = [&](double c) {
    return walk_count_bound(30) * std::pow(1 - c, 30) <
           walk_count_bound(20) * std::pow(1 - c, 20);
  };
  CHECK(decays(c0 + 0.01));
  CHECK(!decays(c0 - 0.01));
}

TEST_CASE("interior cap is enforced loudly") {
  CHECK_THROWS_AS(p_gamma(diamond(), 0.5, 0), InteriorTooLarge);
  Cycle off_center = make_cycle({{3, 0}, {2, 1}, {1, 0}, {2, -1}});
  CHECK_THROWS_AS(p_gamma(off_center, 0.5), std::invalid_argument);
}
