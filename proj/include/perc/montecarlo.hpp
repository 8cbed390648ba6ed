#ifndef PERC_MONTECARLO_HPP
#define PERC_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "perc/cluster.hpp"
#include "perc/lattice.hpp"

namespace perc {

// Binomial frequency estimate. Bit-reproducible for fixed inputs,
// regardless of worker count.
struct SimEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long long successes = 0;
  long long samples = 0;
  double concentration = 0.0;
  int half_width = 0;
  std::uint64_t seed = 0;
};

struct OriginStats {
  SimEstimate p_fin;       // origin occupied, cluster stays off the frame
  SimEstimate p_inf;       // origin occupied, cluster touches the frame
  long long occupied = 0;  // samples with the origin occupied; equals
                           // p_fin.successes + p_inf.successes by construction
};

OriginStats estimate_origin_stats(double concentration, int half_width,
                                  long long samples, std::uint64_t seed,
                                  int workers = 1);

// Frequency of an occupied 4-connected path joining the left and right
// window edges.
SimEstimate crossing_probability(double concentration, int half_width,
                                 long long samples, std::uint64_t seed,
                                 int workers = 1);

struct ThresholdInterval {
  double c_lo = 0.0;
  double c_hi = 1.0;
  int iterations = 0;
};

// Bisection on the concentration for crossing probability 1/2; a
// finite-size pseudo-threshold.
ThresholdInterval estimate_threshold(int half_width, long long samples_per_point,
                                     double tolerance, std::uint64_t seed,
                                     int workers = 1);

// Frequency of the event that the origin's cluster is frame-free and has
// the given ring as its external boundary.
SimEstimate estimate_b_gamma_frequency(const Cycle& cycle, double concentration,
                                       int half_width, long long samples,
                                       std::uint64_t seed, int workers = 1);

struct SweepRow {
  double concentration = 0.0;
  SimEstimate p_fin;
  SimEstimate p_inf;
  SimEstimate crossing;
  long long occupied = 0;
};

// One row per concentration, each on an independent replica stream.
std::vector<SweepRow> sweep(const std::vector<double>& concentrations,
                            int half_width, long long samples,
                            std::uint64_t seed, int workers = 1);

}  // namespace perc

#endif
