#ifndef PERC_SERIES_HPP
#define PERC_SERIES_HPP

#include "perc/boundary_walks.hpp"
#include "perc/cluster.hpp"

namespace perc {

struct InteriorTooLarge : std::runtime_error {
  InteriorTooLarge() : std::runtime_error("cycle interior exceeds the enumeration cap") {}
};

// Truncated cluster-decomposition sum with its tail bound. The probability
// that the origin is occupied and its cluster is finite lies in
// [lower(), upper()].
struct SeriesBracket {
  double concentration = 0.0;
  int max_k = 0;
  double partial_sum = 0.0;
  double tail = 0.0;  // +inf below the convergence threshold
  double lower() const { return partial_sum; }
  double upper() const { return partial_sum + tail; }
};

// Exact probability that the origin's cluster has the given ring as its
// external boundary: sum of c^|W| (1-c)^|bW| over the 4-connected subsets W
// of the ring's interior that contain the origin and reproduce the ring.
double p_gamma(const Cycle& cycle, double concentration, int interior_cap = 24);

// (1-c)^|ring|, the elementary majorant of p_gamma.
double p_gamma_upper(const Cycle& cycle, double concentration);

// Sum of p_gamma over all census rings with 2 <= k <= max_k, accumulated
// in canonical order with compensated summation. Tail left unfilled.
SeriesBracket partial_sum(double concentration, int max_k, int census_cap = 5);

// Closed-form bound on the dropped terms beyond ring length 2m; +inf when
// the majorant series diverges (c <= 3 - sqrt(5)).
double tail_bound(double concentration, int m);

SeriesBracket finite_cluster_probability_bracket(double concentration, int max_k,
                                                 int census_cap = 5);

// 3 - sqrt(5), the proven upper bound on the percolation threshold.
double threshold_upper_bound();

}  // namespace perc

#endif
