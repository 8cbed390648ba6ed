#ifndef PERC_BOUNDARY_WALKS_HPP
#define PERC_BOUNDARY_WALKS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "perc/cluster.hpp"
#include "perc/lattice.hpp"

namespace perc {

using BigInt = boost::multiprecision::cpp_int;

struct CapExceeded : std::runtime_error {
  CapExceeded() : std::runtime_error("cycle length exceeds the configured cap") {}
};

// Admissible first steps of a boundary walk, counter-clockwise from E.
inline constexpr std::array<Vertex, 4> walk_first_steps{
    Vertex{1, 0}, Vertex{1, 1}, Vertex{0, 1}, Vertex{-1, 1}};

// Candidates for the vertex after the oriented step u -> v on a boundary
// ring: the 8-neighbors of v other than u that are not 8-adjacent to u
// (any such vertex would give u or w a third ring neighbor). Three
// candidates after a straight step, five after a diagonal one.
std::vector<Vertex> successor_candidates(Vertex u, Vertex v);

// Exact walk counts split by last-step type; state after n steps.
struct TransferVector {
  BigInt s_plus = 2;
  BigInt s_times = 2;
  int n = 1;
};

TransferVector transfer_step(const TransferVector& tv);

struct WalkCounts {
  BigInt s_plus;
  BigInt s_times;
  BigInt s_n;
};

WalkCounts walk_counts(int n);

// 4 * (2+sqrt(5))^(n-1); majorizes s_n with equality at n = 1.
double walk_count_bound(int n);

// Eigenvalues (2+sqrt(5), 2-sqrt(5)) of the step-count recursion;
// s_{n+1}/s_n converges to the first.
std::pair<double, double> growth_rate();

// All canonical origin-enclosing rings of the given length. Used for even
// lengths 2k; odd lengths are scanned by tests and find nothing.
std::vector<Cycle> enumerate_enclosing_cycles(int length);

struct CycleCensus {
  int k = 0;
  std::vector<Cycle> cycles;  // canonical form, sorted
  std::size_t r_k() const { return cycles.size(); }
};

CycleCensus enumerate_cycles(int k, int cap = 5);

// 4 * (k-1) * s_{2k-1}, an upper bound on r_k.
BigInt cycle_count_bound(int k);

}  // namespace perc

#endif
