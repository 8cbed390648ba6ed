#include "perc/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace perc {

namespace {

// Connected subsets (via 4-adjacency) of a small vertex set containing a
// root, enumerated once each. Bitmask recursion over at most 32 vertices.
class ConnectedSubsets {
 public:
  ConnectedSubsets(const std::vector<Vertex>& verts, Vertex root)
      : verts_(verts) {
    int m = static_cast<int>(verts.size());
    adj_.assign(m, 0);
    root_ = -1;
    for (int i = 0; i < m; ++i) {
      if (verts[i] == root) root_ = i;
      for (int j = 0; j < m; ++j)
        if (phi_adjacent(verts[i], verts[j])) adj_[i] |= 1u << j;
    }
  }

  template <typename F>
  void for_each(F&& emit) {
    if (root_ < 0) return;
    emit_ = [&](std::uint32_t mask) {
      std::vector<Vertex> set;
      for (int i = 0; i < static_cast<int>(verts_.size()); ++i)
        if (mask & (1u << i)) set.push_back(verts_[i]);
      emit(set);
    };
    rec(1u << root_, adj_[root_], 0u);
  }

 private:
  void rec(std::uint32_t cur, std::uint32_t ext, std::uint32_t banned) {
    emit_(cur);
    std::uint32_t tried = 0;
    std::uint32_t e = ext;
    while (e) {
      std::uint32_t vbit = e & (~e + 1);
      e ^= vbit;
      int v = __builtin_ctz(vbit);
      std::uint32_t grown = adj_[v] & ~cur & ~(banned | tried | vbit) & ~ext;
      rec(cur | vbit, e | grown, banned | tried);
      tried |= vbit;
    }
  }

  std::vector<Vertex> verts_;
  std::vector<std::uint32_t> adj_;
  int root_;
  std::function<void(std::uint32_t)> emit_;
};

Window window_for(const Cycle& cycle) {
  int reach = 1;
  for (Vertex v : cycle.vertices)
    reach = std::max({reach, std::abs(v.x), std::abs(v.y)});
  return Window(reach + 2);
}

}  // namespace

double p_gamma(const Cycle& cycle, double concentration, int interior_cap) {
  if (!(concentration >= 0.0 && concentration <= 1.0)) throw InvalidConcentration{};
  Window win = window_for(cycle);
  std::vector<Vertex> inside = interior(cycle, win);
  if (!std::binary_search(inside.begin(), inside.end(), Vertex{0, 0}))
    throw std::invalid_argument("ring does not enclose the origin");
  if (static_cast<int>(inside.size()) > interior_cap) throw InteriorTooLarge{};
  Cycle target = canonical_form(cycle);
  double total = 0.0;
  ConnectedSubsets subsets(inside, Vertex{0, 0});
  subsets.for_each([&](const std::vector<Vertex>& w) {
    SiteConfiguration cfg = make_configuration(win, w);
    Cluster cl = *cluster_of(cfg, Vertex{0, 0});
    std::vector<Vertex> bnd = boundary(cl, cfg);
    Cycle ext = external_boundary(cl, cfg);
    if (canonical_form(ext).vertices != target.vertices) return;
    total += std::pow(concentration, static_cast<double>(w.size())) *
             std::pow(1.0 - concentration, static_cast<double>(bnd.size()));
  });
  return total;
}

double p_gamma_upper(const Cycle& cycle, double concentration) {
  if (!(concentration >= 0.0 && concentration <= 1.0)) throw InvalidConcentration{};
  return std::pow(1.0 - concentration, static_cast<double>(cycle.length()));
}

SeriesBracket partial_sum(double concentration, int max_k, int census_cap) {
  if (!(concentration >= 0.0 && concentration <= 1.0)) throw InvalidConcentration{};
  if (max_k < 2) throw std::invalid_argument("truncation max_k must be >= 2");
  SeriesBracket bracket;
  bracket.concentration = concentration;
  bracket.max_k = max_k;
  double sum = 0.0, comp = 0.0;  // Kahan accumulation in census order
  for (int k = 2; k <= max_k; ++k) {
    CycleCensus census = enumerate_cycles(k, census_cap);
    for (const Cycle& gamma : census.cycles) {
      double term = p_gamma(gamma, concentration);
      double y = term - comp;
      double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
  }
  bracket.partial_sum = sum;
  bracket.tail = std::numeric_limits<double>::infinity();
  return bracket;
}

double tail_bound(double concentration, int m) {
  if (!(concentration >= 0.0 && concentration <= 1.0)) throw InvalidConcentration{};
  if (m < 2) throw std::invalid_argument("truncation order m must be >= 2");
  double lambda = 2.0 + std::sqrt(5.0);
  double xi = lambda * (1.0 - concentration);
  xi *= xi;
  if (xi >= 1.0) return std::numeric_limits<double>::infinity();
  // 16 (1-c)^2 xi d/dxi [ xi^m / (1-xi) ], derivative expanded analytically
  double one_minus = 1.0 - xi;
  double deriv = std::pow(xi, m - 1) * (m * one_minus + xi) / (one_minus * one_minus);
  double q = 1.0 - concentration;
  return 16.0 * q * q * xi * deriv;
}

SeriesBracket finite_cluster_probability_bracket(double concentration, int max_k,
                                                 int census_cap) {
  SeriesBracket bracket = partial_sum(concentration, max_k, census_cap);
  bracket.tail = tail_bound(concentration, max_k);
  return bracket;
}

double threshold_upper_bound() { return 3.0 - std::sqrt(5.0); }

}  // namespace perc
