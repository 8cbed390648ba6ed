#include "perc/boundary_walks.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace perc {

std::vector<Vertex> successor_candidates(Vertex u, Vertex v) {
  if (!phibar_adjacent(u, v)) throw NotAdjacent{};
  std::vector<Vertex> out;
  for (Vertex w : phibar_neighbors(v))
    if (w != u && !phibar_adjacent(w, u)) out.push_back(w);
  return out;
}

TransferVector transfer_step(const TransferVector& tv) {
  TransferVector next;
  next.s_plus = tv.s_plus + 2 * tv.s_times;
  next.s_times = 2 * tv.s_plus + 3 * tv.s_times;
  next.n = tv.n + 1;
  return next;
}

WalkCounts walk_counts(int n) {
  if (n < 1) throw std::invalid_argument("walk length must be >= 1");
  TransferVector tv;
  while (tv.n < n) tv = transfer_step(tv);
  return {tv.s_plus, tv.s_times, tv.s_plus + tv.s_times};
}

double walk_count_bound(int n) {
  if (n < 1) throw std::invalid_argument("walk length must be >= 1");
  return 4.0 * std::pow(2.0 + std::sqrt(5.0), n - 1);
}

std::pair<double, double> growth_rate() {
  double r = std::sqrt(5.0);
  return {2.0 + r, 2.0 - r};
}

namespace {

// Exhaustive search for origin-enclosing rings of a fixed length. A ring of
// length n enclosing the origin has total x-variation >= 2*(max|x|+1), so it
// stays inside the box |x|,|y| <= n/2 - 1.
class RingSearch {
 public:
  explicit RingSearch(int length)
      : n_(length),
        box_(std::max(1, length / 2 - 1)),
        win_(box_ + 2),
        used_(win_.size(), 0) {}

  std::vector<Cycle> run() {
    path_.reserve(n_);
    // the start is the smallest ring vertex; enclosing the origin forces
    // a vertex with x <= -1, so the smallest one has x <= -1
    for (int x = -box_; x <= -1; ++x) {
      for (int y = -box_; y <= box_; ++y) {
        start_ = {x, y};
        path_.assign(1, start_);
        used_[win_.index(start_)] = 1;
        extend();
        used_[win_.index(start_)] = 0;
      }
    }
    std::vector<Cycle> out(seen_.size());
    std::transform(seen_.begin(), seen_.end(), out.begin(),
                   [](const std::vector<Vertex>& ring) { return make_cycle(ring); });
    return out;
  }

 private:
  bool in_box(Vertex v) const {
    return std::abs(v.x) <= box_ && std::abs(v.y) <= box_;
  }

  int used_neighbor_count(Vertex w) const {
    int c = 0;
    for (Vertex z : phibar_neighbors(w))
      if (win_.contains(z) && used_[win_.index(z)]) ++c;
    return c;
  }

  void extend() {
    if (static_cast<int>(path_.size()) == n_) {
      finalize();
      return;
    }
    Vertex cur = path_.back();
    int remaining = n_ - static_cast<int>(path_.size());
    bool final_pos = remaining == 1;
    for (Vertex w : phibar_neighbors(cur)) {
      if (!in_box(w) || w < start_ || used_[win_.index(w)]) continue;
      // closing back to the start must stay possible
      int dist = std::max(std::abs(w.x - start_.x), std::abs(w.y - start_.y));
      if (dist > remaining) continue;
      // every ring vertex ends with exactly two ring neighbors, so a new
      // vertex may touch only its predecessor (plus the start when closing)
      int adj = used_neighbor_count(w);
      if (final_pos) {
        if (adj != 2 || !phibar_adjacent(w, start_)) continue;
      } else {
        if (adj != 1) continue;
      }
      path_.push_back(w);
      used_[win_.index(w)] = 1;
      extend();
      used_[win_.index(w)] = 0;
      path_.pop_back();
    }
  }

  void finalize() {
    std::vector<Vertex> ring = path_;
    if (twice_signed_area(ring) < 0) {
      std::reverse(ring.begin(), ring.end());
      std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()),
                  ring.end());
    }
    if (seen_.count(ring)) return;
    Cycle c = make_cycle(ring);
    std::vector<Vertex> inside = interior(c, win_);
    if (!std::binary_search(inside.begin(), inside.end(), Vertex{0, 0})) return;
    validate_cycle(c);
    seen_.insert(std::move(ring));
  }

  int n_;
  int box_;
  Window win_;
  Vertex start_{};
  std::vector<Vertex> path_;
  std::vector<std::uint8_t> used_;
  std::set<std::vector<Vertex>> seen_;
};

}  // namespace

std::vector<Cycle> enumerate_enclosing_cycles(int length) {
  if (length < 3) throw std::invalid_argument("ring length must be >= 3");
  return RingSearch(length).run();
}

CycleCensus enumerate_cycles(int k, int cap) {
  if (k < 2) throw std::invalid_argument("census index k must be >= 2");
  if (k > cap) throw CapExceeded{};
  CycleCensus census;
  census.k = k;
  census.cycles = enumerate_enclosing_cycles(2 * k);
  // RingSearch emits in set order of the vertex sequences, already sorted
  return census;
}

BigInt cycle_count_bound(int k) {
  if (k < 2) throw std::invalid_argument("census index k must be >= 2");
  return 4 * BigInt(k - 1) * walk_counts(2 * k - 1).s_n;
}

}  // namespace perc
