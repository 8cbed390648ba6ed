#include "perc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace perc {

namespace {

// Per-worker scratch grids with epoch stamping, so per-sample resets are O(1).
class Scratch {
 public:
  explicit Scratch(const Window& win)
      : win_(win),
        occ_epoch_(win.size(), 0),
        vis_epoch_(win.size(), 0),
        occ_bit_(win.size(), 0) {}

  void begin_sample(const BernoulliField* field, std::uint64_t replica) {
    ++epoch_;
    field_ = field;
    base_ = field->base(replica);
  }

  bool occupied(Vertex v) {
    std::size_t i = win_.index(v);
    if (occ_epoch_[i] != epoch_) {
      occ_epoch_[i] = epoch_;
      occ_bit_[i] = field_->occupied_at(base_, v) ? 1 : 0;
    }
    return occ_bit_[i] != 0;
  }

  bool visited(Vertex v) const { return vis_epoch_[win_.index(v)] == epoch_; }
  void mark(Vertex v) { vis_epoch_[win_.index(v)] = epoch_; }
  const Window& window() const { return win_; }

  std::vector<Vertex> stack;

 private:
  Window win_;
  std::vector<std::uint32_t> occ_epoch_, vis_epoch_;
  std::vector<std::uint8_t> occ_bit_;
  std::uint32_t epoch_ = 0;
  const BernoulliField* field_ = nullptr;
  std::uint64_t base_ = 0;
};

enum class OriginEvent { Empty, FiniteCluster, FrameCluster };

// Grows the origin's cluster, stopping as soon as the frame is touched.
OriginEvent classify_origin(Scratch& s, std::vector<Vertex>* members) {
  const Window& win = s.window();
  if (!s.occupied({0, 0})) return OriginEvent::Empty;
  s.stack.clear();
  s.stack.push_back({0, 0});
  s.mark({0, 0});
  if (members) members->assign(1, {0, 0});
  while (!s.stack.empty()) {
    Vertex u = s.stack.back();
    s.stack.pop_back();
    if (win.on_frame(u)) return OriginEvent::FrameCluster;
    for (Vertex w : phi_neighbors(u)) {
      if (s.visited(w) || !s.occupied(w)) continue;
      s.mark(w);
      s.stack.push_back(w);
      if (members) members->push_back(w);
    }
  }
  return OriginEvent::FiniteCluster;
}

bool has_crossing(Scratch& s) {
  const Window& win = s.window();
  int h = win.half_width();
  s.stack.clear();
  for (int y = -h; y <= h; ++y) {
    Vertex v{-h, y};
    if (s.occupied(v) && !s.visited(v)) {
      s.mark(v);
      s.stack.push_back(v);
    }
  }
  while (!s.stack.empty()) {
    Vertex u = s.stack.back();
    s.stack.pop_back();
    if (u.x == h) return true;
    for (Vertex w : phi_neighbors(u)) {
      if (!win.contains(w) || s.visited(w) || !s.occupied(w)) continue;
      s.mark(w);
      s.stack.push_back(w);
    }
  }
  return false;
}

// Runs fn over replicas [offset, offset+samples) in fixed-size chunks and
// sums the integer counters in chunk order, so the result does not depend
// on how chunks are scheduled across workers.
template <typename F>
std::vector<long long> chunked_counts(const Window& win, long long samples,
                                      std::uint64_t replica_offset, int workers,
                                      int slots, F&& fn) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const long long chunk = 4096;
  const long long nchunks = (samples + chunk - 1) / chunk;
  std::vector<std::vector<long long>> partial(nchunks,
                                              std::vector<long long>(slots, 0));
  std::atomic<long long> next{0};
  auto work = [&]() {
    Scratch scratch(win);
    for (;;) {
      long long ci = next.fetch_add(1);
      if (ci >= nchunks) break;
      long long lo = ci * chunk;
      long long hi = std::min(samples, lo + chunk);
      for (long long r = lo; r < hi; ++r)
        fn(replica_offset + static_cast<std::uint64_t>(r), scratch,
           partial[ci].data());
    }
  };
  int nthreads = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<long long> totals(slots, 0);
  for (const auto& p : partial)
    for (int i = 0; i < slots; ++i) totals[i] += p[i];
  return totals;
}

SimEstimate make_estimate(long long successes, long long samples,
                          double concentration, int half_width,
                          std::uint64_t seed) {
  SimEstimate e;
  e.successes = successes;
  e.samples = samples;
  e.concentration = concentration;
  e.half_width = half_width;
  e.seed = seed;
  e.value = static_cast<double>(successes) / static_cast<double>(samples);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(samples));
  return e;
}

SimEstimate crossing_with_offset(double concentration, int half_width,
                                 long long samples, std::uint64_t seed,
                                 std::uint64_t replica_offset, int workers) {
  Window win(half_width);
  BernoulliField field(seed, concentration);
  auto counts = chunked_counts(
      win, samples, replica_offset, workers, 1,
      [&](std::uint64_t replica, Scratch& s, long long* slot) {
        s.begin_sample(&field, replica);
        if (has_crossing(s)) slot[0] += 1;
      });
  return make_estimate(counts[0], samples, concentration, half_width, seed);
}

}  // namespace

OriginStats estimate_origin_stats(double concentration, int half_width,
                                  long long samples, std::uint64_t seed,
                                  int workers) {
  Window win(half_width);
  BernoulliField field(seed, concentration);
  auto counts = chunked_counts(
      win, samples, 0, workers, 2,
      [&](std::uint64_t replica, Scratch& s, long long* slot) {
        s.begin_sample(&field, replica);
        switch (classify_origin(s, nullptr)) {
          case OriginEvent::FiniteCluster: slot[0] += 1; break;
          case OriginEvent::FrameCluster: slot[1] += 1; break;
          case OriginEvent::Empty: break;
        }
      });
  OriginStats stats;
  stats.p_fin = make_estimate(counts[0], samples, concentration, half_width, seed);
  stats.p_inf = make_estimate(counts[1], samples, concentration, half_width, seed);
  stats.occupied = counts[0] + counts[1];
  return stats;
}

SimEstimate crossing_probability(double concentration, int half_width,
                                 long long samples, std::uint64_t seed,
                                 int workers) {
  return crossing_with_offset(concentration, half_width, samples, seed, 0, workers);
}

ThresholdInterval estimate_threshold(int half_width, long long samples_per_point,
                                     double tolerance, std::uint64_t seed,
                                     int workers) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  ThresholdInterval iv;
  while (iv.c_hi - iv.c_lo > tolerance) {
    double mid = 0.5 * (iv.c_lo + iv.c_hi);
    // fresh replica block per bisection step
    std::uint64_t offset =
        static_cast<std::uint64_t>(iv.iterations + 1) * static_cast<std::uint64_t>(samples_per_point);
    SimEstimate est = crossing_with_offset(mid, half_width, samples_per_point,
                                           seed, offset, workers);
    if (est.value < 0.5)
      iv.c_lo = mid;
    else
      iv.c_hi = mid;
    ++iv.iterations;
  }
  return iv;
}

SimEstimate estimate_b_gamma_frequency(const Cycle& cycle, double concentration,
                                       int half_width, long long samples,
                                       std::uint64_t seed, int workers) {
  Window win(half_width);
  for (Vertex v : cycle.vertices)
    if (std::abs(v.x) > half_width - 2 || std::abs(v.y) > half_width - 2)
      throw CycleTouchesFrame{};
  BernoulliField field(seed, concentration);
  Cycle target = canonical_form(cycle);
  std::vector<Vertex> inside = interior(target, win);
  auto in_interior = [&](Vertex v) {
    return std::binary_search(inside.begin(), inside.end(), v);
  };
  auto counts = chunked_counts(
      win, samples, 0, workers, 1,
      [&](std::uint64_t replica, Scratch& s, long long* slot) {
        s.begin_sample(&field, replica);
        // a matching cluster lives inside the ring, so bail out as soon as
        // the origin's cluster leaves the interior
        if (!s.occupied({0, 0})) return;
        s.stack.clear();
        s.stack.push_back({0, 0});
        s.mark({0, 0});
        std::vector<Vertex> members{{0, 0}};
        if (!in_interior({0, 0})) return;
        while (!s.stack.empty()) {
          Vertex u = s.stack.back();
          s.stack.pop_back();
          for (Vertex w : phi_neighbors(u)) {
            if (s.visited(w) || !s.occupied(w)) continue;
            if (!in_interior(w)) return;  // escapes the ring: no match
            s.mark(w);
            s.stack.push_back(w);
            members.push_back(w);
          }
        }
        SiteConfiguration cfg = make_configuration(win, members);
        Cluster cl = *cluster_of(cfg, Vertex{0, 0});
        Cycle ext = external_boundary(cl, cfg);
        if (canonical_form(ext).vertices == target.vertices) slot[0] += 1;
      });
  return make_estimate(counts[0], samples, concentration, half_width, seed);
}

std::vector<SweepRow> sweep(const std::vector<double>& concentrations,
                            int half_width, long long samples,
                            std::uint64_t seed, int workers) {
  std::vector<SweepRow> rows;
  rows.reserve(concentrations.size());
  for (std::size_t i = 0; i < concentrations.size(); ++i) {
    double c = concentrations[i];
    std::uint64_t row_seed = mix64(seed ^ (0x51D3A5C400000000ULL + i));
    SweepRow row;
    row.concentration = c;
    OriginStats stats = estimate_origin_stats(c, half_width, samples, row_seed, workers);
    row.p_fin = stats.p_fin;
    row.p_inf = stats.p_inf;
    row.occupied = stats.occupied;
    row.crossing = crossing_probability(c, half_width, samples, row_seed, workers);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace perc
