#ifndef PERC_LATTICE_HPP
#define PERC_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace perc {

// Integer lattice point. Ordered by (x, y); no floating point in geometry.
struct Vertex {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex operator+(Vertex a, Vertex b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vertex operator-(Vertex a, Vertex b) { return {a.x - b.x, a.y - b.y}; }

enum class StepType { Straight, Diagonal };

struct NotAdjacent : std::runtime_error {
  NotAdjacent() : std::runtime_error("vertices are not 8-adjacent") {}
};
struct InvalidConcentration : std::runtime_error {
  InvalidConcentration() : std::runtime_error("concentration must lie in [0,1]") {}
};
struct OutOfWindow : std::runtime_error {
  OutOfWindow() : std::runtime_error("vertex lies outside the window") {}
};

// 4-neighbors in fixed order E, N, W, S.
constexpr std::array<Vertex, 4> phi_neighbors(Vertex v) {
  return {Vertex{v.x + 1, v.y}, Vertex{v.x, v.y + 1}, Vertex{v.x - 1, v.y},
          Vertex{v.x, v.y - 1}};
}

// 8-neighbors: E, N, W, S, then NE, NW, SE, SW.
constexpr std::array<Vertex, 8> phibar_neighbors(Vertex v) {
  return {Vertex{v.x + 1, v.y},     Vertex{v.x, v.y + 1},
          Vertex{v.x - 1, v.y},     Vertex{v.x, v.y - 1},
          Vertex{v.x + 1, v.y + 1}, Vertex{v.x - 1, v.y + 1},
          Vertex{v.x + 1, v.y - 1}, Vertex{v.x - 1, v.y - 1}};
}

constexpr bool phi_adjacent(Vertex u, Vertex v) {
  int dx = std::abs(u.x - v.x), dy = std::abs(u.y - v.y);
  return dx + dy == 1;
}

constexpr bool phibar_adjacent(Vertex u, Vertex v) {
  int dx = std::abs(u.x - v.x), dy = std::abs(u.y - v.y);
  return dx <= 1 && dy <= 1 && (dx | dy) != 0;
}

inline StepType step_type(Vertex u, Vertex v) {
  if (!phibar_adjacent(u, v)) throw NotAdjacent{};
  return phi_adjacent(u, v) ? StepType::Straight : StepType::Diagonal;
}

// Origin-centered box of odd side 2*half_width+1; |x|,|y| <= half_width.
class Window {
 public:
  explicit Window(int half_width) : half_width_(half_width) {
    if (half_width < 1) throw std::invalid_argument("window half_width must be >= 1");
  }
  int half_width() const { return half_width_; }
  int side() const { return 2 * half_width_ + 1; }
  std::size_t size() const {
    return static_cast<std::size_t>(side()) * static_cast<std::size_t>(side());
  }
  bool contains(Vertex v) const {
    return std::abs(v.x) <= half_width_ && std::abs(v.y) <= half_width_;
  }
  bool on_frame(Vertex v) const {
    return contains(v) &&
           (std::abs(v.x) == half_width_ || std::abs(v.y) == half_width_);
  }
  // Row-major scan order: y ascending, then x ascending.
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(v.y + half_width_) * side() +
           static_cast<std::size_t>(v.x + half_width_);
  }
  Vertex vertex_at(std::size_t idx) const {
    int s = side();
    return {static_cast<int>(idx % s) - half_width_,
            static_cast<int>(idx / s) - half_width_};
  }
  friend bool operator==(const Window&, const Window&) = default;

 private:
  int half_width_;
};

// Counter-based occupancy stream: the bit of a vertex is a pure function of
// (seed, replica_index, x, y), so any subset of bits can be evaluated in any
// order, on any worker, with identical results.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 33;
  z *= 0xff51afd7ed558ccdULL;
  z ^= z >> 33;
  z *= 0xc4ceb9fe1a85ec53ULL;
  z ^= z >> 33;
  return z;
}

constexpr std::uint64_t stream_base(std::uint64_t seed, std::uint64_t replica) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^
               (replica + 0xbf58476d1ce4e5b9ULL));
}

constexpr std::uint64_t site_hash(std::uint64_t base, int x, int y) {
  std::uint64_t xy = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
                     static_cast<std::uint32_t>(y);
  return mix64(base ^ xy);
}

// Bernoulli field at fixed seed and concentration; replicas are independent.
class BernoulliField {
 public:
  BernoulliField(std::uint64_t seed, double concentration);
  bool occupied(std::uint64_t replica, Vertex v) const {
    if (all_one_) return true;
    return site_hash(stream_base(seed_, replica), v.x, v.y) < threshold_;
  }
  // Cheaper form when many sites of one replica are queried.
  std::uint64_t base(std::uint64_t replica) const { return stream_base(seed_, replica); }
  bool occupied_at(std::uint64_t base, Vertex v) const {
    if (all_one_) return true;
    return site_hash(base, v.x, v.y) < threshold_;
  }
  double concentration() const { return concentration_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  double concentration_;
  std::uint64_t threshold_;
  bool all_one_;
};

// One realization of the field on a window, materialized as a bit per vertex.
struct SiteConfiguration {
  Window window;
  double concentration = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t replica_index = 0;
  std::vector<std::uint8_t> bits;  // window.size() entries, scan order

  bool occupied(Vertex v) const {
    if (!window.contains(v)) throw OutOfWindow{};
    return bits[window.index(v)] != 0;
  }
};

SiteConfiguration sample_configuration(const Window& window, double concentration,
                                       std::uint64_t seed, std::uint64_t replica_index);

// Configuration with an explicit occupied set (tests, exact enumeration).
SiteConfiguration make_configuration(const Window& window,
                                     std::span<const Vertex> occupied);

}  // namespace perc

#endif
