#ifndef PERC_CLUSTER_HPP
#define PERC_CLUSTER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "perc/lattice.hpp"

namespace perc {

struct FrameContact : std::runtime_error {
  FrameContact() : std::runtime_error("cluster touches the window frame") {}
};
struct CycleValidation : std::runtime_error {
  explicit CycleValidation(const char* what) : std::runtime_error(what) {}
};
struct CycleTouchesFrame : std::runtime_error {
  CycleTouchesFrame() : std::runtime_error("cycle touches the window frame") {}
};

// Maximal 4-connected set of occupied vertices.
struct Cluster {
  std::vector<Vertex> vertices;  // sorted
  Vertex anchor{};
  bool touches_frame = false;
  bool contains(Vertex v) const;
};

// Oriented ring of distinct vertices with 8-adjacent consecutive steps.
// step_types[i] classifies vertices[i] -> vertices[(i+1)%n].
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<StepType> step_types;
  std::size_t length() const { return vertices.size(); }
};

// Ring given as an ordered vertex list; fills in step types.
Cycle make_cycle(std::vector<Vertex> ordered);

// Twice the shoelace area of the closed polyline; positive = counter-clockwise.
long long twice_signed_area(const std::vector<Vertex>& ring);

// Rotated so the smallest vertex comes first, counter-clockwise.
Cycle canonical_form(const Cycle& c);
bool same_cycle(const Cycle& a, const Cycle& b);

// Checks every ring invariant: distinct vertices, consecutive 8-adjacency,
// exactly two 8-neighbors per vertex within the ring, positive signed area.
void validate_cycle(const Cycle& c);

struct ClusterLabeling {
  std::vector<std::int32_t> label;  // per window index; -1 = unoccupied
  std::vector<std::int64_t> sizes;  // per cluster id
  std::vector<std::uint8_t> touches_frame;
  std::size_t cluster_count() const { return sizes.size(); }
};

// Union-find labeling; ids assigned by first member in scan order.
ClusterLabeling label_clusters(const SiteConfiguration& config);

// Cluster containing v, or nullopt if v is unoccupied.
std::optional<Cluster> cluster_of(const SiteConfiguration& config, Vertex v);

// Unoccupied vertices 4-adjacent to the cluster, sorted.
std::vector<Vertex> boundary(const Cluster& cluster, const SiteConfiguration& config);

// The subset of the boundary reachable from outside, ordered into a
// counter-clockwise ring.
Cycle external_boundary(const Cluster& cluster, const SiteConfiguration& config);

// Vertices enclosed by the ring: not on it and not 4-reachable from the
// frame without crossing it. Sorted.
std::vector<Vertex> interior(const Cycle& cycle, const Window& window);

}  // namespace perc

#endif
