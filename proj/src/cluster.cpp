#include "perc/cluster.hpp"

#include <algorithm>
#include <numeric>

namespace perc {

bool Cluster::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

Cycle make_cycle(std::vector<Vertex> ordered) {
  Cycle c;
  c.vertices = std::move(ordered);
  std::size_t n = c.vertices.size();
  if (n < 3) throw CycleValidation("ring needs at least 3 vertices");
  c.step_types.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = c.vertices[i], v = c.vertices[(i + 1) % n];
    if (!phibar_adjacent(u, v))
      throw CycleValidation("consecutive ring vertices not 8-adjacent");
    c.step_types.push_back(phi_adjacent(u, v) ? StepType::Straight : StepType::Diagonal);
  }
  return c;
}

long long twice_signed_area(const std::vector<Vertex>& ring) {
  long long a = 0;
  std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = ring[i], v = ring[(i + 1) % n];
    a += static_cast<long long>(u.x) * v.y - static_cast<long long>(v.x) * u.y;
  }
  return a;
}

Cycle canonical_form(const Cycle& c) {
  std::vector<Vertex> ring = c.vertices;
  if (twice_signed_area(ring) < 0) std::reverse(ring.begin(), ring.end());
  auto it = std::min_element(ring.begin(), ring.end());
  std::rotate(ring.begin(), it, ring.end());
  return make_cycle(std::move(ring));
}

bool same_cycle(const Cycle& a, const Cycle& b) {
  if (a.length() != b.length()) return false;
  return canonical_form(a).vertices == canonical_form(b).vertices;
}

void validate_cycle(const Cycle& c) {
  std::size_t n = c.vertices.size();
  if (n < 3) throw CycleValidation("ring needs at least 3 vertices");
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw CycleValidation("ring vertices not distinct");
  if (c.step_types.size() != n) throw CycleValidation("step types out of sync");
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = c.vertices[i], v = c.vertices[(i + 1) % n];
    if (!phibar_adjacent(u, v))
      throw CycleValidation("consecutive ring vertices not 8-adjacent");
    StepType expect = phi_adjacent(u, v) ? StepType::Straight : StepType::Diagonal;
    if (c.step_types[i] != expect) throw CycleValidation("step type mismatch");
  }
  // each vertex must see exactly two ring vertices among its 8-neighbors
  for (Vertex v : c.vertices) {
    int count = 0;
    for (Vertex w : phibar_neighbors(v))
      if (std::binary_search(sorted.begin(), sorted.end(), w)) ++count;
    if (count != 2)
      throw CycleValidation("vertex has other than two ring neighbors");
  }
  if (twice_signed_area(c.vertices) <= 0)
    throw CycleValidation("ring not counter-clockwise");
}

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // keep the smaller index as root
    else parent[a] = b;
  }
};

}  // namespace

ClusterLabeling label_clusters(const SiteConfiguration& config) {
  const Window& win = config.window;
  std::size_t size = win.size();
  UnionFind uf(size);
  int h = win.half_width();
  for (int y = -h; y <= h; ++y) {
    for (int x = -h; x <= h; ++x) {
      Vertex v{x, y};
      std::size_t i = win.index(v);
      if (!config.bits[i]) continue;
      if (x > -h && config.bits[i - 1]) uf.unite(static_cast<std::int32_t>(i), static_cast<std::int32_t>(i - 1));
      if (y > -h && config.bits[i - win.side()])
        uf.unite(static_cast<std::int32_t>(i), static_cast<std::int32_t>(i - win.side()));
    }
  }
  ClusterLabeling out;
  out.label.assign(size, -1);
  std::vector<std::int32_t> root_to_id(size, -1);
  for (std::size_t i = 0; i < size; ++i) {
    if (!config.bits[i]) continue;
    std::int32_t r = uf.find(static_cast<std::int32_t>(i));
    if (root_to_id[r] < 0) {
      root_to_id[r] = static_cast<std::int32_t>(out.sizes.size());
      out.sizes.push_back(0);
      out.touches_frame.push_back(0);
    }
    std::int32_t id = root_to_id[r];
    out.label[i] = id;
    out.sizes[id] += 1;
    if (win.on_frame(win.vertex_at(i))) out.touches_frame[id] = 1;
  }
  return out;
}

std::optional<Cluster> cluster_of(const SiteConfiguration& config, Vertex v) {
  const Window& win = config.window;
  if (!win.contains(v)) throw OutOfWindow{};
  if (!config.bits[win.index(v)]) return std::nullopt;
  Cluster cl;
  cl.anchor = v;
  std::vector<std::uint8_t> seen(win.size(), 0);
  std::vector<Vertex> stack{v};
  seen[win.index(v)] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    cl.vertices.push_back(u);
    if (win.on_frame(u)) cl.touches_frame = true;
    for (Vertex w : phi_neighbors(u)) {
      if (!win.contains(w)) continue;
      std::size_t i = win.index(w);
      if (seen[i] || !config.bits[i]) continue;
      seen[i] = 1;
      stack.push_back(w);
    }
  }
  std::sort(cl.vertices.begin(), cl.vertices.end());
  return cl;
}

std::vector<Vertex> boundary(const Cluster& cluster, const SiteConfiguration&) {
  if (cluster.touches_frame) throw FrameContact{};
  std::vector<Vertex> out;
  for (Vertex v : cluster.vertices)
    for (Vertex w : phi_neighbors(v))
      if (!cluster.contains(w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Orders a vertex set into a counter-clockwise ring, starting from the
// smallest vertex. Throws CycleValidation if the set is not a single ring.
Cycle order_ring(std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end());
  auto in_set = [&](Vertex v) {
    return std::binary_search(verts.begin(), verts.end(), v);
  };
  std::size_t n = verts.size();
  if (n < 3) throw CycleValidation("external boundary smaller than a ring");
  for (Vertex v : verts) {
    int count = 0;
    for (Vertex w : phibar_neighbors(v))
      if (in_set(w)) ++count;
    if (count != 2)
      throw CycleValidation("vertex has other than two ring neighbors");
  }
  std::vector<Vertex> ring;
  ring.reserve(n);
  Vertex start = verts.front();
  Vertex prev = start;
  Vertex cur = start;
  // first neighbor in the fixed 8-direction order
  for (Vertex w : phibar_neighbors(start))
    if (in_set(w)) {
      cur = w;
      break;
    }
  ring.push_back(start);
  while (cur != start) {
    ring.push_back(cur);
    if (ring.size() > n) throw CycleValidation("ring walk does not close");
    Vertex next = cur;
    bool found = false;
    for (Vertex w : phibar_neighbors(cur)) {
      if (w != prev && in_set(w)) {
        next = w;
        found = true;
        break;
      }
    }
    if (!found) throw CycleValidation("ring walk stuck");
    prev = cur;
    cur = next;
  }
  if (ring.size() != n)
    throw CycleValidation("boundary set is not a single ring");
  if (twice_signed_area(ring) < 0) {
    std::reverse(ring.begin(), ring.end());
    std::rotate(ring.begin(), std::min_element(ring.begin(), ring.end()), ring.end());
  }
  Cycle c = make_cycle(std::move(ring));
  validate_cycle(c);
  return c;
}

}  // namespace

Cycle external_boundary(const Cluster& cluster, const SiteConfiguration& config) {
  if (cluster.touches_frame) throw FrameContact{};
  const Window& win = config.window;
  std::vector<Vertex> bnd = boundary(cluster, config);
  // flood 4-steps from the frame through the complement of W and its boundary
  std::vector<std::uint8_t> blocked(win.size(), 0);
  for (Vertex v : cluster.vertices) blocked[win.index(v)] = 1;
  for (Vertex v : bnd) blocked[win.index(v)] = 1;
  std::vector<std::uint8_t> outer(win.size(), 0);
  std::vector<Vertex> stack;
  int h = win.half_width();
  for (int x = -h; x <= h; ++x)
    for (int y : {-h, h})
      for (Vertex v : {Vertex{x, y}, Vertex{y, x}}) {
        std::size_t i = win.index(v);
        if (!blocked[i] && !outer[i]) {
          outer[i] = 1;
          stack.push_back(v);
        }
      }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : phi_neighbors(u)) {
      if (!win.contains(w)) continue;
      std::size_t i = win.index(w);
      if (blocked[i] || outer[i]) continue;
      outer[i] = 1;
      stack.push_back(w);
    }
  }
  std::vector<Vertex> ext;
  for (Vertex v : bnd) {
    bool reachable = win.on_frame(v);
    if (!reachable)
      for (Vertex w : phi_neighbors(v))
        if (win.contains(w) && outer[win.index(w)]) {
          reachable = true;
          break;
        }
    if (reachable) ext.push_back(v);
  }
  return order_ring(std::move(ext));
}

std::vector<Vertex> interior(const Cycle& cycle, const Window& window) {
  for (Vertex v : cycle.vertices)
    if (!window.contains(v) || window.on_frame(v)) throw CycleTouchesFrame{};
  std::vector<std::uint8_t> on_cycle(window.size(), 0);
  for (Vertex v : cycle.vertices) on_cycle[window.index(v)] = 1;
  std::vector<std::uint8_t> reached(window.size(), 0);
  std::vector<Vertex> stack;
  int h = window.half_width();
  for (int x = -h; x <= h; ++x)
    for (int y : {-h, h})
      for (Vertex v : {Vertex{x, y}, Vertex{y, x}}) {
        std::size_t i = window.index(v);
        if (!on_cycle[i] && !reached[i]) {
          reached[i] = 1;
          stack.push_back(v);
        }
      }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : phi_neighbors(u)) {
      if (!window.contains(w)) continue;
      std::size_t i = window.index(w);
      if (on_cycle[i] || reached[i]) continue;
      reached[i] = 1;
      stack.push_back(w);
    }
  }
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < window.size(); ++i)
    if (!on_cycle[i] && !reached[i]) out.push_back(window.vertex_at(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace perc
