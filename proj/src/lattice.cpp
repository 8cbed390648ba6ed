#include "perc/lattice.hpp"

#include <cmath>

namespace perc {

BernoulliField::BernoulliField(std::uint64_t seed, double concentration)
    : seed_(seed), concentration_(concentration) {
  if (!(concentration >= 0.0 && concentration <= 1.0)) throw InvalidConcentration{};
  all_one_ = concentration >= 1.0;
  // occupied iff hash < c * 2^64; c = 1 is handled separately so the
  // comparison never has to represent 2^64.
  threshold_ = all_one_ ? ~0ULL : static_cast<std::uint64_t>(std::ldexp(concentration, 64));
}

SiteConfiguration sample_configuration(const Window& window, double concentration,
                                       std::uint64_t seed, std::uint64_t replica_index) {
  BernoulliField field(seed, concentration);
  SiteConfiguration cfg{window, concentration, seed, replica_index, {}};
  cfg.bits.resize(window.size());
  std::uint64_t base = field.base(replica_index);
  int h = window.half_width();
  std::size_t idx = 0;
  for (int y = -h; y <= h; ++y)
    for (int x = -h; x <= h; ++x)
      cfg.bits[idx++] = field.occupied_at(base, Vertex{x, y}) ? 1 : 0;
  return cfg;
}

SiteConfiguration make_configuration(const Window& window,
                                     std::span<const Vertex> occupied) {
  SiteConfiguration cfg{window, 0.0, 0, 0, {}};
  cfg.bits.assign(window.size(), 0);
  for (Vertex v : occupied) {
    if (!window.contains(v)) throw OutOfWindow{};
    cfg.bits[window.index(v)] = 1;
  }
  return cfg;
}

}  // namespace perc
