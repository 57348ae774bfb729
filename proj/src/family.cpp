#include "agree/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agree {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxAlgebraCoords) {
    throw std::invalid_argument("ground set size must be in [1, 63], got " +
                                std::to_string(n));
  }
}

Mask coord_bit(int coord) {
  if (coord < 1 || coord > kMaxAlgebraCoords) {
    throw std::invalid_argument("coordinate must be in [1, 63], got " +
                                std::to_string(coord));
  }
  return Mask{1} << (coord - 1);
}

std::vector<int> mask_coords(Mask m) {
  std::vector<int> out;
  while (m != 0) {
    const int pos = std::countr_zero(m);
    out.push_back(pos + 1);
    m &= m - 1;
  }
  return out;
}

Mask mask_from_coords(std::span<const int> coords, GroundSet ground) {
  Mask m = 0;
  for (int c : coords) {
    if (c < 1 || c > ground.n()) {
      throw std::invalid_argument("coordinate " + std::to_string(c) +
                                  " out of range for n=" +
                                  std::to_string(ground.n()));
    }
    m |= coord_bit(c);
  }
  return m;
}

Family::Family(GroundSet ground, std::vector<Mask> members)
    : ground_(ground), members_(std::move(members)) {
  for (Mask m : members_) {
    if (!ground_.contains(m)) {
      throw std::invalid_argument("subset has bits outside the ground set");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Family::contains(Mask m) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Mask Family::intersection_mask() const noexcept {
  Mask acc = ground_.full();
  for (Mask m : members_) acc &= m;
  return acc;
}

Mask Family::union_mask() const noexcept {
  Mask acc = 0;
  for (Mask m : members_) acc |= m;
  return acc;
}

TupleWitness make_witness(std::span<const Mask> sets, GroundSet ground) {
  if (sets.empty()) throw std::invalid_argument("empty tuple");
  TupleWitness w;
  w.sets.assign(sets.begin(), sets.end());
  w.and_mask = ground.full();
  w.or_mask = 0;
  for (Mask m : sets) {
    w.and_mask &= m;
    w.or_mask |= m;
  }
  w.agreement_count = std::popcount(w.and_mask) + ground.n() -
                      std::popcount(w.or_mask);
  return w;
}

std::uint64_t family_digest(const Family& fam) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(fam.n()));
  for (Mask m : fam.members()) mix(m);
  return h;
}

}  // namespace agree
