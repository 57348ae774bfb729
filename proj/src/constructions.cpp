#include "agree/constructions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace agree {

namespace {

// Materialization cap; larger families have no realistic use here.
constexpr std::uint64_t kMaxFamilySize = std::uint64_t{1} << 22;

void check_size(std::uint64_t count) {
  if (count > kMaxFamilySize) {
    throw std::invalid_argument("family too large to materialize");
  }
}

}  // namespace

Family brace_daykin(int n, int r, int t) {
  if (r < 0 || t < 0 || r + t < 1) {
    throw std::invalid_argument("need r + t >= 1 with r, t >= 0");
  }
  const GroundSet ground(n);
  const int s = r + t;
  if (n < s) throw std::invalid_argument("ground set too small");
  check_size(std::uint64_t(s + 1) << (n - s));

  std::vector<Mask> members;
  members.reserve(std::size_t(s + 1) << (n - s));
  const Mask high_count = Mask{1} << (n - s);
  for (Mask high = 0; high < high_count; ++high) {
    const Mask base = high << s;
    members.push_back(base);
    for (int k = 0; k < s; ++k) members.push_back(base | (Mask{1} << k));
  }
  return Family(ground, std::move(members));
}

Family twisted(int n, Mask profile, Mask twist) {
  const GroundSet ground(n);
  if (!ground.contains(profile)) {
    throw std::invalid_argument("profile set has bits outside the ground set");
  }
  if (profile == 0) throw std::invalid_argument("profile set must be non-empty");
  if ((twist & ~profile) != 0) {
    throw std::invalid_argument("twist set must lie inside A");
  }
  const int s = std::popcount(profile);
  check_size(std::uint64_t(s + 1) << (n - s));

  const Mask comp = ground.full() & ~profile;
  std::vector<Mask> members;
  members.reserve(std::size_t(s + 1) << (n - s));
  Mask high = 0;
  do {
    members.push_back(high ^ twist);
    for (Mask rest = profile; rest != 0; rest &= rest - 1) {
      const Mask low = rest & (~rest + 1);
      members.push_back((high | low) ^ twist);
    }
    high = (high - comp) & comp;
  } while (high != 0);
  return Family(ground, std::move(members));
}

Family parity_family(int n) {
  const GroundSet ground(n);
  check_size(std::uint64_t{1} << (n - 1));
  std::vector<Mask> members;
  members.reserve(std::size_t{1} << (n - 1));
  for (Mask m = 0; m <= ground.full(); ++m) {
    if (std::popcount(m) % 2 == 0) members.push_back(m);
  }
  return Family(ground, std::move(members));
}

Family fixed_coords(int n, Mask fixed) {
  const GroundSet ground(n);
  if (!ground.contains(fixed)) {
    throw std::invalid_argument("fixed set has bits outside the ground set");
  }
  if (fixed == 0) throw std::invalid_argument("fixed set must be non-empty");
  check_size(std::uint64_t{1} << (n - std::popcount(fixed)));

  const Mask comp = ground.full() & ~fixed;
  std::vector<Mask> members;
  members.reserve(std::size_t{1} << (n - std::popcount(fixed)));
  Mask free = 0;
  do {
    members.push_back(fixed | free);
    free = (free - comp) & comp;
  } while (free != 0);
  return Family(ground, std::move(members));
}

}  // namespace agree
