#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace agree {

/// A subset of the ground set [n], one bit per coordinate.
/// Coordinate i (1-based) lives at bit position i-1.
using Mask = std::uint64_t;

/// Algebra operations support up to 63 coordinates (one machine word,
/// full mask still representable).  Search operations are further capped
/// at 24 coordinates so the 2^n candidate universe stays enumerable.
inline constexpr int kMaxAlgebraCoords = 63;
inline constexpr int kMaxSearchCoords = 24;

/// The coordinate set {1,...,n}.  Validates 1 <= n <= 63 on construction.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int n() const noexcept { return n_; }
  Mask full() const noexcept { return (Mask{1} << n_) - 1; }
  bool contains(Mask m) const noexcept { return (m & ~full()) == 0; }

  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

/// Bit for 1-based coordinate i.  Throws on i outside [1, 63].
Mask coord_bit(int coord);

/// 1-based coordinates of the set bits, ascending.
std::vector<int> mask_coords(Mask m);

/// Mask from 1-based coordinates; validates against the ground set.
Mask mask_from_coords(std::span<const int> coords, GroundSet ground);

/// Remove the bit at 0-based position pos, shifting higher bits down.
inline Mask drop_bit(Mask m, int pos) noexcept {
  const Mask low = m & ((Mask{1} << pos) - 1);
  return low | ((m >> (pos + 1)) << pos);
}

/// Insert a zero bit at 0-based position pos, shifting higher bits up.
inline Mask insert_zero_bit(Mask m, int pos) noexcept {
  const Mask low = m & ((Mask{1} << pos) - 1);
  return low | ((m >> pos) << (pos + 1));
}

/// A canonical, duplicate-free collection of subsets of a shared ground set.
/// Members are kept sorted ascending by mask value; the constructor
/// canonicalizes (sorts, deduplicates) and validates every member.
class Family {
 public:
  Family(GroundSet ground, std::vector<Mask> members);

  static Family empty(GroundSet ground) { return Family(ground, {}); }

  const GroundSet& ground() const noexcept { return ground_; }
  int n() const noexcept { return ground_.n(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Mask>& members() const noexcept { return members_; }

  /// Membership test, O(log |F|).
  bool contains(Mask m) const noexcept;

  /// AND over all members; identity (full mask) for the empty family.
  Mask intersection_mask() const noexcept;
  /// OR over all members; identity (0) for the empty family.
  Mask union_mask() const noexcept;

  bool operator==(const Family&) const = default;

 private:
  GroundSet ground_;
  std::vector<Mask> members_;
};

/// Certificate for a violated r-wise property: the offending tuple with
/// its AND mask, OR mask and agreement count.
struct TupleWitness {
  std::vector<Mask> sets;
  Mask and_mask = 0;
  Mask or_mask = 0;
  int agreement_count = 0;
};

/// Builds a witness from a tuple, recomputing the derived fields.
TupleWitness make_witness(std::span<const Mask> sets, GroundSet ground);

/// Stable 64-bit content hash of the canonical serialization (FNV-1a over
/// n and the member masks).  Platform-independent.
std::uint64_t family_digest(const Family& fam);

}  // namespace agree
