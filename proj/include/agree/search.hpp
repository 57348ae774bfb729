#pragma once

#include <cstdint>
#include <optional>

#include "agree/core.hpp"

namespace agree {

/// True when (n, r, t) lies in the range where the extremal bound applies:
/// n > r >= 2 and t <= 2^r - r - 1.
bool theorem_range(int n, int r, int t);

/// The extremal size (r+t+1) * 2^(n-r-t) of a non-trivial r-wise
/// t-agreeing family.  Requires n >= r + t so the exponent is defined.
std::int64_t theorem_bound(int n, int r, int t);

struct SearchParams {
  int n = 0;
  int r = 2;
  int t = 1;
  bool require_nontrivial = false;
  bool enumerate_all_maximum = false;
  std::optional<std::uint64_t> node_limit;
  int jobs = 1;  // 1 = deterministic single worker
};

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t prunes_by_bound = 0;
  std::uint64_t prunes_by_feasibility = 0;
  std::uint64_t maximum_families_found = 0;  // pre-canonicalization count
  double elapsed_seconds = 0.0;
};

struct SearchResult {
  SearchParams params;
  int optimum = 0;
  Family witness = Family::empty(GroundSet(1));
  std::optional<std::vector<Family>> all_maximum_canonical;
  SearchStats stats;
  bool exact = true;     // false when the node limit cut the search short
  bool feasible = true;  // false when no family satisfies the constraints
};

/// Exact maximum size of a family of distinct subsets of [n] that is
/// r-wise t-agreeing (multiset semantics) and, when requested,
/// non-trivial.  Depth-first branch and bound over the 2^n candidate
/// subsets in ascending mask order.  With enumerate_all_maximum (n <= 8)
/// the result also carries one canonical representative per equivalence
/// class of maximum families under signed coordinate permutations.
SearchResult max_agreeing(const SearchParams& params);

/// Exhaustive baseline with no branch-and-bound pruning: a full sweep over
/// every subfamily of 2^[n] for n <= 4, and a plain DFS with feasibility
/// checks only for n = 5.  Refuses larger n.
SearchResult brute_force_oracle(const SearchParams& params);

/// Lexicographically smallest image of the family under the full group of
/// signed coordinate permutations (all n! relabelings composed with all
/// 2^n coordinate flips).  Brute force; requires n <= 8.
Family canonical_form(const Family& fam);

struct UniquenessReport {
  int n = 0, r = 0, t = 0;
  std::int64_t bound = 0;
  int optimum = 0;
  bool inconclusive = false;  // search hit its node limit
  bool optimum_matches_bound = false;
  std::uint64_t maximum_family_count = 0;
  std::size_t class_count = 0;
  bool expected_class_found = false;
  bool trivial_families_of_equal_size_exist = false;
  bool pass = false;
  std::vector<Family> classes;
};

/// Enumerates all maximum non-trivial r-wise t-agreeing families and
/// checks that they form a single equivalence class, the one containing
/// the untwisted extremal family on profile {1,...,r+t}.  Requires
/// r >= 3, n > r, r + t <= n <= 8 and 1 <= t < 2^r - r - 1.
UniquenessReport verify_uniqueness(int n, int r, int t, int jobs = 1);

}  // namespace agree
