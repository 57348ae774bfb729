#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "agree/reference.hpp"
#include "agree/search.hpp"

namespace agree {

namespace {

// Naive feasibility for the n = 5 DFS: candidate c joins the family iff
// every tuple formed from min(r-1, k) chosen members plus c still agrees
// on t coordinates, counted coordinate by coordinate.
bool naive_can_add(const std::vector<Mask>& chosen, Mask c, int n, int r,
                   int t) {
  const int k = static_cast<int>(chosen.size());
  const int pick = std::min(r - 1, k);
  std::vector<Mask> tuple(pick + 1);
  tuple[pick] = c;
  std::function<bool(int, int)> rec = [&](int start, int filled) -> bool {
    if (filled == pick) {
      int agree = 0;
      for (int coord = 0; coord < n; ++coord) {
        const Mask bit = Mask{1} << coord;
        bool all = true, none = true;
        for (Mask m : tuple) {
          if (m & bit) {
            none = false;
          } else {
            all = false;
          }
        }
        if (all || none) ++agree;
      }
      return agree >= t;
    }
    for (int i = start; i + (pick - filled) <= k; ++i) {
      tuple[filled] = chosen[i];
      if (!rec(i + 1, filled + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

SearchResult brute_force_oracle(const SearchParams& params) {
  if (params.n < 1 || params.n > 5) {
    throw std::invalid_argument(
        "oracle supports n <= 4 (full sweep) or n = 5 (plain DFS)");
  }
  if (params.r < 2) throw std::invalid_argument("search requires r >= 2");
  if (params.t < 1 || params.t > params.n) {
    throw std::invalid_argument("search requires 1 <= t <= n");
  }
  if (params.enumerate_all_maximum) {
    throw std::invalid_argument("oracle does not enumerate maximum families");
  }

  const auto start = std::chrono::steady_clock::now();
  const GroundSet ground(params.n);
  const Mask full = ground.full();
  const int universe = 1 << params.n;

  SearchResult res;
  res.params = params;
  res.witness = Family::empty(ground);

  int best = 0;
  std::vector<Mask> best_members;
  bool found = false;

  if (params.n <= 4) {
    // Sweep every subfamily of 2^[n]; candidate masks are 0..2^n-1, so a
    // family is itself a bitmask over the universe.
    const std::uint64_t fam_count = std::uint64_t{1} << universe;
    for (std::uint64_t fm = 0; fm < fam_count; ++fm) {
      ++res.stats.nodes_explored;
      std::vector<Mask> members;
      Mask and_all = full, or_all = 0;
      for (int i = 0; i < universe; ++i) {
        if (fm & (std::uint64_t{1} << i)) {
          members.push_back(static_cast<Mask>(i));
          and_all &= static_cast<Mask>(i);
          or_all |= static_cast<Mask>(i);
        }
      }
      if (members.empty()) continue;
      if (params.require_nontrivial && !(and_all == 0 && or_all == full)) {
        continue;
      }
      const Family fam(ground, members);
      if (!ref::is_r_wise_t_agreeing(fam, params.r, params.t)) continue;
      if (static_cast<int>(members.size()) > best) {
        best = static_cast<int>(members.size());
        best_members = members;
        found = true;
      }
    }
  } else {
    std::vector<Mask> chosen;
    std::function<void(int)> dfs = [&](int idx) {
      ++res.stats.nodes_explored;
      if (idx == universe) return;
      const Mask c = static_cast<Mask>(idx);
      if (naive_can_add(chosen, c, params.n, params.r, params.t)) {
        chosen.push_back(c);
        Mask and_all = full, or_all = 0;
        for (Mask m : chosen) {
          and_all &= m;
          or_all |= m;
        }
        if ((!params.require_nontrivial ||
             (and_all == 0 && or_all == full)) &&
            static_cast<int>(chosen.size()) > best) {
          best = static_cast<int>(chosen.size());
          best_members = chosen;
          found = true;
        }
        dfs(idx + 1);
        chosen.pop_back();
      }
      dfs(idx + 1);
    };
    dfs(0);
  }

  res.optimum = best;
  res.feasible = found;
  if (found) res.witness = Family(ground, best_members);
  res.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

}  // namespace agree
