#include "agree/reference.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace agree::ref {

namespace {

int agreement_count_loop(std::span<const Mask> sets, GroundSet ground) {
  int agree = 0;
  for (int c = 1; c <= ground.n(); ++c) {
    const Mask bit = Mask{1} << (c - 1);
    bool all = true, none = true;
    for (Mask m : sets) {
      if (m & bit) {
        none = false;
      } else {
        all = false;
      }
    }
    if (all || none) ++agree;
  }
  return agree;
}

int union_size_loop(std::span<const Mask> sets, GroundSet ground) {
  int covered = 0;
  for (int c = 1; c <= ground.n(); ++c) {
    const Mask bit = Mask{1} << (c - 1);
    for (Mask m : sets) {
      if (m & bit) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

// Walks every size-k combination of members in lexicographic order and
// hands it to visit; stops early when visit returns true.
bool for_each_combination(const Family& fam, int k,
                          const std::function<bool(std::span<const Mask>)>& visit) {
  const auto& mem = fam.members();
  std::vector<Mask> tuple(k);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start,
                                                  int filled) -> bool {
    if (filled == k) return visit(tuple);
    for (std::size_t i = start; i + (k - filled) <= mem.size(); ++i) {
      tuple[filled] = mem[i];
      if (rec(i + 1, filled + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

Mask agreement_mask(std::span<const Mask> sets, GroundSet ground) {
  if (sets.empty()) throw std::invalid_argument("empty tuple");
  Mask out = 0;
  for (int c = 1; c <= ground.n(); ++c) {
    const Mask bit = Mask{1} << (c - 1);
    bool all = true, none = true;
    for (Mask m : sets) {
      if (m & bit) {
        none = false;
      } else {
        all = false;
      }
    }
    if (all || none) out |= bit;
  }
  return out;
}

std::optional<TupleWitness> find_agreeing_violation(const Family& fam, int r,
                                                    int t) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (t < 0 || t > fam.n()) {
    throw std::invalid_argument("agreement demand t must be in [0, n]");
  }
  if (fam.size() == 0) return std::nullopt;
  const int k = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(r), fam.size()));
  std::optional<TupleWitness> found;
  for_each_combination(fam, k, [&](std::span<const Mask> tuple) {
    if (agreement_count_loop(tuple, fam.ground()) < t) {
      found = make_witness(tuple, fam.ground());
      return true;
    }
    return false;
  });
  return found;
}

bool is_r_wise_t_agreeing(const Family& fam, int r, int t) {
  return !find_agreeing_violation(fam, r, t).has_value();
}

std::optional<TupleWitness> find_union_violation(const Family& fam, int r,
                                                 int t) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (t < 0 || t > fam.n()) {
    throw std::invalid_argument("agreement demand t must be in [0, n]");
  }
  if (fam.size() == 0) return std::nullopt;
  const int k = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(r), fam.size()));
  std::optional<TupleWitness> found;
  for_each_combination(fam, k, [&](std::span<const Mask> tuple) {
    if (union_size_loop(tuple, fam.ground()) > fam.n() - t) {
      found = make_witness(tuple, fam.ground());
      return true;
    }
    return false;
  });
  return found;
}

bool is_r_wise_t_union(const Family& fam, int r, int t) {
  return !find_union_violation(fam, r, t).has_value();
}

int max_tuple_disagreement(const Family& fam, int r) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (fam.size() == 0) return 0;
  const int k = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(r), fam.size()));
  int worst = 0;
  for_each_combination(fam, k, [&](std::span<const Mask> tuple) {
    worst = std::max(worst,
                     fam.n() - agreement_count_loop(tuple, fam.ground()));
    return false;
  });
  return worst;
}

}  // namespace agree::ref
