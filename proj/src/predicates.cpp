#include "agree/predicates.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace agree {

namespace {

void validate_rt(const Family& fam, int r, int t) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (t < 0 || t > fam.n()) {
    throw std::invalid_argument("agreement demand t must be in [0, n]");
  }
}

// One explored (AND, OR) profile of a tuple of members.  parent/member
// record how the profile was reached so a concrete tuple can be replayed.
struct ProfNode {
  Mask andm;
  Mask orm;
  std::int32_t parent;
  Mask member;
};

struct DpOutcome {
  int min_agreement = 0;
  std::vector<int> min_by_size;  // cumulative over tuple sizes 1..depth
  std::vector<Mask> argmin_chain;
  bool violated = false;
};

// Explores the (AND, OR) profiles of member multisets level by level, up
// to tuples of size min(r, |F|).  A profile (a, o) subsumes (a', o')
// whenever a is contained in a' and o contains o': every extension of the
// former agrees on at most as many coordinates, so only the Pareto frontier
// of profiles is kept per level.  With a cutoff the run stops at the first
// profile whose agreement drops below it, and discards profiles that
// provably cannot get there even when extended by the whole family.
DpOutcome run_min_agreement_dp(const Family& fam, int r,
                               std::optional<int> cutoff, bool union_only) {
  const int n = fam.n();
  const auto& mem = fam.members();

  DpOutcome out;
  out.min_agreement = n;
  if (mem.empty()) return out;

  const int depth = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(r), mem.size()));
  out.min_by_size.assign(depth, n);

  const Mask and_all = union_only ? 0 : fam.intersection_mask();
  const Mask or_all = fam.union_mask();

  std::vector<ProfNode> arena;
  arena.reserve(256);
  std::vector<std::int32_t> frontier;

  int running_min = n;
  std::int32_t best_idx = -1;

  auto agreement_of = [n](Mask a, Mask o) {
    return std::popcount(a) + n - std::popcount(o);
  };
  // Smallest agreement any extension of (a, o) can reach.
  auto reach_floor = [&](Mask a, Mask o) {
    return std::popcount(a & and_all) + n - std::popcount(o | or_all);
  };

  // Returns true when the cutoff has been crossed and the run must stop.
  auto consider = [&](Mask a, Mask o, std::int32_t parent, Mask m,
                      std::vector<std::int32_t>& level) -> bool {
    if (cutoff && reach_floor(a, o) >= *cutoff) return false;
    for (std::int32_t idx : level) {
      const ProfNode& f = arena[idx];
      if ((f.andm & ~a) == 0 && (o & ~f.orm) == 0) return false;  // subsumed
    }
    std::erase_if(level, [&](std::int32_t idx) {
      const ProfNode& f = arena[idx];
      return (a & ~f.andm) == 0 && (f.orm & ~o) == 0;
    });
    const auto node = static_cast<std::int32_t>(arena.size());
    arena.push_back({a, o, parent, m});
    level.push_back(node);
    const int agr = agreement_of(a, o);
    if (agr < running_min) {
      running_min = agr;
      best_idx = node;
    }
    return cutoff && agr < *cutoff;
  };

  auto finish = [&](bool violated) {
    out.min_agreement = running_min;
    out.violated = violated;
    for (std::int32_t at = best_idx; at >= 0; at = arena[at].parent) {
      out.argmin_chain.push_back(arena[at].member);
    }
    std::reverse(out.argmin_chain.begin(), out.argmin_chain.end());
    return out;
  };

  for (Mask m : mem) {
    if (consider(union_only ? 0 : m, m, -1, m, frontier)) return finish(true);
  }
  out.min_by_size[0] = running_min;

  std::vector<std::int32_t> next;
  for (int lvl = 2; lvl <= depth; ++lvl) {
    next.clear();
    // Seed with the greedily worst extension of each profile first, so the
    // frontier has strong subsumers before the full cross product streams in.
    for (std::int32_t idx : frontier) {
      const ProfNode p = arena[idx];
      Mask best_m = mem.front();
      int best_agr = agreement_of(p.andm & best_m, p.orm | best_m);
      for (Mask m : mem) {
        const int agr = agreement_of(p.andm & m, p.orm | m);
        if (agr < best_agr) {
          best_agr = agr;
          best_m = m;
        }
      }
      if (consider(p.andm & best_m, p.orm | best_m, idx, best_m, next)) {
        return finish(true);
      }
    }
    for (std::int32_t idx : frontier) {
      const ProfNode p = arena[idx];
      for (Mask m : mem) {
        if (consider(p.andm & m, p.orm | m, idx, m, next)) {
          return finish(true);
        }
      }
    }
    out.min_by_size[lvl - 1] = running_min;

    // Fixpoint: identical frontier reproduces itself on every later level.
    auto key = [&](const std::vector<std::int32_t>& v) {
      std::vector<std::pair<Mask, Mask>> k;
      k.reserve(v.size());
      for (std::int32_t idx : v) k.emplace_back(arena[idx].andm, arena[idx].orm);
      std::sort(k.begin(), k.end());
      return k;
    };
    const bool stable = running_min == 0 || key(next) == key(frontier);
    frontier.swap(next);
    if (stable) {
      for (int s = lvl; s < depth; ++s) out.min_by_size[s] = running_min;
      break;
    }
  }
  return finish(false);
}

}  // namespace

Mask agreement_mask(std::span<const Mask> sets, GroundSet ground) {
  if (sets.empty()) throw std::invalid_argument("empty tuple");
  Mask a = ground.full();
  Mask o = 0;
  for (Mask m : sets) {
    if (!ground.contains(m)) {
      throw std::invalid_argument("subset has bits outside the ground set");
    }
    a &= m;
    o |= m;
  }
  return a | (ground.full() & ~o);
}

Mask disagreement_set(std::span<const Mask> sets, GroundSet ground) {
  return ground.full() & ~agreement_mask(sets, ground);
}

std::optional<TupleWitness> find_agreeing_violation(const Family& fam, int r,
                                                    int t) {
  validate_rt(fam, r, t);
  if (fam.size() == 0 || t == 0) return std::nullopt;
  const DpOutcome dp = run_min_agreement_dp(fam, r, t, /*union_only=*/false);
  if (!dp.violated) return std::nullopt;
  return make_witness(dp.argmin_chain, fam.ground());
}

bool is_r_wise_t_agreeing(const Family& fam, int r, int t) {
  return !find_agreeing_violation(fam, r, t).has_value();
}

std::optional<TupleWitness> find_union_violation(const Family& fam, int r,
                                                 int t) {
  validate_rt(fam, r, t);
  if (fam.size() == 0 || t == 0) return std::nullopt;
  const DpOutcome dp = run_min_agreement_dp(fam, r, t, /*union_only=*/true);
  if (!dp.violated) return std::nullopt;
  return make_witness(dp.argmin_chain, fam.ground());
}

bool is_r_wise_t_union(const Family& fam, int r, int t) {
  return !find_union_violation(fam, r, t).has_value();
}

bool is_nontrivial(const Family& fam) {
  return fam.intersection_mask() == 0 &&
         fam.union_mask() == fam.ground().full();
}

bool is_down_closed(const Family& fam) {
  for (Mask m : fam.members()) {
    Mask rest = m;
    while (rest != 0) {
      const Mask bit = rest & (~rest + 1);
      if (!fam.contains(m & ~bit)) return false;
      rest &= rest - 1;
    }
  }
  return true;
}

int max_tuple_disagreement(const Family& fam, int r) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (fam.size() == 0) return 0;
  const DpOutcome dp =
      run_min_agreement_dp(fam, r, std::nullopt, /*union_only=*/false);
  return fam.n() - dp.min_agreement;
}

std::vector<int> max_tuple_disagreement_by_size(const Family& fam, int r) {
  if (r < 1) throw std::invalid_argument("tuple arity r must be >= 1");
  if (fam.size() == 0) return {};
  const DpOutcome dp =
      run_min_agreement_dp(fam, r, std::nullopt, /*union_only=*/false);
  std::vector<int> out(dp.min_by_size.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = fam.n() - dp.min_by_size[i];
  }
  return out;
}

Family family_delta(const Family& fam, Mask r) {
  if (!fam.ground().contains(r)) {
    throw std::invalid_argument("twist mask has bits outside the ground set");
  }
  std::vector<Mask> members;
  members.reserve(fam.size());
  for (Mask m : fam.members()) members.push_back(m ^ r);
  return Family(fam.ground(), std::move(members));
}

Family restrict_drop(const Family& fam, int j) {
  if (j < 1 || j > fam.n()) throw std::invalid_argument("coordinate out of range");
  if (fam.n() < 2) throw std::invalid_argument("ground set would be empty");
  std::vector<Mask> members;
  members.reserve(fam.size());
  for (Mask m : fam.members()) members.push_back(drop_bit(m, j - 1));
  return Family(GroundSet(fam.n() - 1), std::move(members));
}

std::pair<Family, Family> link_views(const Family& fam, int i) {
  if (i < 1 || i > fam.n()) throw std::invalid_argument("coordinate out of range");
  if (fam.n() < 2) throw std::invalid_argument("ground set would be empty");
  const Mask bit = coord_bit(i);
  std::vector<Mask> with_i, without_i;
  for (Mask m : fam.members()) {
    if (m & bit) {
      with_i.push_back(drop_bit(m, i - 1));
    } else {
      without_i.push_back(drop_bit(m, i - 1));
    }
  }
  const GroundSet g(fam.n() - 1);
  return {Family(g, std::move(with_i)), Family(g, std::move(without_i))};
}

Family link_join(const Family& with_i, const Family& without_i, int i) {
  if (with_i.ground() != without_i.ground()) {
    throw std::invalid_argument("link views must share a ground set");
  }
  const int n = with_i.n() + 1;
  if (n > kMaxAlgebraCoords) throw std::invalid_argument("ground set too large");
  if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
  const Mask bit = coord_bit(i);
  std::vector<Mask> members;
  members.reserve(with_i.size() + without_i.size());
  for (Mask m : with_i.members()) members.push_back(insert_zero_bit(m, i - 1) | bit);
  for (Mask m : without_i.members()) members.push_back(insert_zero_bit(m, i - 1));
  return Family(GroundSet(n), std::move(members));
}

}  // namespace agree
