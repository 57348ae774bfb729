#include "agree/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agree/constructions.hpp"
#include "agree/predicates.hpp"

namespace agree {

bool theorem_range(int n, int r, int t) {
  if (r < 2 || n <= r || t < 1) return false;
  if (r >= 62) return true;  // cap far exceeds any representable t
  return static_cast<long long>(t) <= (1ll << r) - r - 1;
}

std::int64_t theorem_bound(int n, int r, int t) {
  if (n < 1 || n > kMaxAlgebraCoords) {
    throw std::invalid_argument("n out of range");
  }
  if (r < 0 || t < 0 || r + t < 1) {
    throw std::invalid_argument("need r + t >= 1 with r, t >= 0");
  }
  if (n < r + t) {
    throw std::invalid_argument("exponent negative, bound undefined here");
  }
  if (n - r - t >= 62) throw std::overflow_error("bound exceeds 64-bit range");
  return static_cast<std::int64_t>(r + t + 1) << (n - r - t);
}

namespace {

void validate_params(const SearchParams& p, int max_n) {
  if (p.n < 1 || p.n > max_n) {
    throw std::invalid_argument("n out of range [1, " + std::to_string(max_n) +
                                "]");
  }
  if (p.r < 2) throw std::invalid_argument("search requires r >= 2");
  if (p.t < 1 || p.t > p.n) {
    throw std::invalid_argument("search requires 1 <= t <= n");
  }
}

struct Shared {
  int n = 0;
  int r = 2;  // clamped to the candidate count; semantics unchanged
  int t = 1;
  Mask full = 0;
  bool require_nontrivial = false;
  bool enumerate_all = false;
  std::optional<std::uint64_t> node_limit;
  std::vector<Mask> cands;
  std::vector<Mask> suffix_and, suffix_or;
  std::atomic<int>* global_best = nullptr;
};

// One branch-and-bound worker.  Serial mode runs a single worker over the
// whole tree; parallel mode forks workers from frontier snapshots that all
// share the monotone global best (a stale read only weakens pruning).
struct Worker {
  const Shared* sh = nullptr;

  std::vector<Mask> chosen;
  Mask and_chosen = 0;
  Mask or_chosen = 0;
  std::vector<std::vector<std::pair<Mask, Mask>>> prof;  // by tuple size
  std::vector<std::uint32_t> size_stack;

  SearchStats stats;
  int lower_bound_local = 0;
  int wit_size = -1;
  std::vector<Mask> wit;
  std::vector<std::vector<Mask>> max_families;
  int list_size = -1;
  bool limited = false;

  void init(const Shared* shared) {
    sh = shared;
    and_chosen = sh->full;
    or_chosen = 0;
    prof.assign(sh->r, {});
  }

  int effective_best() const {
    int b = lower_bound_local;
    if (sh->global_best) {
      b = std::max(b, sh->global_best->load(std::memory_order_relaxed));
    }
    return b;
  }

  bool include_feasible(Mask c) const {
    const int lvl = std::min<int>(sh->r - 1, static_cast<int>(chosen.size()));
    if (lvl == 0) return true;
    for (const auto& [a, o] : prof[lvl]) {
      if (std::popcount(a & c) + sh->n - std::popcount(o | c) < sh->t) {
        return false;
      }
    }
    return true;
  }

  void push(Mask c) {
    const int k = static_cast<int>(chosen.size());
    for (int s = 1; s <= sh->r - 1; ++s) {
      size_stack.push_back(static_cast<std::uint32_t>(prof[s].size()));
    }
    for (int s = std::min(k + 1, sh->r - 1); s >= 2; --s) {
      const auto& src = prof[s - 1];
      auto& dst = prof[s];
      for (const auto& [a, o] : src) dst.emplace_back(a & c, o | c);
    }
    prof[1].emplace_back(c, c);
    chosen.push_back(c);
    and_chosen &= c;
    or_chosen |= c;
  }

  void pop(Mask saved_and, Mask saved_or) {
    chosen.pop_back();
    and_chosen = saved_and;
    or_chosen = saved_or;
    for (int s = sh->r - 1; s >= 1; --s) {
      prof[s].resize(size_stack.back());
      size_stack.pop_back();
    }
  }

  void maybe_record() {
    if (sh->require_nontrivial &&
        !(and_chosen == 0 && or_chosen == sh->full)) {
      return;
    }
    const int size = static_cast<int>(chosen.size());
    if (size > lower_bound_local) {
      lower_bound_local = size;
      if (sh->global_best) {
        int cur = sh->global_best->load(std::memory_order_relaxed);
        while (cur < size && !sh->global_best->compare_exchange_weak(
                                 cur, size, std::memory_order_relaxed)) {
        }
      }
    }
    if (size > wit_size) {
      wit_size = size;
      wit = chosen;
    }
    if (sh->enumerate_all) {
      if (size > list_size) {
        list_size = size;
        max_families.clear();
      }
      if (size == list_size) max_families.push_back(chosen);
    }
  }

  // Prune checks for the node about to branch on candidate index idx.
  // Returns false when the whole node can be abandoned.
  bool node_viable(int idx) {
    const int n_cands = static_cast<int>(sh->cands.size());
    const int potential = static_cast<int>(chosen.size()) + (n_cands - idx);
    const int b = effective_best();
    if (sh->enumerate_all ? potential < b : potential <= b) {
      ++stats.prunes_by_bound;
      return false;
    }
    if (sh->require_nontrivial &&
        (((or_chosen | sh->suffix_or[idx]) != sh->full) ||
         ((and_chosen & sh->suffix_and[idx]) != 0))) {
      ++stats.prunes_by_feasibility;
      return false;
    }
    return true;
  }

  void dfs(int idx) {
    const int n_cands = static_cast<int>(sh->cands.size());
    for (;;) {
      if (sh->node_limit && stats.nodes_explored >= *sh->node_limit) {
        limited = true;
        return;
      }
      ++stats.nodes_explored;
      if (idx == n_cands) return;
      if (!node_viable(idx)) return;
      const Mask c = sh->cands[idx];
      if (include_feasible(c)) {
        const Mask sa = and_chosen, so = or_chosen;
        push(c);
        maybe_record();
        dfs(idx + 1);
        pop(sa, so);
        if (limited) return;
      } else {
        ++stats.prunes_by_feasibility;
      }
      ++idx;  // exclude branch
    }
  }

  struct Snapshot {
    std::vector<Mask> chosen;
    Mask and_chosen, or_chosen;
    std::vector<std::vector<std::pair<Mask, Mask>>> prof;
    int idx;
  };

  // Truncated DFS: descends like dfs but snapshots every surviving node at
  // depth_limit instead of recursing past it.  Families entirely above the
  // limit get recorded here, exactly once.
  void expand(int idx, int depth_limit, std::vector<Snapshot>& out) {
    const int n_cands = static_cast<int>(sh->cands.size());
    for (;;) {
      ++stats.nodes_explored;
      if (idx == n_cands) return;
      if (idx == depth_limit) {
        out.push_back({chosen, and_chosen, or_chosen, prof, idx});
        return;
      }
      if (!node_viable(idx)) return;
      const Mask c = sh->cands[idx];
      if (include_feasible(c)) {
        const Mask sa = and_chosen, so = or_chosen;
        push(c);
        maybe_record();
        expand(idx + 1, depth_limit, out);
        pop(sa, so);
      } else {
        ++stats.prunes_by_feasibility;
      }
      ++idx;
    }
  }
};

// Constructed lower-bound witness used to warm-start the search.  Verified
// against the predicates before use; the bound itself never prunes.
std::optional<Family> warm_seed(const SearchParams& p) {
  std::optional<Family> seed;
  if (p.require_nontrivial) {
    if (p.n >= p.r + p.t) seed = brace_daykin(p.n, p.r, p.t);
  } else {
    seed = fixed_coords(p.n, (Mask{1} << p.t) - 1);
  }
  if (!seed) return std::nullopt;
  if (!is_r_wise_t_agreeing(*seed, p.r, p.t)) return std::nullopt;
  if (p.require_nontrivial && !is_nontrivial(*seed)) return std::nullopt;
  return seed;
}

std::vector<Family> canonicalize_families(const GroundSet& g,
                                          std::vector<std::vector<Mask>> raw) {
  std::vector<Family> out;
  out.reserve(raw.size());
  for (auto& members : raw) {
    out.push_back(Family(g, std::move(members)));
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = canonical_form(out[i]);
  }
  std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) {
    return a.members() < b.members();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SearchResult max_agreeing(const SearchParams& params) {
  validate_params(params, kMaxSearchCoords);
  if (params.enumerate_all_maximum && params.n > 8) {
    throw std::invalid_argument(
        "enumerating maximum families requires n <= 8 (canonicalization)");
  }
  const auto start = std::chrono::steady_clock::now();
  const GroundSet ground(params.n);

  Shared sh;
  sh.n = params.n;
  sh.t = params.t;
  sh.full = ground.full();
  sh.require_nontrivial = params.require_nontrivial;
  sh.enumerate_all = params.enumerate_all_maximum;
  sh.node_limit = params.node_limit;
  const int n_cands = 1 << params.n;
  sh.r = std::min(params.r, n_cands);  // tuples longer than the family add nothing
  sh.cands.resize(n_cands);
  for (int i = 0; i < n_cands; ++i) sh.cands[i] = static_cast<Mask>(i);
  sh.suffix_and.assign(n_cands + 1, sh.full);
  sh.suffix_or.assign(n_cands + 1, 0);
  for (int i = n_cands - 1; i >= 0; --i) {
    sh.suffix_and[i] = sh.suffix_and[i + 1] & sh.cands[i];
    sh.suffix_or[i] = sh.suffix_or[i + 1] | sh.cands[i];
  }

  const std::optional<Family> seed = warm_seed(params);

  SearchResult res;
  res.params = params;
  res.witness = Family::empty(ground);

  // The node limit needs a single deterministic counter.
  const bool parallel = params.jobs > 1 && !params.node_limit;

  if (!parallel) {
    Worker w;
    w.init(&sh);
    if (seed) {
      w.lower_bound_local = static_cast<int>(seed->size());
      w.wit_size = static_cast<int>(seed->size());
      w.wit = seed->members();
    }
    w.dfs(0);
    res.optimum = w.lower_bound_local;
    res.exact = !w.limited;
    res.stats = w.stats;
    if (w.wit_size >= 1 && w.wit_size == res.optimum) {
      res.witness = Family(ground, w.wit);
    }
    if (sh.enumerate_all) {
      std::vector<std::vector<Mask>> raw;
      for (auto& f : w.max_families) {
        if (static_cast<int>(f.size()) == res.optimum) raw.push_back(std::move(f));
      }
      res.stats.maximum_families_found = raw.size();
      res.all_maximum_canonical = canonicalize_families(ground, std::move(raw));
    }
  } else {
    std::atomic<int> global_best{seed ? static_cast<int>(seed->size()) : 0};
    sh.global_best = &global_best;

    Worker expander;
    expander.init(&sh);
    std::vector<Worker::Snapshot> frontier;
    int depth = 4;
    while ((1 << depth) < 8 * params.jobs && depth < params.n + 2) ++depth;
    depth = std::min(depth, n_cands);
    expander.expand(0, depth, frontier);

    std::vector<Worker> workers(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(params.jobs)
#endif
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      Worker& w = workers[i];
      w.init(&sh);
      w.chosen = frontier[i].chosen;
      w.and_chosen = frontier[i].and_chosen;
      w.or_chosen = frontier[i].or_chosen;
      w.prof = frontier[i].prof;
      w.lower_bound_local = global_best.load(std::memory_order_relaxed);
      w.dfs(frontier[i].idx);
    }

    res.optimum = global_best.load();
    res.stats = expander.stats;
    res.exact = !expander.limited;
    // Deterministic preference: the expander first, then frontier order.
    if (expander.wit_size == res.optimum && expander.wit_size >= 1) {
      res.witness = Family(ground, expander.wit);
    }
    std::vector<std::vector<Mask>> raw;
    if (sh.enumerate_all) {
      for (auto& f : expander.max_families) {
        if (static_cast<int>(f.size()) == res.optimum) raw.push_back(std::move(f));
      }
    }
    for (Worker& w : workers) {
      res.stats.nodes_explored += w.stats.nodes_explored;
      res.stats.prunes_by_bound += w.stats.prunes_by_bound;
      res.stats.prunes_by_feasibility += w.stats.prunes_by_feasibility;
      res.exact = res.exact && !w.limited;
      if (res.witness.size() == 0 && w.wit_size == res.optimum &&
          w.wit_size >= 1) {
        res.witness = Family(ground, w.wit);
      }
      if (sh.enumerate_all) {
        for (auto& f : w.max_families) {
          if (static_cast<int>(f.size()) == res.optimum) {
            raw.push_back(std::move(f));
          }
        }
      }
    }
    if (res.witness.size() == 0 && seed &&
        static_cast<int>(seed->size()) == res.optimum) {
      res.witness = *seed;
    }
    if (sh.enumerate_all) {
      res.stats.maximum_families_found = raw.size();
      res.all_maximum_canonical = canonicalize_families(ground, std::move(raw));
    }
  }

  if (res.optimum == 0) res.feasible = false;

  // Re-verify the witness through the predicate layer before handing it out.
  if (res.feasible) {
    if (static_cast<int>(res.witness.size()) != res.optimum ||
        !is_r_wise_t_agreeing(res.witness, params.r, params.t) ||
        (params.require_nontrivial && !is_nontrivial(res.witness))) {
      throw std::logic_error("search witness failed re-verification");
    }
  }

  res.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

UniquenessReport verify_uniqueness(int n, int r, int t, int jobs) {
  if (r < 3) throw std::invalid_argument("uniqueness check requires r >= 3");
  if (n <= r) throw std::invalid_argument("uniqueness check requires n > r");
  if (n > 8) throw std::invalid_argument("uniqueness check requires n <= 8");
  if (t < 1 || static_cast<long long>(t) >= (1ll << r) - r - 1) {
    throw std::invalid_argument(
        "uniqueness check requires 1 <= t < 2^r - r - 1");
  }
  if (n < r + t) throw std::invalid_argument("uniqueness check requires n >= r + t");

  UniquenessReport rep;
  rep.n = n;
  rep.r = r;
  rep.t = t;
  rep.bound = theorem_bound(n, r, t);

  SearchParams p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.require_nontrivial = true;
  p.enumerate_all_maximum = true;
  p.jobs = jobs;
  const SearchResult res = max_agreeing(p);

  rep.optimum = res.optimum;
  rep.inconclusive = !res.exact;
  rep.optimum_matches_bound = res.optimum == rep.bound;
  rep.maximum_family_count = res.stats.maximum_families_found;
  rep.classes = res.all_maximum_canonical.value_or(std::vector<Family>{});
  rep.class_count = rep.classes.size();

  const Mask profile = (Mask{1} << (r + t)) - 1;
  const Family expected = canonical_form(twisted(n, profile, 0));
  rep.expected_class_found =
      std::find(rep.classes.begin(), rep.classes.end(), expected) !=
      rep.classes.end();

  // Trivial families of the extremal size always exist in range: any
  // bound-sized subfamily of the fixed-coordinates family qualifies.
  {
    const Family fixed = fixed_coords(n, (Mask{1} << t) - 1);
    std::vector<Mask> prefix(fixed.members().begin(),
                             fixed.members().begin() +
                                 static_cast<std::size_t>(rep.bound));
    const Family sample(GroundSet(n), std::move(prefix));
    rep.trivial_families_of_equal_size_exist =
        is_r_wise_t_agreeing(sample, r, t) && !is_nontrivial(sample);
  }

  rep.pass = !rep.inconclusive && rep.optimum_matches_bound &&
             rep.class_count == 1 && rep.expected_class_found;
  return rep;
}

}  // namespace agree
