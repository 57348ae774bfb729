#pragma once

#include <optional>
#include <utility>

#include "agree/core.hpp"

namespace agree {

/// Coordinates on which all sets of the tuple agree: (AND of all masks)
/// together with the coordinates outside (OR of all masks).
/// Throws "empty tuple" for an empty input.
Mask agreement_mask(std::span<const Mask> sets, GroundSet ground);

/// W(A_1,...,A_r) = (A_1 u ... u A_r) \ (A_1 n ... n A_r); the complement
/// of agreement_mask within the ground set.
Mask disagreement_set(std::span<const Mask> sets, GroundSet ground);

/// True iff every r-tuple of members (multiset semantics: repeats allowed,
/// equivalently every distinct subset of size min(r, |F|)) agrees on at
/// least t coordinates.  The empty family passes vacuously.
bool is_r_wise_t_agreeing(const Family& fam, int r, int t);

/// Like is_r_wise_t_agreeing, but returns a violating tuple when the
/// property fails (agreement_count < t), or nullopt when it holds.
std::optional<TupleWitness> find_agreeing_violation(const Family& fam, int r,
                                                    int t);

/// True iff AND over all members is empty and OR over all members is the
/// full ground set.  The empty family is trivial.
bool is_nontrivial(const Family& fam);

/// True iff every r-tuple of members has |union| <= n - t.
bool is_r_wise_t_union(const Family& fam, int r, int t);

std::optional<TupleWitness> find_union_violation(const Family& fam, int r,
                                                 int t);

/// Closed under taking subsets (single-element removals suffice).
bool is_down_closed(const Family& fam);

/// Exact max of |W(A_1,...,A_r)| over r-tuples of members (multiset
/// semantics).  0 for the empty family.
int max_tuple_disagreement(const Family& fam, int r);

/// Per-size variant: entry s-1 holds the max over tuples of size s+... up
/// to s, for s = 1..min(r, |F|) (cumulative, non-decreasing in s).
std::vector<int> max_tuple_disagreement_by_size(const Family& fam, int r);

/// {F xor R : F in fam}; size-preserving, re-canonicalized.
Family family_delta(const Family& fam, Mask r);

/// Removes coordinate j from every member, deduplicates, reindexes
/// coordinates above j down by one.  Requires n >= 2.
Family restrict_drop(const Family& fam, int j);

/// Splits fam into (F_i, F_not_i): members containing i with i removed,
/// and members avoiding i.  Both over the reindexed (n-1)-ground set.
/// Requires n >= 2.
std::pair<Family, Family> link_views(const Family& fam, int i);

/// Inverse of link_views: rebuilds the width-(n+1) family whose i-link is
/// with_i and whose i-colink is without_i.
Family link_join(const Family& with_i, const Family& without_i, int i);

}  // namespace agree
