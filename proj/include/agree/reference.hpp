#pragma once

#include <optional>

#include "agree/core.hpp"

namespace agree::ref {

// Straightforward reference implementations of the tuple predicates.
// These enumerate tuples outright and evaluate agreement coordinate by
// coordinate, with none of the profile-frontier machinery of the
// production checks.  They are exponential in min(r, |F|) and exist so
// the fast path and the exhaustive oracle have an independent baseline.

/// Per-coordinate loop: a coordinate agrees when every set contains it or
/// no set contains it.
Mask agreement_mask(std::span<const Mask> sets, GroundSet ground);

std::optional<TupleWitness> find_agreeing_violation(const Family& fam, int r,
                                                    int t);
bool is_r_wise_t_agreeing(const Family& fam, int r, int t);

std::optional<TupleWitness> find_union_violation(const Family& fam, int r,
                                                 int t);
bool is_r_wise_t_union(const Family& fam, int r, int t);

int max_tuple_disagreement(const Family& fam, int r);

}  // namespace agree::ref
