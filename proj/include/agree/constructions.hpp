#pragma once

#include "agree/core.hpp"

namespace agree {

/// The Brace-Daykin family: all subsets meeting {1,...,r+t} in at most one
/// element.  Size (r+t+1) * 2^(n-r-t); non-trivial, down-closed, r-wise
/// t-union and hence r-wise t-agreeing.
Family brace_daykin(int n, int r, int t);

/// Generalized Brace-Daykin family on profile set A, then XOR-ed by a
/// fixed twist R inside A: {F xor R : F, |F n A| <= 1}.  With |A| = r+t
/// these are the extremal non-trivial r-wise t-agreeing families.
Family twisted(int n, Mask profile, Mask twist);

/// All subsets of even cardinality; size 2^(n-1).
Family parity_family(int n);

/// All subsets containing every coordinate of T; size 2^(n-|T|).
/// r-wise |T|-agreeing for every r, and always trivial.
Family fixed_coords(int n, Mask fixed);

}  // namespace agree
