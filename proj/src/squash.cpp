#include "agree/squash.hpp"

#include <algorithm>
#include <stdexcept>

#include "agree/predicates.hpp"

namespace agree {

Family squash_at(const Family& fam, int i) {
  if (i < 1 || i > fam.n()) throw std::invalid_argument("coordinate out of range");
  const Mask bit = coord_bit(i);

  // Link and colink as raw masks on the same ground set, bit i cleared.
  std::vector<Mask> link, colink;
  for (Mask m : fam.members()) {
    if (m & bit) {
      link.push_back(m & ~bit);
    } else {
      colink.push_back(m);
    }
  }
  // Members are sorted and clearing a common bit preserves the order.
  std::vector<Mask> both, either;
  std::set_intersection(link.begin(), link.end(), colink.begin(), colink.end(),
                        std::back_inserter(both));
  std::set_union(link.begin(), link.end(), colink.begin(), colink.end(),
                 std::back_inserter(either));

  std::vector<Mask> members;
  members.reserve(both.size() + either.size());
  for (Mask m : both) members.push_back(m | bit);
  members.insert(members.end(), either.begin(), either.end());

  Family out(fam.ground(), std::move(members));
  if (out.size() != fam.size()) {
    throw std::logic_error("squash_at changed the family size");
  }
  return out;
}

std::pair<Family, SquashTrace> squash_all(const Family& fam,
                                          bool keep_families) {
  SquashTrace trace;
  trace.initial_nontrivial = is_nontrivial(fam);
  trace.initial_size = fam.size();
  trace.initial_digest = family_digest(fam);

  Family cur = fam;
  if (!trace.initial_nontrivial) {
    trace.outcome = SquashOutcome::trivial_at_entry;
    return {std::move(cur), std::move(trace)};
  }

  for (int j = 1; j <= fam.n(); ++j) {
    Family next = squash_at(cur, j);
    const bool nontrivial = is_nontrivial(next);
    SquashStep step{j, family_digest(next), nontrivial, next.size(),
                    std::nullopt};
    if (keep_families) step.family = next;
    trace.steps.push_back(std::move(step));
    cur = std::move(next);
    if (!nontrivial) {
      trace.outcome = SquashOutcome::lost_nontriviality;
      trace.loss_coord = j;
      return {std::move(cur), std::move(trace)};
    }
  }

  if (!is_down_closed(cur)) {
    throw std::logic_error("squashed family not down-closed");
  }
  trace.outcome = SquashOutcome::stayed_nontrivial_down_closed;
  return {std::move(cur), std::move(trace)};
}

Family triviality_loss_projection(const Family& fam, int j) {
  if (j < 1 || j > fam.n()) throw std::invalid_argument("coordinate out of range");
  if (!is_nontrivial(fam) || is_nontrivial(squash_at(fam, j))) {
    throw std::invalid_argument("not a triviality-loss step");
  }
  Family out = restrict_drop(fam, j);
  if (out.size() != fam.size()) {
    throw std::logic_error("triviality-loss projection collided members");
  }
  return out;
}

}  // namespace agree
