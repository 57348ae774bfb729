#pragma once

#include <optional>
#include <utility>

#include "agree/core.hpp"

namespace agree {

/// Squash along coordinate i: the unique family whose i-link is
/// F(i) n F(not i) and whose i-colink is F(i) u F(not i).  Gravity toward
/// the x_i = 0 face of the hypercube.  Size-preserving and idempotent.
Family squash_at(const Family& fam, int i);

struct SquashStep {
  int coord = 0;
  std::uint64_t digest = 0;
  bool nontrivial = false;
  std::size_t size = 0;
  std::optional<Family> family;  // populated in keep-families mode
};

enum class SquashOutcome {
  stayed_nontrivial_down_closed,
  lost_nontriviality,
  trivial_at_entry,
};

/// Record of a sequential squashing run over coordinates 1..n.  The
/// nontrivial flags form a true prefix: the run stops right after the
/// first step whose result is trivial.
struct SquashTrace {
  bool initial_nontrivial = false;
  std::size_t initial_size = 0;
  std::uint64_t initial_digest = 0;
  std::vector<SquashStep> steps;
  SquashOutcome outcome = SquashOutcome::trivial_at_entry;
  int loss_coord = 0;  // meaningful for lost_nontriviality
};

/// Applies squash_at for i = 1..n in order, recording one step per
/// coordinate.  Halts at the first step that destroys non-triviality.
/// A family that is trivial already at entry is returned unchanged with
/// outcome trivial_at_entry.  When the full pass completes, the result is
/// checked to be down-closed; a failure there would contradict the
/// stability of per-coordinate down-closure and throws logic_error.
std::pair<Family, SquashTrace> squash_all(const Family& fam,
                                          bool keep_families = false);

/// For a non-trivial family whose squash at j is trivial, the squashed
/// family coincides with the coordinate restriction, so this returns
/// restrict_drop(fam, j) and checks that no members collided.
Family triviality_loss_projection(const Family& fam, int j);

}  // namespace agree
