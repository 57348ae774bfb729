#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "agree/search.hpp"

namespace agree {

namespace {

Mask permute_mask(Mask m, const std::vector<int>& image) {
  Mask out = 0;
  while (m != 0) {
    const int pos = std::countr_zero(m);
    out |= Mask{1} << image[pos];
    m &= m - 1;
  }
  return out;
}

}  // namespace

Family canonical_form(const Family& fam) {
  const int n = fam.n();
  if (n > 8) {
    throw std::invalid_argument(
        "group too large for brute-force canonicalization");
  }
  const Mask full = fam.ground().full();
  const auto& members = fam.members();

  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);

  std::vector<Mask> best = members;
  std::vector<Mask> permuted(members.size());
  std::vector<Mask> candidate(members.size());
  do {
    for (std::size_t i = 0; i < members.size(); ++i) {
      permuted[i] = permute_mask(members[i], image);
    }
    for (Mask flip = 0;; ++flip) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        candidate[i] = permuted[i] ^ flip;
      }
      std::sort(candidate.begin(), candidate.end());
      if (candidate < best) best = candidate;
      if (flip == full) break;
    }
  } while (std::next_permutation(image.begin(), image.end()));

  return Family(fam.ground(), std::move(best));
}

}  // namespace agree
