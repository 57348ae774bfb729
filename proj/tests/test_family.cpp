#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agree/core.hpp"
#include "agree/predicates.hpp"
#include "agree/reference.hpp"
#include "support/gen.hpp"

using namespace agree;

namespace {

Mask m(std::initializer_list<int> coords) {
  Mask out = 0;
  for (int c : coords) out |= Mask{1} << (c - 1);
  return out;
}

Family fam(int n, std::initializer_list<Mask> members) {
  return Family(GroundSet(n), std::vector<Mask>(members));
}

}  // namespace

TEST_CASE("ground set validation") {
  CHECK_THROWS_AS(GroundSet(0), std::invalid_argument);
  CHECK_THROWS_AS(GroundSet(64), std::invalid_argument);
  CHECK(GroundSet(1).full() == 1);
  CHECK(GroundSet(63).full() == (Mask{1} << 63) - 1);
  CHECK(GroundSet(4).contains(0xf));
  CHECK_FALSE(GroundSet(4).contains(0x10));
}

TEST_CASE("coordinate helpers round trip") {
  CHECK(coord_bit(1) == 1);
  CHECK(coord_bit(5) == 16);
  CHECK_THROWS_AS(coord_bit(0), std::invalid_argument);
  CHECK(mask_coords(m({1, 3, 7})) == std::vector<int>{1, 3, 7});
  const std::vector<int> coords{2, 5};
  CHECK(mask_from_coords(coords, GroundSet(5)) == m({2, 5}));
  const std::vector<int> bad{6};
  CHECK_THROWS_AS(mask_from_coords(bad, GroundSet(5)), std::invalid_argument);
}

TEST_CASE("family canonicalizes members") {
  Family f(GroundSet(3), {5, 1, 5, 0});
  CHECK(f.members() == std::vector<Mask>{0, 1, 5});
  CHECK(f.size() == 3);
  CHECK(f.contains(5));
  CHECK_FALSE(f.contains(2));
  CHECK_THROWS_AS(Family(GroundSet(2), {4}), std::invalid_argument);
}

TEST_CASE("intersection and union masks, empty family identities") {
  const Family e = Family::empty(GroundSet(3));
  CHECK(e.intersection_mask() == GroundSet(3).full());
  CHECK(e.union_mask() == 0);
  const Family f = fam(3, {m({1, 2}), m({2, 3})});
  CHECK(f.intersection_mask() == m({2}));
  CHECK(f.union_mask() == m({1, 2, 3}));
}

TEST_CASE("agreement mask on the worked tuples") {
  const GroundSet g3(3), g4(4);
  // a single set agrees with itself everywhere
  const std::vector<Mask> single{m({1, 3})};
  CHECK(agreement_mask(single, g3) == g3.full());
  // hand loop: {1,2} and {2,3} in [4] agree exactly on {2,4}
  const std::vector<Mask> pair{m({1, 2}), m({2, 3})};
  CHECK(agreement_mask(pair, g4) == m({2, 4}));
  // complementary pair disagrees everywhere
  const std::vector<Mask> comp{m({1, 3}), g4.full() & ~m({1, 3})};
  CHECK(agreement_mask(comp, g4) == 0);
  const std::vector<Mask> none{};
  CHECK_THROWS_WITH_AS(agreement_mask(none, g3), "empty tuple",
                       std::invalid_argument);
}

TEST_CASE("disagreement set on the worked tuples") {
  const GroundSet g3(3), g2(2);
  const std::vector<Mask> one{m({1})};
  CHECK(disagreement_set(one, g3) == 0);
  const std::vector<Mask> two{m({1}), m({2})};
  CHECK(disagreement_set(two, g3) == m({1, 2}));
  const std::vector<Mask> twice{m({2}), m({2})};
  CHECK(disagreement_set(twice, g2) == 0);
}

TEST_CASE("agreement agrees with the per-coordinate reference") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    std::mt19937_64 rng(gen::mix_seed(0xfa111e5, i));
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const int len = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Mask> tuple;
    for (int k = 0; k < len; ++k) tuple.push_back(gen::random_mask(rng, n));
    const GroundSet g(n);
    CHECK(agreement_mask(tuple, g) == ref::agreement_mask(tuple, g));
    CHECK(disagreement_set(tuple, g) == (g.full() & ~agreement_mask(tuple, g)));
  }
}

TEST_CASE("adding a set can only shrink the agreement mask") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    std::mt19937_64 rng(gen::mix_seed(0xa9707, i));
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const int len = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Mask> tuple;
    for (int k = 0; k < len; ++k) tuple.push_back(gen::random_mask(rng, n));
    const GroundSet g(n);
    const Mask before = agreement_mask(tuple, g);
    tuple.push_back(gen::random_mask(rng, n));
    const Mask after = agreement_mask(tuple, g);
    CHECK((after & ~before) == 0);
  }
}

TEST_CASE("tuple witness invariants") {
  const GroundSet g(4);
  const std::vector<Mask> tuple{m({1, 2}), m({2, 3}), m({2})};
  const TupleWitness w = make_witness(tuple, g);
  CHECK(w.and_mask == m({2}));
  CHECK(w.or_mask == m({1, 2, 3}));
  CHECK(w.agreement_count == 2);
  CHECK(w.agreement_count ==
        4 - std::popcount(disagreement_set(tuple, g)));
}

TEST_CASE("family delta worked example and properties") {
  const Family f = fam(3, {0, m({1})});
  const Family d = family_delta(f, m({1, 2}));
  CHECK(d == fam(3, {m({1, 2}), m({2})}));
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(gen::mix_seed(0xde17a, i));
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Family f2 = gen::random_family(rng, n, 14);
    const Mask r = gen::random_mask(rng, n);
    CHECK(family_delta(f2, 0) == f2);
    CHECK(family_delta(family_delta(f2, r), r) == f2);
    CHECK(family_delta(f2, r).size() == f2.size());
  }
}

TEST_CASE("restrict_drop worked examples") {
  const Family a = restrict_drop(fam(2, {m({1}), m({1, 2})}), 1);
  CHECK(a == fam(1, {0, m({1})}));
  CHECK_THROWS_WITH_AS(restrict_drop(fam(1, {m({1})}), 1),
                       "ground set would be empty", std::invalid_argument);
}

TEST_CASE("restrict_drop deduplicates") {
  const Family f = restrict_drop(fam(2, {m({1}), 0}), 1);
  CHECK(f == fam(1, {0}));
  CHECK(f.size() == 1);
}

TEST_CASE("link views on the worked examples") {
  // full square: both views are the powerset of the other coordinate
  const Family square = fam(2, {0, m({1}), m({2}), m({1, 2})});
  const auto [f1, f1bar] = link_views(square, 1);
  CHECK(f1 == fam(1, {0, m({1})}));
  CHECK(f1bar == fam(1, {0, m({1})}));

  const auto [g1, g1bar] = link_views(fam(2, {m({1})}), 1);
  CHECK(g1 == fam(1, {0}));
  CHECK(g1bar.size() == 0);

  // even-parity family on [3], link at 1: {{2},{3}} and {{},{2,3}}
  const Family even3 = fam(3, {0, m({1, 2}), m({1, 3}), m({2, 3})});
  const auto [h1, h1bar] = link_views(even3, 1);
  CHECK(h1 == fam(2, {m({1}), m({2})}));
  CHECK(h1bar == fam(2, {0, m({1, 2})}));
}

TEST_CASE("link views partition and reassemble") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::mt19937_64 rng(gen::mix_seed(0x11ae, i));
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const Family f = gen::random_family(rng, n, 20);
    const int coord = std::uniform_int_distribution<int>(1, n)(rng);
    const auto [with_c, without_c] = link_views(f, coord);
    CHECK(with_c.size() + without_c.size() == f.size());
    CHECK(link_join(with_c, without_c, coord) == f);
  }
}

TEST_CASE("digest is order-insensitive and content-sensitive") {
  const Family a(GroundSet(3), {1, 5, 0});
  const Family b(GroundSet(3), {5, 0, 1});
  CHECK(family_digest(a) == family_digest(b));
  const Family c(GroundSet(3), {5, 0});
  CHECK(family_digest(a) != family_digest(c));
  const Family d(GroundSet(4), {1, 5, 0});
  CHECK(family_digest(a) != family_digest(d));
}
