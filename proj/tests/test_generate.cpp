#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "mds/fixtures.hpp"
#include "mds/generate.hpp"
#include "mds/morphisms.hpp"
#include "mds/axioms.hpp"

using namespace mds;

TEST_CASE("random draws are deterministic and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    const int bound = 1 + (i % 17);
    const int x = a.below(bound);
    CHECK(x == b.below(bound));
    CHECK(x >= 0);
    CHECK(x < bound);
  }
  Rng c(7);
  for (int i = 0; i < 50; ++i) {
    CHECK(is_subset(c.subset_of(0b1011u), 0b1011u));
    CHECK(has(0b1010u, c.pick_member(0b1010u)));
  }
  CHECK_THROWS_AS(c.below(0), Error);
  CHECK_THROWS_AS(c.pick_member(0u), Error);
}

TEST_CASE("random posets satisfy the order laws by construction") {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Poset p = random_poset(rng, 1 + rng.below(7));
    CHECK(p.size() >= 1);  // construction already validated the laws
    CHECK((int)p.all_upsets().size() >= 2);
  }
}

TEST_CASE("catalog counts by size") {
  const std::vector<MeetSemilattice> cat = distributive_catalog(6);
  std::vector<int> by_size(7, 0);
  for (const MeetSemilattice& a : cat) {
    CHECK(a.is_distributive());
    ++by_size[a.size()];
  }
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[3] == 1);
  CHECK(by_size[4] == 2);
  CHECK(by_size[5] == 3);
  CHECK(by_size[6] == 5);
  CHECK(cat.size() == 13);

  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      CHECK(!isomorphic(cat[i], cat[j]));
}

TEST_CASE("catalog members carry their top and match the fixtures") {
  const std::vector<MeetSemilattice> cat = distributive_catalog(4);
  bool found_chain = false, found_diamond = false;
  for (const MeetSemilattice& a : cat) {
    if (isomorphic(a, fixture_chain3())) found_chain = true;
    if (isomorphic(a, fixture_diamond())) found_diamond = true;
  }
  CHECK(found_chain);
  CHECK(found_diamond);
}

TEST_CASE("canonical keys are relabeling invariants") {
  const MeetSemilattice dia = fixture_diamond();
  const std::vector<int> perm = {3, 1, 2, 0};  // swap bottom and top labels
  std::vector<int> inv(4);
  for (int i = 0; i < 4; ++i) inv[perm[i]] = i;
  std::vector<std::vector<int>> meet(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      meet[x][y] = perm[dia.meet(inv[x], inv[y])];
  const MeetSemilattice relabeled =
      MeetSemilattice::from_table(4, perm[dia.top()], meet);
  CHECK(canonical_order_key(relabeled) == canonical_order_key(dia));
  CHECK(isomorphic(relabeled, dia));
  CHECK(!isomorphic(dia, fixture_chain3()));
}

TEST_CASE("random distributive instances respect the size bound") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const MeetSemilattice a = random_distributive(rng, 8);
    CHECK(a.size() <= 8);
    CHECK(a.is_distributive());
  }
}

TEST_CASE("random operators are monotone") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const MeetSemilattice a = random_distributive(rng, 8);
    const std::vector<int> m = random_monotone_op(rng, a);
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        if (a.leq(x, y)) CHECK(a.leq(m[x], m[y]));
  }
}

TEST_CASE("random modal operators preserve top and binary meets") {
  Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const MeetSemilattice a = random_distributive(rng, 8);
    const AlgebraDual dual = AlgebraDual::build(a);
    const std::vector<int> m = random_modal_op(rng, dual);
    CHECK(is_modal_operator(a, m));
  }
}

TEST_CASE("random meet relations satisfy the meet-relation laws") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    const AlgebraDual from = AlgebraDual::build(random_distributive(rng, 6));
    const AlgebraDual to = AlgebraDual::build(random_distributive(rng, 6));
    const MeetRelation s =
        random_meet_relation(rng, from.space(), to.space());
    CHECK(is_meet_relation(from.space(), to.space(), s));
  }
}

TEST_CASE("random homomorphisms preserve meets and the top") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const AlgebraDual a = AlgebraDual::build(random_distributive(rng, 6));
    const AlgebraDual b = AlgebraDual::build(random_distributive(rng, 6));
    const std::vector<int> h = random_homomorphism(rng, a, b);
    CHECK(is_homomorphism(a.algebra(), b.algebra(), h));
  }
}

TEST_CASE("relational composition is associative and closed") {
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const AlgebraDual x1 = AlgebraDual::build(random_distributive(rng, 5));
    const AlgebraDual x2 = AlgebraDual::build(random_distributive(rng, 5));
    const AlgebraDual x3 = AlgebraDual::build(random_distributive(rng, 5));
    const AlgebraDual x4 = AlgebraDual::build(random_distributive(rng, 5));
    const MeetRelation s1 = random_meet_relation(rng, x1.space(), x2.space());
    const MeetRelation s2 = random_meet_relation(rng, x2.space(), x3.space());
    const MeetRelation s3 = random_meet_relation(rng, x3.space(), x4.space());
    CHECK(is_meet_relation(x1.space(), x3.space(), compose(s2, s1)));
    CHECK(compose(s3, compose(s2, s1)) == compose(compose(s3, s2), s1));
    CHECK(compose(s1, identity_relation(x1.space())) == s1);
    CHECK(compose(identity_relation(x2.space()), s1) == s1);
  }
}
