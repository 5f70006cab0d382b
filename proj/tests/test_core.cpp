#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "doctest.h"
#include "mds/bits.hpp"
#include "mds/poset.hpp"
#include "oracles.hpp"

using namespace mds;

TEST_CASE("mask primitives") {
  CHECK(bit(0) == 1u);
  CHECK(bit(3) == 8u);
  CHECK(full_set(0) == 0u);
  CHECK(full_set(4) == 15u);
  CHECK(has(0b1010u, 1));
  CHECK(!has(0b1010u, 0));
  CHECK(is_subset(0b0010u, 0b1010u));
  CHECK(!is_subset(0b0110u, 0b1010u));
  CHECK(count(0b1011u) == 3);
  CHECK(lowest(0b1100u) == 2);
}

TEST_CASE("member and subset iteration") {
  std::vector<int> members;
  for_each_member(0b10101u, [&](int i) { members.push_back(i); });
  CHECK(members == std::vector<int>{0, 2, 4});

  std::set<Bits> subs;
  for_each_subset(0b1010u, [&](Bits s) { subs.insert(s); });
  CHECK(subs == std::set<Bits>{0b0000u, 0b0010u, 0b1000u, 0b1010u});

  int zero_calls = 0;
  for_each_subset(0u, [&](Bits s) {
    CHECK(s == 0u);
    ++zero_calls;
  });
  CHECK(zero_calls == 1);
}

TEST_CASE("family helpers") {
  Family f = family_from({5u, 1u, 5u, 3u});
  CHECK(f == Family{1u, 3u, 5u});
  CHECK(family_has(f, 3u));
  CHECK(!family_has(f, 2u));
  CHECK(family_index(f, 5u) == 2);
  CHECK(family_index(f, 4u) == -1);
  CHECK(family_intersect(f, Family{3u, 4u, 5u}) == Family{3u, 5u});
  CHECK(family_union(Family{1u}, Family{2u}) == Family{1u, 2u});
  CHECK(family_subset(Family{1u, 5u}, f));
  CHECK(!family_subset(Family{1u, 2u}, f));
}

namespace {

Poset diamond_order() {
  // 0 < 1,2 < 3.
  return Poset::from_less_equal(4, [](int a, int b) {
    if (a == b) return true;
    if (a == 0) return true;
    return b == 3;
  });
}

}  // namespace

TEST_CASE("poset construction validates order laws") {
  CHECK_THROWS_AS(Poset::from_less_equal(2, [](int, int) { return false; }),
                  Error);
  CHECK_THROWS_AS(Poset::from_less_equal(2, [](int, int) { return true; }),
                  Error);
  // 0 <= 1 <= 2 without 0 <= 2.
  CHECK_THROWS_AS(Poset::from_less_equal(
                      3,
                      [](int a, int b) {
                        return a == b || (a == 0 && b == 1) ||
                               (a == 1 && b == 2);
                      }),
                  Error);
}

TEST_CASE("poset neighborhoods and closures") {
  const Poset p = diamond_order();
  CHECK(p.up_of(0) == 0b1111u);
  CHECK(p.up_of(1) == 0b1010u);
  CHECK(p.down_of(3) == 0b1111u);
  CHECK(p.down_of(2) == 0b0101u);
  CHECK(p.up_closure(0b0010u) == 0b1010u);
  CHECK(p.down_closure(0b1000u) == 0b1111u);
  CHECK(p.is_upset(0b1100u));
  CHECK(!p.is_upset(0b0001u));
  CHECK(p.is_downset(0b0101u));
  CHECK(p.maximal_members(0b0111u) == 0b0110u);
  CHECK(p.minimal_members(0b1110u) == 0b0110u);
}

TEST_CASE("directedness needs bounds inside the set, empty set passes") {
  const Poset p = diamond_order();
  CHECK(p.is_directed(0u));
  CHECK(p.is_dually_directed(0u));
  // {1, 2} has upper bound 3 and lower bound 0, but neither is a member.
  CHECK(!p.is_directed(0b0110u));
  CHECK(!p.is_dually_directed(0b0110u));
  CHECK(p.is_directed(0b1110u));
  CHECK(p.is_dually_directed(0b0111u));
  CHECK(p.is_directed(0b0100u));
}

TEST_CASE("upsets match the naive enumeration") {
  const Poset p = diamond_order();
  oracle::SetFamily expect = oracle::upsets(p);
  oracle::SetFamily got;
  for (Bits u : p.all_upsets()) got.insert(oracle::set_of(u));
  CHECK(got == expect);
  CHECK(p.all_upsets().size() == 6);
  // Downsets are complements of upsets.
  for (Bits u : p.all_upsets())
    CHECK(family_has(p.all_downsets(), p.universe() & ~u));
}

TEST_CASE("covers and linear extension") {
  const Poset p = diamond_order();
  const std::vector<std::pair<int, int>> cov = p.covers();
  CHECK(cov == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const std::vector<int> ext = p.linear_extension();
  CHECK(ext.size() == 4);
  std::vector<int> pos(4);
  for (int i = 0; i < 4; ++i) pos[ext[i]] = i;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (p.leq(a, b)) CHECK(pos[a] <= pos[b]);
}
