#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "mds/canonical_extension.hpp"
#include "mds/fixtures.hpp"
#include "mds/relations.hpp"

using namespace mds;

TEST_CASE("closed and open completion elements of the three-chain") {
  const AlgebraDual dual = AlgebraDual::build(fixture_chain3());
  CHECK(closed_completion_elements(dual) == Family{0b00u, 0b10u, 0b11u});
  CHECK(open_completion_elements(dual) == Family{0b00u, 0b10u, 0b11u});
  // Nonempty closed elements are exactly the closed sets of the space.
  Family k = closed_completion_elements(dual);
  k.erase(k.begin());  // drop the empty set contributed by the improper filter
  CHECK(k == dual.space().closeds_nonempty());
}

TEST_CASE("the chain and diamond completions add no new elements") {
  for (const MeetSemilattice& a : {fixture_chain3(), fixture_diamond()}) {
    const AlgebraDual dual = AlgebraDual::build(a);
    const Family all = dual.space().closeds();  // upsets = completion carrier
    CHECK((int)all.size() == a.size());
    CHECK(closed_completion_elements(dual) == all);
    CHECK(open_completion_elements(dual) == all);
  }
}

TEST_CASE("density and compactness of the completion") {
  for (const MeetSemilattice& a :
       {fixture_chain3(), fixture_diamond(),
        MeetSemilattice::from_table(1, 0, {{0}})}) {
    const AlgebraDual dual = AlgebraDual::build(a);
    CHECK(is_dense_completion(dual));
    CHECK(is_compact_completion(dual));
  }
}

TEST_CASE("completely join and meet prime members of the chain completion") {
  const AlgebraDual dual = AlgebraDual::build(fixture_chain3());
  const Family lattice = dual.space().closeds();
  CHECK(completely_join_primes(lattice) == Family{0b10u, 0b11u});
  CHECK(completely_meet_primes(lattice) == Family{0b00u, 0b10u});
  // Join primes are the principal upsets of points, meet primes the
  // complements of principal downsets.
  Family ups, codowns;
  for (int p = 0; p < dual.point_count(); ++p) {
    ups.push_back(dual.space().order().up_of(p));
    codowns.push_back(dual.space().universe() &
                      ~dual.space().order().down_of(p));
  }
  CHECK(completely_join_primes(lattice) == family_from(ups));
  CHECK(completely_meet_primes(lattice) == family_from(codowns));
}

TEST_CASE("completely join and meet primes of the diamond completion") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const Family lattice = dual.space().closeds();
  CHECK(completely_join_primes(lattice) == Family{0b01u, 0b10u});
  CHECK(completely_meet_primes(lattice) == Family{0b01u, 0b10u});
}

TEST_CASE("sigma extension of the diamond step operator") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const std::vector<int> op = fixture_diamond_step_op();
  CHECK(m_sigma(dual, op, dual.beta(1)) == 0b11u);  // beta(top)
  CHECK(m_sigma(dual, op, dual.beta(2)) == 0b10u);  // beta(b)
  CHECK(m_sigma(dual, op, 0u) == 0u);
  for (int e = 0; e < 4; ++e)
    CHECK(m_sigma(dual, op, dual.beta(e)) == dual.beta(op[e]));
}

TEST_CASE("sigma and pi extensions coincide on every upset here") {
  struct Case {
    MeetSemilattice alg;
    std::vector<int> op;
  };
  const std::vector<Case> cases = {
      {fixture_diamond(), fixture_diamond_step_op()},
      {fixture_chain3(), fixture_chain3_up_op()},
      {fixture_chain3(), fixture_chain3_down_op()},
      {fixture_diamond(), fixture_identity_op(fixture_diamond())},
      {fixture_diamond(), fixture_const_top_op(fixture_diamond())},
      {fixture_diamond(), fixture_const_bottom_op(fixture_diamond())},
  };
  for (const Case& c : cases) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    for (Bits u : dual.space().closeds()) {
      CHECK(m_sigma(dual, c.op, u) == m_pi(dual, c.op, u));
      CHECK(is_subset(m_sigma(dual, c.op, u), m_pi(dual, c.op, u)));
    }
    for (int e = 0; e < c.alg.size(); ++e) {
      CHECK(m_sigma(dual, c.op, dual.beta(e)) == dual.beta(c.op[e]));
      CHECK(m_pi(dual, c.op, dual.beta(e)) == dual.beta(c.op[e]));
    }
  }
}

TEST_CASE("extensions compute through the dual relations") {
  struct Case {
    MeetSemilattice alg;
    std::vector<int> op;
  };
  const std::vector<Case> cases = {
      {fixture_diamond(), fixture_diamond_step_op()},
      {fixture_chain3(), fixture_chain3_up_op()},
      {fixture_chain3(), fixture_chain3_down_op()},
      {fixture_diamond(), fixture_const_top_op(fixture_diamond())},
      {fixture_diamond(), fixture_const_bottom_op(fixture_diamond())},
  };
  for (const Case& c : cases) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    const Multirelation g = relation_from_algebra_C(dual, c.op);
    for (Bits u : dual.space().closeds()) {
      CHECK(m_r(dual.space(), r, u) == m_pi(dual, c.op, u));
      CHECK(m_g(dual.space(), g, u) == m_sigma(dual, c.op, u));
    }
  }
}

TEST_CASE("prime scans reject oversized lattices") {
  Family big;
  for (Bits s = 0; s < (1u << 21); s += (1u << 15)) big.push_back(s);
  CHECK_THROWS_AS(completely_join_primes(big), Error);
}
