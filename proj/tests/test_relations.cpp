#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "mds/fixtures.hpp"
#include "mds/relations.hpp"

using namespace mds;

namespace {

std::vector<Family> subfamilies_of(const Family& f) {
  std::vector<Family> out;
  for_each_subset(full_set((int)f.size()), [&](Bits pick) {
    Family sub;
    for_each_member(pick, [&](int i) { sub.push_back(f[i]); });
    out.push_back(sub);
  });
  return out;
}

}  // namespace

TEST_CASE("dual relations of the diamond step operator") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const std::vector<int> op = fixture_diamond_step_op();
  const Multirelation r = relation_from_algebra_S(dual, op);
  const Multirelation g = relation_from_algebra_C(dual, op);

  REQUIRE(r.size() == 2);
  CHECK(r.at[0] == Family{0b01u, 0b11u});  // point Pa
  CHECK(r.at[1] == Family{0b11u});         // point Pb
  CHECK(g.at[0] == Family{0b01u, 0b11u});
  CHECK(g.at[1] == Family{0b01u, 0b10u, 0b11u});

  CHECK(components_within(r, dual.space().opens()));
  CHECK(components_within(g, dual.space().closeds()));
  CHECK(m_r(dual.space(), r, dual.beta(1)) == 0b11u);
}

TEST_CASE("each dual relation determines the other through the polarity") {
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
      {fixture_chain3(), fixture_identity_op(fixture_chain3())},
  };
  for (const Case& c : cases) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    const Multirelation g = relation_from_algebra_C(dual, c.op);
    CHECK(g_from_r(dual.space(), r) == g);
    CHECK(r_from_g(dual.space(), g) == r);
    for (int p = 0; p < dual.point_count(); ++p) {
      CHECK(psi(dual.space(), g.at[p]) == r.at[p]);
      CHECK(phi(dual.space(), r.at[p]) == g.at[p]);
    }
    CHECK(s_frame_condition(dual.space(), r));
    CHECK(c_frame_condition(dual.space(), g));
    CHECK(s_monotonic_report(dual.space(), r).ok());
    CHECK(c_monotonic_report(dual.space(), g).ok());
  }
}

TEST_CASE("constant-top operator has empty neighborhoods everywhere") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const Multirelation r =
      relation_from_algebra_S(dual, fixture_const_top_op(fixture_diamond()));
  for (int p = 0; p < dual.point_count(); ++p) CHECK(r.at[p] == Family{});
}

TEST_CASE("polarity is a Galois connection, exhaustively") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const DsSpace& x = dual.space();
  for (const Family& s : subfamilies_of(x.opens()))
    for (const Family& c : subfamilies_of(x.closeds())) {
      CHECK(family_subset(c, phi(x, s)) == family_subset(s, psi(x, c)));
      CHECK(family_subset(s, psi(x, phi(x, s))));
      CHECK(family_subset(c, phi(x, psi(x, c))));
    }
  CHECK(phi(x, Family{}) == x.closeds());
  CHECK(psi(x, Family{}) == x.opens());
}

TEST_CASE("squared relation of the diamond step operator is itself") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const std::vector<int> op = fixture_diamond_step_op();
  const Multirelation r = relation_from_algebra_S(dual, op);
  CHECK(r_squared(dual.space(), r) == r);
  CHECK(multirel_within(r_squared(dual.space(), r), r));
  CHECK(multirel_within(r, r_squared(dual.space(), r)));
}

TEST_CASE("equivalent characterizations hold for derived relations") {
  struct Case {
    MeetSemilattice alg;
    std::vector<int> op;
  };
  const std::vector<Case> cases = {
      {fixture_diamond(), fixture_diamond_step_op()},
      {fixture_chain3(), fixture_chain3_up_op()},
      {fixture_chain3(), fixture_chain3_down_op()},
  };
  for (const Case& c : cases) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    const EquivalentConditions eq = equivalent_conditions(dual.space(), r);
    CHECK(eq.precondition);
    CHECK(eq.meet_of_constraints);
    CHECK(eq.complement_formula);
    CHECK(eq.pullback_evaluated);
    CHECK(eq.reflects_dual_relation);
    CHECK(relation_components_upward(dual.space(), r));
  }
}

TEST_CASE("dropping a redundant pair breaks every characterization at once") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  Multirelation r =
      relation_from_algebra_S(dual, fixture_diamond_step_op());
  // Remove the superset neighborhood of the first point; the operator is
  // unchanged, so the precondition survives while tightness fails.
  REQUIRE(r.at[0] == Family{0b01u, 0b11u});
  const Multirelation orig = r;
  r.at[0] = Family{0b01u};
  for (Bits u : dual.space().closeds())
    CHECK(m_r(dual.space(), r, u) == m_r(dual.space(), orig, u));
  const EquivalentConditions eq = equivalent_conditions(dual.space(), r);
  CHECK(eq.precondition);
  CHECK(eq.pullback_evaluated);
  CHECK(!eq.meet_of_constraints);
  CHECK(!eq.complement_formula);
  CHECK(!eq.reflects_dual_relation);
  CHECK(!relation_components_upward(dual.space(), r));
}

TEST_CASE("normality matches modality of the source operator") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const Multirelation step =
      relation_from_algebra_S(dual, fixture_diamond_step_op());
  CHECK(!is_normal_space(dual.space(), step));  // step drops binary meets
  const Multirelation ident = relation_from_algebra_S(
      dual, fixture_identity_op(fixture_diamond()));
  CHECK(is_normal_space(dual.space(), ident));
}

TEST_CASE("point relations round-trip through neighborhood relations") {
  const AlgebraDual dual = AlgebraDual::build(fixture_diamond());
  const Multirelation r = relation_from_algebra_S(
      dual, fixture_identity_op(fixture_diamond()));
  const std::vector<Bits> s = s_from_r(dual.space(), r);
  CHECK(r_from_s(dual.space(), s) == r);
  for (Bits u : dual.space().closeds())
    CHECK(m_s(dual.space(), s, u) == m_r(dual.space(), r, u));
}
