#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "mds/axioms.hpp"
#include "mds/fixtures.hpp"

using namespace mds;

namespace {

struct Flags {
  bool top, bottom, dec, inc, box4, dia4;
};

void check_profile(const MeetSemilattice& alg, const std::vector<int>& op,
                   const Flags& want) {
  const AlgebraDual dual = AlgebraDual::build(alg);
  const AxiomReport rep = axiom_report(dual, op);
  CHECK(rep.all_consistent());
  CHECK(rep.top_fixed.algebraic == want.top);
  CHECK(rep.bottom_fixed.algebraic == want.bottom);
  CHECK(rep.decreasing.algebraic == want.dec);
  CHECK(rep.increasing.algebraic == want.inc);
  CHECK(rep.four_box.algebraic == want.box4);
  CHECK(rep.four_diamond.algebraic == want.dia4);
}

}  // namespace

TEST_CASE("axiom profiles of the fixture operators") {
  const MeetSemilattice chain = fixture_chain3();
  const MeetSemilattice dia = fixture_diamond();
  check_profile(dia, fixture_identity_op(dia),
                {true, true, true, true, true, true});
  check_profile(dia, fixture_const_top_op(dia),
                {true, false, false, true, true, true});
  check_profile(dia, fixture_const_bottom_op(dia),
                {false, true, true, false, true, true});
  check_profile(dia, fixture_diamond_step_op(),
                {true, true, false, true, true, true});
  check_profile(chain, fixture_chain3_up_op(),
                {true, false, false, true, true, false});
  check_profile(chain, fixture_chain3_down_op(),
                {false, true, true, false, false, true});
}

namespace {

struct Case {
  MeetSemilattice alg;
  std::vector<int> op;
};

std::vector<Case> fixture_cases() {
  const MeetSemilattice chain = fixture_chain3();
  const MeetSemilattice dia = fixture_diamond();
  return {
      {dia, fixture_identity_op(dia)},
      {dia, fixture_const_top_op(dia)},
      {dia, fixture_const_bottom_op(dia)},
      {dia, fixture_diamond_step_op()},
      {chain, fixture_chain3_up_op()},
      {chain, fixture_chain3_down_op()},
      {chain, fixture_identity_op(chain)},
  };
}

}  // namespace

TEST_CASE("squared relations bridge to squared operators") {
  for (const Case& c : fixture_cases()) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    CHECK(r_squared_ideal_bridge(dual, c.op));
    CHECK(g_squared_filter_bridge(dual, c.op));
    CHECK(image_ideal_identity(dual, c.op));
    CHECK(image_filter_identity(dual, c.op));
  }
}

TEST_CASE("iteration inequalities survive the extension") {
  for (const Case& c : fixture_cases()) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const CanonicityReport rep = canonicity_report(dual, c.op);
    if (rep.box_applicable) CHECK(rep.box_holds);
    if (rep.diamond_applicable) CHECK(rep.diamond_holds);
  }
  // Applicability gates follow the algebraic inequalities.
  const AlgebraDual chain = AlgebraDual::build(fixture_chain3());
  CHECK(canonicity_report(chain, fixture_chain3_up_op()).box_applicable);
  CHECK(!canonicity_report(chain, fixture_chain3_up_op()).diamond_applicable);
  CHECK(!canonicity_report(chain, fixture_chain3_down_op()).box_applicable);
  CHECK(canonicity_report(chain, fixture_chain3_down_op()).diamond_applicable);
}

TEST_CASE("modal recognition") {
  const MeetSemilattice chain = fixture_chain3();
  const MeetSemilattice dia = fixture_diamond();
  CHECK(is_modal_operator(dia, fixture_identity_op(dia)));
  CHECK(is_modal_operator(dia, fixture_const_top_op(dia)));
  CHECK(is_modal_operator(chain, fixture_chain3_up_op()));
  CHECK(!is_modal_operator(dia, fixture_const_bottom_op(dia)));
  CHECK(!is_modal_operator(dia, fixture_diamond_step_op()));
  CHECK(!is_modal_operator(chain, fixture_chain3_down_op()));
}

TEST_CASE("modal operators are the ones with normal dual relations") {
  for (const Case& c : fixture_cases()) {
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    CHECK(is_modal_operator(c.alg, c.op) ==
          is_normal_space(dual.space(), r));
    CHECK(is_modal_operator(c.alg, c.op) ==
          modal_preserves_filters(c.alg, c.op));
  }
}

TEST_CASE("point relations of modal operators agree three ways") {
  for (const Case& c : fixture_cases()) {
    if (!is_modal_operator(c.alg, c.op)) continue;
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const std::vector<Bits> direct = point_relation_direct(dual, c.op);
    CHECK(point_relation_via_pi(dual, c.op) == direct);
    CHECK(point_relation_via_r(dual, c.op) == direct);

    // The point relation recovers the operator and the neighborhoods.
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    CHECK(r_from_s(dual.space(), direct) == r);
    for (int e = 0; e < c.alg.size(); ++e)
      CHECK(m_s(dual.space(), direct, dual.beta(e)) == dual.beta(c.op[e]));
  }
}

TEST_CASE("neighborhood round trip for normal relations") {
  for (const Case& c : fixture_cases()) {
    if (!is_modal_operator(c.alg, c.op)) continue;
    const AlgebraDual dual = AlgebraDual::build(c.alg);
    const Multirelation r = relation_from_algebra_S(dual, c.op);
    const std::vector<Bits> s = s_from_r(dual.space(), r);
    CHECK(r_from_s(dual.space(), s) == r);
    for (Bits u : dual.space().closeds())
      CHECK(m_s(dual.space(), s, u) == m_r(dual.space(), r, u));
  }
}
