#include "mds/axioms.hpp"

namespace mds {

namespace {

Bits op_inverse_at(const AlgebraDual& dual, const std::vector<int>& op,
                   int point) {
  Bits out = 0;
  for (int e = 0; e < dual.algebra().size(); ++e) {
    if (has(dual.point_filter(point), op[e])) out |= bit(e);
  }
  return out;
}

Bits op_image(const std::vector<int>& op, Bits s) {
  Bits out = 0;
  for_each_member(s, [&](int e) { out |= bit(op[e]); });
  return out;
}

}  // namespace

TriView axiom_top_fixed(const AlgebraDual& dual, const std::vector<int>& op,
                        const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = op[a.top()] == a.top();
  v.via_r = true;
  v.via_g = true;
  for (int p = 0; p < dual.point_count(); ++p) {
    if (family_has(r.at[p], 0)) v.via_r = false;
    if (!family_has(g.at[p], dual.space().universe())) v.via_g = false;
  }
  return v;
}

TriView axiom_bottom_fixed(const AlgebraDual& dual, const std::vector<int>& op,
                           const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = op[a.bottom()] == a.bottom();
  v.via_r = true;
  v.via_g = true;
  for (int p = 0; p < dual.point_count(); ++p) {
    if (!family_has(r.at[p], dual.space().universe())) v.via_r = false;
    if (family_has(g.at[p], 0)) v.via_g = false;
  }
  return v;
}

TriView axiom_decreasing(const AlgebraDual& dual, const std::vector<int>& op,
                         const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = true;
  for (int e = 0; e < a.size(); ++e) {
    if (!a.leq(op[e], e)) v.algebraic = false;
  }
  v.via_r = true;
  v.via_g = true;
  for (int p = 0; p < dual.point_count(); ++p) {
    if (!family_has(r.at[p], dual.space().saturation(bit(p)))) v.via_r = false;
    for (Bits y : g.at[p]) {
      if (!has(y, p)) v.via_g = false;
    }
  }
  return v;
}

TriView axiom_increasing(const AlgebraDual& dual, const std::vector<int>& op,
                         const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = true;
  for (int e = 0; e < a.size(); ++e) {
    if (!a.leq(e, op[e])) v.algebraic = false;
  }
  v.via_r = true;
  v.via_g = true;
  for (int p = 0; p < dual.point_count(); ++p) {
    for (Bits z : r.at[p]) {
      if (!has(z, p)) v.via_r = false;
    }
    if (!family_has(g.at[p], dual.space().closure(bit(p)))) v.via_g = false;
  }
  return v;
}

TriView axiom_four_box(const AlgebraDual& dual, const std::vector<int>& op,
                       const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = true;
  for (int e = 0; e < a.size(); ++e) {
    if (!a.leq(op[e], op[op[e]])) v.algebraic = false;
  }
  v.via_r = multirel_within(r_squared(dual.space(), r), r);
  v.via_g = multirel_within(g, g_squared(dual.space(), g));
  return v;
}

TriView axiom_four_diamond(const AlgebraDual& dual, const std::vector<int>& op,
                           const Multirelation& r, const Multirelation& g) {
  const MeetSemilattice& a = dual.algebra();
  TriView v;
  v.algebraic = true;
  for (int e = 0; e < a.size(); ++e) {
    if (!a.leq(op[op[e]], op[e])) v.algebraic = false;
  }
  v.via_r = multirel_within(r, r_squared(dual.space(), r));
  v.via_g = multirel_within(g_squared(dual.space(), g), g);
  return v;
}

AxiomReport axiom_report(const AlgebraDual& dual, const std::vector<int>& op) {
  Multirelation r = relation_from_algebra_S(dual, op);
  Multirelation g = relation_from_algebra_C(dual, op);
  AxiomReport rep;
  rep.top_fixed = axiom_top_fixed(dual, op, r, g);
  rep.bottom_fixed = axiom_bottom_fixed(dual, op, r, g);
  rep.decreasing = axiom_decreasing(dual, op, r, g);
  rep.increasing = axiom_increasing(dual, op, r, g);
  rep.four_box = axiom_four_box(dual, op, r, g);
  rep.four_diamond = axiom_four_diamond(dual, op, r, g);
  return rep;
}

bool r_squared_ideal_bridge(const AlgebraDual& dual,
                            const std::vector<int>& op) {
  Multirelation r = relation_from_algebra_S(dual, op);
  Multirelation r2 = r_squared(dual.space(), r);
  const MeetSemilattice& a = dual.algebra();
  for (int p = 0; p < dual.point_count(); ++p) {
    Bits squared_outside = 0;
    for (int e = 0; e < a.size(); ++e) {
      if (!has(dual.point_filter(p), op[op[e]])) squared_outside |= bit(e);
    }
    for (Bits ideal : a.order_ideals(/*include_empty=*/false)) {
      bool lhs = family_has(r2.at[p], dual.alpha(ideal));
      bool rhs = is_subset(ideal, squared_outside);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool g_squared_filter_bridge(const AlgebraDual& dual,
                             const std::vector<int>& op) {
  Multirelation g = relation_from_algebra_C(dual, op);
  Multirelation g2 = g_squared(dual.space(), g);
  const MeetSemilattice& a = dual.algebra();
  for (int p = 0; p < dual.point_count(); ++p) {
    Bits squared_inverse = 0;
    for (int e = 0; e < a.size(); ++e) {
      if (has(dual.point_filter(p), op[op[e]])) squared_inverse |= bit(e);
    }
    for (Bits f : a.filters()) {
      bool lhs = family_has(g2.at[p], dual.filter_to_closed(f));
      bool rhs = is_subset(f, squared_inverse);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool image_ideal_identity(const AlgebraDual& dual,
                          const std::vector<int>& op) {
  Multirelation r = relation_from_algebra_S(dual, op);
  const MeetSemilattice& a = dual.algebra();
  Bits all = dual.space().universe();
  for (Bits ideal : a.order_ideals(/*include_empty=*/false)) {
    Bits boxed = m_r(dual.space(), r, all & ~dual.alpha(ideal));
    Bits lhs = dual.ideal_of_saturated(all & ~boxed);
    Bits rhs = a.order().down_closure(op_image(op, ideal));
    if (lhs != rhs) return false;
  }
  return true;
}

bool image_filter_identity(const AlgebraDual& dual,
                           const std::vector<int>& op) {
  Multirelation g = relation_from_algebra_C(dual, op);
  const MeetSemilattice& a = dual.algebra();
  for (Bits f : a.filters()) {
    Bits diamonded = m_g(dual.space(), g, dual.filter_to_closed(f));
    Bits lhs = dual.closed_to_filter(diamonded);
    Bits rhs = a.order().up_closure(op_image(op, f));
    if (lhs != rhs) return false;
  }
  return true;
}

CanonicityReport canonicity_report(const AlgebraDual& dual,
                                   const std::vector<int>& op) {
  const MeetSemilattice& a = dual.algebra();
  CanonicityReport rep;
  rep.box_applicable = true;
  rep.diamond_applicable = true;
  for (int e = 0; e < a.size(); ++e) {
    if (!a.leq(op[e], op[op[e]])) rep.box_applicable = false;
    if (!a.leq(op[op[e]], op[e])) rep.diamond_applicable = false;
  }
  Multirelation r = relation_from_algebra_S(dual, op);
  Multirelation g = relation_from_algebra_C(dual, op);
  if (rep.box_applicable) {
    rep.box_holds = true;
    for (Bits u : dual.space().closeds()) {
      if (!is_subset(m_g(dual.space(), g, u),
                     m_g(dual.space(), g, m_g(dual.space(), g, u)))) {
        rep.box_holds = false;
      }
    }
  }
  if (rep.diamond_applicable) {
    rep.diamond_holds = true;
    for (Bits u : dual.space().closeds()) {
      if (!is_subset(m_r(dual.space(), r, m_r(dual.space(), r, u)),
                     m_r(dual.space(), r, u))) {
        rep.diamond_holds = false;
      }
    }
  }
  return rep;
}

bool is_modal_operator(const MeetSemilattice& a, const std::vector<int>& op) {
  if (op[a.top()] != a.top()) return false;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (op[a.meet(x, y)] != a.meet(op[x], op[y])) return false;
    }
  }
  return true;
}

bool modal_preserves_filters(const MeetSemilattice& a,
                             const std::vector<int>& op) {
  for (Bits f : a.filters()) {
    Bits pre = 0;
    for (int e = 0; e < a.size(); ++e) {
      if (has(f, op[e])) pre |= bit(e);
    }
    if (!a.is_filter(pre)) return false;
  }
  return true;
}

std::vector<Bits> point_relation_via_pi(const AlgebraDual& dual,
                                        const std::vector<int>& op) {
  int n = dual.point_count();
  Bits all = dual.space().universe();
  std::vector<Bits> s(n, 0);
  for (int q = 0; q < n; ++q) {
    Bits co_principal = all & ~dual.space().saturation(bit(q));
    Bits boxed = m_pi(dual, op, co_principal);
    for (int p = 0; p < n; ++p) {
      if ((boxed & dual.space().saturation(bit(p))) == 0) s[p] |= bit(q);
    }
  }
  return s;
}

std::vector<Bits> point_relation_direct(const AlgebraDual& dual,
                                        const std::vector<int>& op) {
  int n = dual.point_count();
  Bits ground = dual.algebra().order().universe();
  std::vector<Bits> s(n, 0);
  for (int p = 0; p < n; ++p) {
    Bits inverse = op_inverse_at(dual, op, p);
    for (int q = 0; q < n; ++q) {
      if ((inverse & (ground & ~dual.point_filter(q))) == 0) s[p] |= bit(q);
    }
  }
  return s;
}

std::vector<Bits> point_relation_via_r(const AlgebraDual& dual,
                                       const std::vector<int>& op) {
  Multirelation r = relation_from_algebra_S(dual, op);
  return s_from_r(dual.space(), r);
}

}  // namespace mds
