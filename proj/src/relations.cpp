#include "mds/relations.hpp"

namespace mds {

bool components_within(const Multirelation& rel, const Family& allowed) {
  for (const Family& fam : rel.at) {
    if (!family_subset(fam, allowed)) return false;
  }
  return true;
}

Bits m_r(const DsSpace& space, const Multirelation& r, Bits upset) {
  Bits out = 0;
  for (int x = 0; x < space.size(); ++x) {
    bool all_meet = true;
    for (Bits z : r.at[x]) {
      if ((z & upset) == 0) all_meet = false;
    }
    if (all_meet) out |= bit(x);
  }
  return out;
}

Bits m_g(const DsSpace& space, const Multirelation& g, Bits upset) {
  Bits out = 0;
  for (int x = 0; x < space.size(); ++x) {
    for (Bits y : g.at[x]) {
      if (is_subset(y, upset)) {
        out |= bit(x);
        break;
      }
    }
  }
  return out;
}

Multirelation relation_from_algebra_S(const AlgebraDual& dual,
                                      const std::vector<int>& op) {
  const MeetSemilattice& a = dual.algebra();
  Multirelation r;
  r.at.resize(dual.point_count());
  for (int p = 0; p < dual.point_count(); ++p) {
    Bits inverse = 0;
    for (int e = 0; e < a.size(); ++e) {
      if (has(dual.point_filter(p), op[e])) inverse |= bit(e);
    }
    for (Bits z : dual.space().opens()) {
      if ((inverse & dual.ideal_of_saturated(z)) == 0) r.at[p].push_back(z);
    }
  }
  return r;
}

Multirelation relation_from_algebra_C(const AlgebraDual& dual,
                                      const std::vector<int>& op) {
  const MeetSemilattice& a = dual.algebra();
  Multirelation g;
  g.at.resize(dual.point_count());
  for (int p = 0; p < dual.point_count(); ++p) {
    Bits inverse = 0;
    for (int e = 0; e < a.size(); ++e) {
      if (has(dual.point_filter(p), op[e])) inverse |= bit(e);
    }
    for (Bits y : dual.space().closeds()) {
      if (is_subset(dual.closed_to_filter(y), inverse)) g.at[p].push_back(y);
    }
  }
  return g;
}

Family phi(const DsSpace& space, const Family& open_family) {
  Family out;
  for (Bits y : space.closeds()) {
    bool meets_all = true;
    for (Bits z : open_family) {
      if ((y & z) == 0) meets_all = false;
    }
    if (meets_all) out.push_back(y);
  }
  return out;
}

Family psi(const DsSpace& space, const Family& closed_family) {
  Family out;
  for (Bits z : space.opens()) {
    bool meets_all = true;
    for (Bits y : closed_family) {
      if ((y & z) == 0) meets_all = false;
    }
    if (meets_all) out.push_back(z);
  }
  return out;
}

Multirelation g_from_r(const DsSpace& space, const Multirelation& r) {
  Multirelation g;
  g.at.reserve(r.at.size());
  for (const Family& fam : r.at) g.at.push_back(phi(space, fam));
  return g;
}

Multirelation r_from_g(const DsSpace& space, const Multirelation& g) {
  Multirelation r;
  r.at.reserve(g.at.size());
  for (const Family& fam : g.at) r.at.push_back(psi(space, fam));
  return r;
}

bool s_frame_condition(const DsSpace& space, const Multirelation& r) {
  for (int x = 0; x < space.size(); ++x) {
    for (int y = 0; y < space.size(); ++y) {
      if (space.order().leq(x, y) && !family_subset(r.at[y], r.at[x])) {
        return false;
      }
    }
  }
  return true;
}

bool c_frame_condition(const DsSpace& space, const Multirelation& g) {
  for (int x = 0; x < space.size(); ++x) {
    for (int y = 0; y < space.size(); ++y) {
      if (space.order().leq(x, y) && !family_subset(g.at[x], g.at[y])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool duals_closed_under_r(const DsSpace& space, const Multirelation& r) {
  for (Bits u : space.closeds()) {
    if (!space.is_closed(m_r(space, r, u))) return false;
  }
  return true;
}

bool duals_closed_under_g(const DsSpace& space, const Multirelation& g) {
  for (Bits u : space.closeds()) {
    if (!space.is_closed(m_g(space, g, u))) return false;
  }
  return true;
}

}  // namespace

// Intersection of {Z in opens : Z meets U} over the upsets U whose m_r
// contains x; the empty index set yields the full opens family.
Family tight_s_neighborhood(const DsSpace& space, const Multirelation& r,
                            int x) {
  Family acc = space.opens();
  for (Bits u : space.closeds()) {
    if (!has(m_r(space, r, u), x)) continue;
    Family lu;
    for (Bits z : space.opens()) {
      if ((z & u) != 0) lu.push_back(z);
    }
    acc = family_intersect(acc, lu);
  }
  return acc;
}

Family tight_c_neighborhood(const DsSpace& space, const Multirelation& g,
                            int x) {
  Family acc = space.closeds();
  for (Bits u : space.closeds()) {
    if (has(m_g(space, g, u), x)) continue;
    Family du_c;
    for (Bits y : space.closeds()) {
      if (!is_subset(y, u)) du_c.push_back(y);
    }
    acc = family_intersect(acc, du_c);
  }
  return acc;
}

SMonotonicReport s_monotonic_report(const DsSpace& space,
                                    const Multirelation& r) {
  SMonotonicReport rep;
  rep.closes_duals = duals_closed_under_r(space, r);
  rep.neighborhoods_tight = true;
  for (int x = 0; x < space.size(); ++x) {
    if (r.at[x] != tight_s_neighborhood(space, r, x)) {
      rep.neighborhoods_tight = false;
    }
  }
  return rep;
}

CMonotonicReport c_monotonic_report(const DsSpace& space,
                                    const Multirelation& g) {
  CMonotonicReport rep;
  rep.closes_duals = duals_closed_under_g(space, g);
  rep.neighborhoods_tight = true;
  for (int x = 0; x < space.size(); ++x) {
    if (g.at[x] != tight_c_neighborhood(space, g, x)) {
      rep.neighborhoods_tight = false;
    }
  }
  return rep;
}

bool relation_components_upward(const DsSpace& space, const Multirelation& r) {
  for (int x = 0; x < space.size(); ++x) {
    for (Bits z : r.at[x]) {
      for (Bits bigger : space.opens()) {
        if (is_subset(z, bigger) && !family_has(r.at[x], bigger)) return false;
      }
    }
  }
  return true;
}

EquivalentConditions equivalent_conditions(const DsSpace& space,
                                           const Multirelation& r) {
  EquivalentConditions out;
  out.precondition = duals_closed_under_r(space, r);

  out.meet_of_constraints = true;
  for (int x = 0; x < space.size(); ++x) {
    if (r.at[x] != tight_s_neighborhood(space, r, x)) {
      out.meet_of_constraints = false;
    }
  }

  out.complement_formula = relation_components_upward(space, r);
  for (Bits z : space.opens()) {
    Bits direct = m_r(space, r, space.universe() & ~z);
    Bits built = 0;
    for (Bits u : space.closeds()) {
      if ((z & u) == 0) built |= m_r(space, r, u);
    }
    if (direct != built) out.complement_formula = false;
  }

  if (out.precondition && (int)space.closeds().size() <= kMaxGround) {
    out.pullback_evaluated = true;
    FamilyAlgebra da = algebra_from_family(space.closeds(), space.universe());
    std::vector<int> lifted(da.alg.size());
    for (int i = 0; i < da.alg.size(); ++i) {
      lifted[i] = family_index(da.elems, m_r(space, r, da.elems[i]));
    }
    AlgebraDual dd = AlgebraDual::build(da.alg);
    Multirelation lifted_rel = relation_from_algebra_S(dd, lifted);

    std::vector<int> h(space.size(), -1);
    for (int x = 0; x < space.size(); ++x) {
      Bits hx = 0;
      for (int i = 0; i < (int)da.elems.size(); ++i) {
        if (has(da.elems[i], x)) hx |= bit(i);
      }
      for (int p = 0; p < dd.point_count(); ++p) {
        if (dd.point_filter(p) == hx) h[x] = p;
      }
      if (h[x] < 0) throw Error("point has no dual counterpart");
    }

    out.reflects_dual_relation = true;
    for (int x = 0; x < space.size(); ++x) {
      for (Bits z : space.opens()) {
        Bits image = 0;
        for_each_member(z, [&](int y) { image |= bit(h[y]); });
        if (family_has(lifted_rel.at[h[x]], image) &&
            !family_has(r.at[x], z)) {
          out.reflects_dual_relation = false;
        }
      }
    }
  }
  return out;
}

Multirelation r_squared(const DsSpace& space, const Multirelation& r) {
  Multirelation out;
  out.at.resize(space.size());
  for (int x = 0; x < space.size(); ++x) {
    std::vector<Bits> collected;
    for (Bits s : r.at[x]) {
      for (Bits z : space.opens()) {
        bool everywhere = true;
        for_each_member(s, [&](int y) {
          if (!family_has(r.at[y], z)) everywhere = false;
        });
        if (everywhere) collected.push_back(z);
      }
    }
    out.at[x] = family_from(std::move(collected));
  }
  return out;
}

Multirelation g_squared(const DsSpace& space, const Multirelation& g) {
  Multirelation out;
  out.at.resize(space.size());
  for (int x = 0; x < space.size(); ++x) {
    std::vector<Bits> collected;
    for (Bits c : g.at[x]) {
      for (Bits y : space.closeds()) {
        bool everywhere = true;
        for_each_member(c, [&](int z) {
          if (!family_has(g.at[z], y)) everywhere = false;
        });
        if (everywhere) collected.push_back(y);
      }
    }
    out.at[x] = family_from(std::move(collected));
  }
  return out;
}

bool multirel_within(const Multirelation& sub, const Multirelation& super) {
  if (sub.size() != super.size()) return false;
  for (int x = 0; x < sub.size(); ++x) {
    if (!family_subset(sub.at[x], super.at[x])) return false;
  }
  return true;
}

bool is_normal_space(const DsSpace& space, const Multirelation& r) {
  for (int x = 0; x < space.size(); ++x) {
    for (Bits z : r.at[x]) {
      bool found = false;
      for_each_member(z, [&](int y) {
        if (family_has(r.at[x], space.saturation(bit(y)))) found = true;
      });
      if (!found) return false;
    }
  }
  return true;
}

std::vector<Bits> s_from_r(const DsSpace& space, const Multirelation& r) {
  std::vector<Bits> s(space.size(), 0);
  for (int x = 0; x < space.size(); ++x) {
    for (int y = 0; y < space.size(); ++y) {
      if (family_has(r.at[x], space.saturation(bit(y)))) s[x] |= bit(y);
    }
  }
  return s;
}

Multirelation r_from_s(const DsSpace& space, const std::vector<Bits>& s) {
  Multirelation r;
  r.at.resize(space.size());
  for (int x = 0; x < space.size(); ++x) {
    for (Bits z : space.opens()) {
      if ((s[x] & z) != 0) r.at[x].push_back(z);
    }
  }
  return r;
}

Bits m_s(const DsSpace& space, const std::vector<Bits>& s, Bits upset) {
  Bits out = 0;
  for (int x = 0; x < space.size(); ++x) {
    if (is_subset(s[x], upset)) out |= bit(x);
  }
  return out;
}

}  // namespace mds
