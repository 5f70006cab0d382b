#include "mds/morphisms.hpp"

namespace mds {

bool is_homomorphism(const MeetSemilattice& a, const MeetSemilattice& b,
                     const std::vector<int>& h) {
  if ((int)h.size() != a.size()) return false;
  for (int x : h) {
    if (x < 0 || x >= b.size()) return false;
  }
  if (h[a.top()] != b.top()) return false;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (h[a.meet(x, y)] != b.meet(h[x], h[y])) return false;
    }
  }
  return true;
}

bool commutes_with_ops(const std::vector<int>& op_a,
                       const std::vector<int>& op_b,
                       const std::vector<int>& h) {
  for (int x = 0; x < (int)h.size(); ++x) {
    if (h[op_a[x]] != op_b[h[x]]) return false;
  }
  return true;
}

Bits h_s(const MeetRelation& s, Bits u) {
  Bits out = 0;
  for (int x = 0; x < (int)s.size(); ++x) {
    if (is_subset(s[x], u)) out |= bit(x);
  }
  return out;
}

bool is_meet_relation(const DsSpace& from, const DsSpace& to,
                      const MeetRelation& s) {
  if ((int)s.size() != from.size()) return false;
  for (Bits targets : s) {
    if (!is_subset(targets, to.universe())) return false;
  }
  for (Bits u : to.closeds()) {
    if (!from.is_closed(h_s(s, u))) return false;
  }
  for (int x = 0; x < from.size(); ++x) {
    Bits meet = to.universe();
    for (Bits u : to.closeds()) {
      if (is_subset(s[x], u)) meet &= u;
    }
    if (meet != s[x]) return false;
  }
  return true;
}

MeetRelation relation_of_homomorphism(const AlgebraDual& b_dual,
                                      const AlgebraDual& a_dual,
                                      const std::vector<int>& h) {
  MeetRelation s(b_dual.point_count(), 0);
  for (int p = 0; p < b_dual.point_count(); ++p) {
    Bits preimage = 0;
    for (int a = 0; a < a_dual.algebra().size(); ++a) {
      if (has(b_dual.point_filter(p), h[a])) preimage |= bit(a);
    }
    for (int q = 0; q < a_dual.point_count(); ++q) {
      if (is_subset(preimage, a_dual.point_filter(q))) s[p] |= bit(q);
    }
  }
  return s;
}

MeetRelation compose(const MeetRelation& outer, const MeetRelation& inner) {
  MeetRelation out(inner.size(), 0);
  for (int x = 0; x < (int)inner.size(); ++x) {
    for_each_member(inner[x], [&](int y) { out[x] |= outer[y]; });
  }
  return out;
}

MeetRelation identity_relation(const DsSpace& space) {
  MeetRelation s(space.size(), 0);
  for (int x = 0; x < space.size(); ++x) s[x] = space.order().up_of(x);
  return s;
}

bool monotonic_condition_pointwise(const DsSpace& from,
                                   const Multirelation& r_from,
                                   const DsSpace& to,
                                   const Multirelation& r_to,
                                   const MeetRelation& s) {
  for (Bits u : to.closeds()) {
    Bits co = to.universe() & ~u;
    Bits preimage = 0;
    for (int x = 0; x < from.size(); ++x) {
      if ((s[x] & co) != 0) preimage |= bit(x);
    }
    for (int x = 0; x < from.size(); ++x) {
      bool seen = false;
      for_each_member(s[x], [&](int y) {
        if (family_has(r_to.at[y], co)) seen = true;
      });
      if (seen != family_has(r_from.at[x], preimage)) return false;
    }
  }
  return true;
}

bool monotonic_condition_algebraic(const DsSpace& from,
                                   const Multirelation& r_from,
                                   const DsSpace& to,
                                   const Multirelation& r_to,
                                   const MeetRelation& s) {
  for (Bits u : to.closeds()) {
    if (h_s(s, m_r(to, r_to, u)) != m_r(from, r_from, h_s(s, u))) {
      return false;
    }
  }
  return true;
}

}  // namespace mds
