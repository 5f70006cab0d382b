#include "mds/canonical_extension.hpp"

namespace mds {

Family closed_completion_elements(const AlgebraDual& dual) {
  std::vector<Bits> out;
  for (Bits f : dual.algebra().filters()) {
    out.push_back(dual.filter_to_closed(f));
  }
  return family_from(std::move(out));
}

Family open_completion_elements(const AlgebraDual& dual) {
  std::vector<Bits> out;
  for (Bits ideal : dual.algebra().order_ideals(/*include_empty=*/true)) {
    Bits u = 0;
    for_each_member(ideal, [&](int a) { u |= dual.beta(a); });
    out.push_back(u);
  }
  return family_from(std::move(out));
}

bool is_dense_completion(const AlgebraDual& dual) {
  Family k = closed_completion_elements(dual);
  Family o = open_completion_elements(dual);
  for (Bits u : dual.space().closeds()) {  // upsets = completion elements
    Bits join = 0;
    for (Bits c : k) {
      if (is_subset(c, u)) join |= c;
    }
    Bits meet = dual.space().universe();
    for (Bits v : o) {
      if (is_subset(u, v)) meet &= v;
    }
    if (join != u || meet != u) return false;
  }
  return true;
}

bool is_compact_completion(const AlgebraDual& dual) {
  const MeetSemilattice& a = dual.algebra();
  const Poset& ord = a.order();
  Bits ground = ord.universe();
  for (Bits d = 1; d <= ground; ++d) {
    if (!ord.is_dually_directed(d)) continue;
    Bits inf = dual.space().universe();
    for_each_member(d, [&](int x) { inf &= dual.beta(x); });
    for (Bits u = 1; u <= ground; ++u) {
      if (!ord.is_directed(u)) continue;
      Bits sup = 0;
      for_each_member(u, [&](int y) { sup |= dual.beta(y); });
      if (!is_subset(inf, sup)) continue;
      bool witnessed = false;
      for_each_member(d, [&](int x) {
        for_each_member(u, [&](int y) {
          if (a.leq(x, y)) witnessed = true;
        });
      });
      if (!witnessed) return false;
    }
    if (d == ground) break;
  }
  return true;
}

namespace {

Bits family_join(const Family& lattice, Bits members) {
  Bits j = 0;
  for_each_member(members, [&](int i) { j |= lattice[i]; });
  return j;
}

Bits family_meet_mask(const Family& lattice, Bits members, Bits top) {
  Bits m = top;
  for_each_member(members, [&](int i) { m &= lattice[i]; });
  return m;
}

}  // namespace

Family completely_join_primes(const Family& lattice) {
  int n = (int)lattice.size();
  if (n > 20) throw Error("lattice too large for a literal prime scan");
  Family out;
  for (Bits p : lattice) {
    bool prime = true;
    for (Bits s = 0; s < (Bits{1} << n) && prime; ++s) {
      if (!is_subset(p, family_join(lattice, s))) continue;
      bool below_some = false;
      for_each_member(s, [&](int i) {
        if (is_subset(p, lattice[i])) below_some = true;
      });
      if (!below_some) prime = false;
    }
    if (prime) out.push_back(p);
  }
  return out;
}

Family completely_meet_primes(const Family& lattice) {
  int n = (int)lattice.size();
  if (n > 20) throw Error("lattice too large for a literal prime scan");
  Bits top = 0;
  for (Bits u : lattice) top |= u;
  Family out;
  for (Bits p : lattice) {
    bool prime = true;
    for (Bits s = 0; s < (Bits{1} << n) && prime; ++s) {
      if (!is_subset(family_meet_mask(lattice, s, top), p)) continue;
      bool above_some = false;
      for_each_member(s, [&](int i) {
        if (is_subset(lattice[i], p)) above_some = true;
      });
      if (!above_some) prime = false;
    }
    if (prime) out.push_back(p);
  }
  return out;
}

Bits m_sigma(const AlgebraDual& dual, const std::vector<int>& op, Bits upset) {
  const MeetSemilattice& a = dual.algebra();
  Bits out = 0;
  for (Bits y : dual.space().closeds()) {  // empty closed set included
    if (!is_subset(y, upset)) continue;
    Bits term = dual.space().universe();
    for (int e = 0; e < a.size(); ++e) {
      if (is_subset(y, dual.beta(e))) term &= dual.beta(op[e]);
    }
    out |= term;
  }
  return out;
}

Bits m_pi(const AlgebraDual& dual, const std::vector<int>& op, Bits upset) {
  const MeetSemilattice& a = dual.algebra();
  Bits complement = dual.space().universe() & ~upset;
  Bits out = dual.space().universe();
  for (Bits z : dual.space().opens()) {
    if (!is_subset(z, complement)) continue;
    Bits term = 0;
    for (int e = 0; e < a.size(); ++e) {
      if ((z & dual.beta(e)) == 0) term |= dual.beta(op[e]);
    }
    out &= term;
  }
  return out;
}

}  // namespace mds
