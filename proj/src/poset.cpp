#include "mds/poset.hpp"

#include <string>

namespace mds {

Poset Poset::from_less_equal(int n, const std::function<bool(int, int)>& leq) {
  if (n < 0 || n > kMaxGround) {
    throw Error("poset size out of range: " + std::to_string(n));
  }
  std::vector<Bits> up(n, 0), dn(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up[a] |= bit(b);
        dn[b] |= bit(a);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!has(up[a], a)) {
      throw Error("order not reflexive at " + std::to_string(a));
    }
    for (int b = 0; b < n; ++b) {
      if (!has(up[a], b)) continue;
      if (a != b && has(up[b], a)) {
        throw Error("order not antisymmetric on " + std::to_string(a) + "," +
                    std::to_string(b));
      }
      if ((up[b] & ~up[a]) != 0) {
        throw Error("order not transitive through " + std::to_string(a) + "," +
                    std::to_string(b));
      }
    }
  }
  return Poset(n, std::move(up), std::move(dn));
}

Bits Poset::up_closure(Bits s) const {
  Bits r = 0;
  for_each_member(s, [&](int i) { r |= up_[i]; });
  return r;
}

Bits Poset::down_closure(Bits s) const {
  Bits r = 0;
  for_each_member(s, [&](int i) { r |= dn_[i]; });
  return r;
}

bool Poset::is_directed(Bits s) const {
  bool ok = true;
  for_each_member(s, [&](int a) {
    for_each_member(s, [&](int b) {
      if (b < a) return;
      if ((up_[a] & up_[b] & s) == 0) ok = false;
    });
  });
  return ok;
}

bool Poset::is_dually_directed(Bits s) const {
  bool ok = true;
  for_each_member(s, [&](int a) {
    for_each_member(s, [&](int b) {
      if (b < a) return;
      if ((dn_[a] & dn_[b] & s) == 0) ok = false;
    });
  });
  return ok;
}

Family Poset::all_upsets() const {
  Family out;
  for (Bits s = 0; s <= universe(); ++s) {
    if (is_upset(s)) out.push_back(s);
    if (s == universe()) break;
  }
  return out;
}

Family Poset::all_downsets() const {
  Family out;
  for (Bits s = 0; s <= universe(); ++s) {
    if (is_downset(s)) out.push_back(s);
    if (s == universe()) break;
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      Bits between = up_[a] & dn_[b] & ~bit(a) & ~bit(b);
      if (between == 0) out.emplace_back(a, b);
    }
  }
  return out;
}

Bits Poset::maximal_members(Bits s) const {
  Bits r = 0;
  for_each_member(s, [&](int i) {
    if ((up_[i] & s & ~bit(i)) == 0) r |= bit(i);
  });
  return r;
}

Bits Poset::minimal_members(Bits s) const {
  Bits r = 0;
  for_each_member(s, [&](int i) {
    if ((dn_[i] & s & ~bit(i)) == 0) r |= bit(i);
  });
  return r;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> out;
  Bits placed = 0;
  while ((int)out.size() < n_) {
    for (int i = 0; i < n_; ++i) {
      if (has(placed, i)) continue;
      if (is_subset(dn_[i] & ~bit(i), placed)) {
        out.push_back(i);
        placed |= bit(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace mds
