#include "mds/dual_space.hpp"

#include <algorithm>
#include <string>

namespace mds {

DsSpace DsSpace::from_basis(int n_points, const Family& basis) {
  if (n_points < 0 || n_points > kMaxGround) {
    throw Error("point count out of range: " + std::to_string(n_points));
  }
  Bits universe = full_set(n_points);
  Bits covered = 0;
  Family b = basis;
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  for (Bits m : b) {
    if (!is_subset(m, universe)) throw Error("basis member outside the space");
    covered |= m;
  }
  if (covered != universe) throw Error("basis does not cover the space");
  // Basis property: pairwise intersections are unions of members. In a
  // finite family this is equivalent to every point's minimal neighborhood
  // (the intersection of all members containing it) being a member itself.
  for (int x = 0; x < n_points; ++x) {
    Bits least = universe;
    for (Bits m : b) {
      if (has(m, x)) least &= m;
    }
    if (!family_has(b, least)) {
      throw Error("basis intersections are not unions of members (point " +
                  std::to_string(x) + ")");
    }
  }

  // x <= y iff every basis member containing y contains x; equals the
  // specialization dual order of the generated topology.
  std::vector<Bits> below(n_points, 0);
  for (int y = 0; y < n_points; ++y) {
    Bits d = universe;
    for (Bits m : b) {
      if (has(m, y)) d &= m;
    }
    below[y] = d;
  }
  for (int x = 0; x < n_points; ++x) {
    for (int y = x + 1; y < n_points; ++y) {
      if (has(below[y], x) && has(below[x], y)) {
        throw Error("space is not T0: points " + std::to_string(x) + "," +
                    std::to_string(y) + " are indistinguishable");
      }
    }
  }
  Poset order = Poset::from_less_equal(
      n_points, [&](int x, int y) { return has(below[y], x); });
  Family opens = order.all_downsets();
  Family closeds = order.all_upsets();
  return DsSpace(std::move(order), std::move(b), std::move(opens),
                 std::move(closeds));
}

DsSpace DsSpace::from_poset(const Poset& order) {
  return from_basis(order.size(), order.all_downsets());
}

Family DsSpace::closeds_nonempty() const {
  Family out = closeds_;
  out.erase(std::remove(out.begin(), out.end(), Bits{0}), out.end());
  return out;
}

bool DsSpace::irreducible_closed(Bits y) const {
  if (y == 0) return false;
  for (Bits z : closeds_) {
    for (Bits w : closeds_) {
      if (is_subset(y, z | w) && !is_subset(y, z) && !is_subset(y, w)) {
        return false;
      }
    }
  }
  return true;
}

bool DsSpace::is_sober() const {
  bool small = closeds_.size() <= 1024;
  for (Bits y : closeds_) {
    if (y == 0) continue;
    bool irr = small ? irreducible_closed(y)
                     : count(order_.minimal_members(y)) == 1;
    if (!irr) continue;
    int witnesses = 0;
    for (int x = 0; x < size(); ++x) {
      if (closure(bit(x)) == y) ++witnesses;
    }
    if (witnesses != 1) return false;
  }
  return true;
}

AlgebraDual AlgebraDual::build(const MeetSemilattice& algebra) {
  if (auto w = algebra.distributivity_witness()) {
    throw Error("algebra is not distributive at " + std::to_string((*w)[0]) +
                "," + std::to_string((*w)[1]) + "," + std::to_string((*w)[2]));
  }
  std::vector<Bits> points = algebra.irreducible_filters();  // sorted
  int np = (int)points.size();
  if (np > kMaxGround) throw Error("dual space too large");
  std::vector<Bits> beta(algebra.size(), 0);
  for (int a = 0; a < algebra.size(); ++a) {
    for (int p = 0; p < np; ++p) {
      if (has(points[p], a)) beta[a] |= bit(p);
    }
  }
  Family basis;
  Bits universe = full_set(np);
  for (int a = 0; a < algebra.size(); ++a) {
    basis.push_back(universe & ~beta[a]);
  }
  DsSpace space = DsSpace::from_basis(np, basis);
  return AlgebraDual(algebra, std::move(space), std::move(points),
                     std::move(beta));
}

int AlgebraDual::beta_preimage(Bits u) const {
  for (int a = 0; a < algebra_.size(); ++a) {
    if (beta_[a] == u) return a;
  }
  return -1;
}

Bits AlgebraDual::filter_to_closed(Bits filter) const {
  Bits out = 0;
  for (int p = 0; p < point_count(); ++p) {
    if (is_subset(filter, points_[p])) out |= bit(p);
  }
  return out;
}

Bits AlgebraDual::closed_to_filter(Bits closed) const {
  Bits out = 0;
  for (int a = 0; a < algebra_.size(); ++a) {
    if (is_subset(closed, beta_[a])) out |= bit(a);
  }
  return out;
}

Bits AlgebraDual::alpha(Bits ideal) const {
  Bits out = 0;
  for (int p = 0; p < point_count(); ++p) {
    if ((ideal & points_[p]) == 0) out |= bit(p);
  }
  return out;
}

Bits AlgebraDual::ideal_of_saturated(Bits z) const {
  Bits out = 0;
  for (int a = 0; a < algebra_.size(); ++a) {
    if ((beta_[a] & z) == 0) out |= bit(a);
  }
  return out;
}

}  // namespace mds
