#include "mds/boolean.hpp"

#include "mds/dual_space.hpp"
#include "mds/relations.hpp"

namespace mds {

std::vector<int> BooleanMds::diamond() const {
  std::vector<int> d(box.size());
  for (int e = 0; e < (int)box.size(); ++e) {
    d[e] = complement_of(box[complement_of(e)]);
  }
  return d;
}

BooleanMds make_boolean(int atoms, std::vector<int> box) {
  if (atoms < 0 || atoms > 4) throw Error("atom count out of range");
  int n = 1 << atoms;
  if ((int)box.size() != n) throw Error("operator table has wrong size");
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) meet[x][y] = x & y;
  }
  MeetSemilattice alg = MeetSemilattice::from_table(n, n - 1, std::move(meet));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (is_subset(Bits(x), Bits(y)) && !alg.leq(box[x], box[y])) {
        throw Error("operator is not monotone");
      }
    }
  }
  return BooleanMds{std::move(alg), atoms, std::move(box)};
}

BooleanDualityReport boolean_duality_report(const BooleanMds& b) {
  BooleanDualityReport rep;
  AlgebraDual dual = AlgebraDual::build(b.alg);

  rep.points_are_atom_filters = dual.point_count() == b.atoms;
  if (rep.points_are_atom_filters) {
    Bits atoms_seen = 0;
    for (int p = 0; p < dual.point_count(); ++p) {
      int least = b.alg.meet_all(dual.point_filter(p));
      // Each point must be the principal ultrafilter of a single atom.
      if (count(Bits(least)) != 1 ||
          dual.point_filter(p) != b.alg.order().up_of(least)) {
        rep.points_are_atom_filters = false;
      } else {
        atoms_seen |= Bits(least);
      }
    }
    if (atoms_seen != full_set(b.atoms)) rep.points_are_atom_filters = false;
  }

  rep.opens_equal_closeds = dual.space().opens() == dual.space().closeds();

  std::vector<int> dia = b.diamond();
  Multirelation r_box = relation_from_algebra_S(dual, b.box);
  Multirelation r_dia = relation_from_algebra_S(dual, dia);
  Multirelation g_box = relation_from_algebra_C(dual, b.box);
  Multirelation g_dia = relation_from_algebra_C(dual, dia);
  rep.diamond_c_equals_box_s = g_dia == r_box;
  rep.box_c_equals_diamond_s = g_box == r_dia;

  rep.filter_closures_match_ideal_kernels = true;
  for (Bits f : b.alg.filters()) {
    Bits negated = 0;
    for_each_member(f, [&](int a) { negated |= bit(b.complement_of(a)); });
    if (dual.filter_to_closed(f) != dual.alpha(negated)) {
      rep.filter_closures_match_ideal_kernels = false;
    }
  }
  return rep;
}

}  // namespace mds
