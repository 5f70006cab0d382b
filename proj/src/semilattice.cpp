#include "mds/semilattice.hpp"

#include <algorithm>
#include <string>

namespace mds {

namespace {

std::string elem(int a) { return std::to_string(a); }

}  // namespace

MeetSemilattice MeetSemilattice::from_table(int n, int top,
                                            std::vector<std::vector<int>> meet) {
  if (n < 1 || n > kMaxGround) {
    throw Error("carrier size out of range: " + std::to_string(n));
  }
  if (top < 0 || top >= n) throw Error("top element out of range");
  if ((int)meet.size() != n) throw Error("meet table has wrong shape");
  for (int a = 0; a < n; ++a) {
    if ((int)meet[a].size() != n) throw Error("meet table has wrong shape");
    for (int b = 0; b < n; ++b) {
      if (meet[a][b] < 0 || meet[a][b] >= n) {
        throw Error("meet value out of range at " + elem(a) + "," + elem(b));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (meet[a][a] != a) throw Error("meet not idempotent at " + elem(a));
    if (meet[a][top] != a || meet[top][a] != a) {
      throw Error("top is not a unit at " + elem(a));
    }
    for (int b = 0; b < n; ++b) {
      if (meet[a][b] != meet[b][a]) {
        throw Error("meet not commutative on " + elem(a) + "," + elem(b));
      }
      for (int c = 0; c < n; ++c) {
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) {
          throw Error("meet not associative on " + elem(a) + "," + elem(b) +
                      "," + elem(c));
        }
      }
    }
  }
  Poset order = Poset::from_less_equal(
      n, [&](int a, int b) { return meet[a][b] == a; });
  int bottom = 0;
  for (int a = 1; a < n; ++a) bottom = meet[bottom][a];
  return MeetSemilattice(n, top, bottom, std::move(meet), std::move(order));
}

int MeetSemilattice::meet_all(Bits s) const {
  int r = top_;
  for_each_member(s, [&](int i) { r = meet_[r][i]; });
  return r;
}

bool MeetSemilattice::is_filter(Bits s) const {
  if (s == 0 || !order_.is_upset(s)) return false;
  bool ok = true;
  for_each_member(s, [&](int a) {
    for_each_member(s, [&](int b) {
      if (!has(s, meet_[a][b])) ok = false;
    });
  });
  return ok;
}

bool MeetSemilattice::is_order_ideal(Bits s) const {
  if (!order_.is_downset(s)) return false;
  return order_.is_directed(s);
}

Family MeetSemilattice::filters() const {
  Family out;
  for (Bits s = 0;; ++s) {
    if (is_filter(s)) out.push_back(s);
    if (s == order_.universe()) break;
  }
  return out;
}

Family MeetSemilattice::proper_filters() const {
  Family out = filters();
  out.erase(std::remove(out.begin(), out.end(), order_.universe()), out.end());
  return out;
}

Family MeetSemilattice::irreducible_filters() const {
  Family out;
  for (Bits f : proper_filters()) {
    if (is_irreducible_filter(f)) out.push_back(f);
  }
  return out;
}

Family MeetSemilattice::order_ideals(bool include_empty) const {
  Family out;
  for (Bits s = include_empty ? 0 : 1;; ++s) {
    if (is_order_ideal(s)) out.push_back(s);
    if (s == order_.universe()) break;
  }
  return out;
}

Bits MeetSemilattice::filter_generated(Bits s) const {
  // Close under meets first; with the top adjoined the result is an upset
  // of its meet, hence the least filter around s.
  return order_.up_of(meet_all(s)) | order_.up_of(top_);
}

std::optional<std::array<int, 3>>
MeetSemilattice::distributivity_witness() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        if (!leq(meet_[a][b], c)) continue;
        bool covered = false;
        for (int a1 = 0; a1 < n_ && !covered; ++a1) {
          if (!leq(a, a1)) continue;
          for (int b1 = 0; b1 < n_; ++b1) {
            if (leq(b, b1) && meet_[a1][b1] == c) {
              covered = true;
              break;
            }
          }
        }
        if (!covered) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

MeetSemilattice::IrreducibilityReport
MeetSemilattice::irreducibility_report(Bits filter) const {
  IrreducibilityReport rep;
  if (!is_filter(filter)) return rep;
  rep.proper = filter != order_.universe();

  rep.irreducible = rep.proper;
  if (rep.proper) {
    Family all = filters();
    for (Bits f1 : all) {
      for (Bits f2 : all) {
        if ((f1 & f2) == filter && f1 != filter && f2 != filter) {
          rep.irreducible = false;
        }
      }
    }
  }

  Bits outside = order_.universe() & ~filter;
  rep.residual_bound = rep.proper;
  for_each_member(outside, [&](int a) {
    for_each_member(outside, [&](int b) {
      bool found = false;
      for_each_member(outside, [&](int c) {
        if (found) return;
        for_each_member(filter, [&](int f) {
          if (leq(meet_[a][f], c) && leq(meet_[b][f], c)) found = true;
        });
      });
      if (!found) rep.residual_bound = false;
    });
  });

  rep.complement_ideal = rep.proper && is_order_ideal(outside);
  return rep;
}

bool MeetSemilattice::is_irreducible_filter(Bits s) const {
  IrreducibilityReport rep = irreducibility_report(s);
  return rep.proper && rep.irreducible;
}

std::optional<Bits> MeetSemilattice::separation_witness(Bits filter,
                                                        Bits ideal) const {
  if (!is_filter(filter) || !is_order_ideal(ideal)) {
    throw Error("separation needs a filter and an order ideal");
  }
  for (Bits p : irreducible_filters()) {
    if (is_subset(filter, p) && (p & ideal) == 0) return p;
  }
  return std::nullopt;
}

FamilyAlgebra algebra_from_family(const Family& family, Bits top) {
  int n = (int)family.size();
  if (n < 1 || n > kMaxGround) {
    throw Error("family size out of range: " + std::to_string(n));
  }
  if (!family_has(family, top)) throw Error("family is missing its top");
  for (Bits s : family) {
    if (!is_subset(s, top)) throw Error("family member outside the top");
  }
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = family_index(family, family[i] & family[j]);
      if (k < 0) throw Error("family not closed under intersection");
      meet[i][j] = k;
    }
  }
  int top_idx = family_index(family, top);
  return FamilyAlgebra{
      MeetSemilattice::from_table(n, top_idx, std::move(meet)), family};
}

}  // namespace mds
