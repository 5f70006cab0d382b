#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mds/bits.hpp"
#include "mds/poset.hpp"

namespace mds {

// Finite meet-semilattice with greatest element. Elements are indices
// 0..n-1; the natural order is a <= b iff a /\ b = a.
class MeetSemilattice {
 public:
  // Validates idempotence, commutativity, associativity and the unit law
  // for `top`; throws Error naming the offending elements otherwise.
  static MeetSemilattice from_table(int n, int top,
                                    std::vector<std::vector<int>> meet);

  int size() const { return n_; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }

  int meet(int a, int b) const { return meet_[a][b]; }
  int meet_all(Bits s) const;  // meet over s; top for s == 0
  bool leq(int a, int b) const { return meet_[a][b] == a; }

  const Poset& order() const { return order_; }
  Bits up(int a) const { return order_.up_of(a); }
  Bits down(int a) const { return order_.down_of(a); }

  bool is_filter(Bits s) const;
  bool is_order_ideal(Bits s) const;

  // All filters (the improper one included), as a sorted family.
  Family filters() const;
  Family proper_filters() const;
  Family irreducible_filters() const;
  Family order_ideals(bool include_empty) const;

  Bits filter_generated(Bits s) const;

  // First lexicographic (a, b, c) with a /\ b <= c admitting no cover
  // a1 >= a, b1 >= b with c = a1 /\ b1; nullopt when distributive.
  std::optional<std::array<int, 3>> distributivity_witness() const;
  bool is_distributive() const {
    return !distributivity_witness().has_value();
  }

  struct IrreducibilityReport {
    bool proper = false;
    bool irreducible = false;        // no decomposition F = F1 /\ F2
    bool residual_bound = false;     // a,b outside F admit c,f: a/\f, b/\f <= c
    bool complement_ideal = false;   // A - F is an order ideal
  };
  IrreducibilityReport irreducibility_report(Bits filter) const;
  bool is_irreducible_filter(Bits s) const;

  // Least-mask irreducible P with filter <= P and P disjoint from ideal.
  std::optional<Bits> separation_witness(Bits filter, Bits ideal) const;

 private:
  MeetSemilattice(int n, int top, int bottom,
                  std::vector<std::vector<int>> meet, Poset order)
      : n_(n), top_(top), bottom_(bottom), meet_(std::move(meet)),
        order_(std::move(order)) {}

  int n_;
  int top_;
  int bottom_;
  std::vector<std::vector<int>> meet_;
  Poset order_;
};

// Semilattice whose elements are the members of a set family ordered by
// inclusion, with intersection as meet. The family must contain `top` and
// be closed under pairwise intersection; elems[i] names element i.
struct FamilyAlgebra {
  MeetSemilattice alg;
  Family elems;
};
FamilyAlgebra algebra_from_family(const Family& family, Bits top);

}  // namespace mds
