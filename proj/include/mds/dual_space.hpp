#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/poset.hpp"
#include "mds/semilattice.hpp"

namespace mds {

// Finite T0 topological space presented by a basis. Opens are exactly the
// downsets of the specialization dual order (finite spaces are Alexandrov),
// closed sets exactly the upsets; every open is compact.
class DsSpace {
 public:
  // Validates that the basis covers the point set and that every pairwise
  // intersection of members is a union of members, derives the
  // specialization dual order, and rejects non-T0 inputs.
  static DsSpace from_basis(int n_points, const Family& basis);

  // The Alexandrov space of a poset; the basis is the whole topology.
  static DsSpace from_poset(const Poset& order);

  int size() const { return order_.size(); }
  Bits universe() const { return order_.universe(); }

  // Specialization dual order: x <= y iff y lies in the closure of x.
  const Poset& order() const { return order_; }
  const Family& basis() const { return basis_; }

  const Family& opens() const { return opens_; }          // = saturated family
  const Family& closeds() const { return closeds_; }      // includes the empty set
  Family closeds_nonempty() const;

  bool is_open(Bits s) const { return order_.is_downset(s); }
  bool is_closed(Bits s) const { return order_.is_upset(s); }

  Bits closure(Bits s) const { return order_.up_closure(s); }
  Bits saturation(Bits s) const { return order_.down_closure(s); }

  // Literal sobriety check: every irreducible closed set is the closure of
  // exactly one point. Uses the pair-scan definition of irreducibility for
  // small closed families and the unique-minimal-point characterization
  // beyond that.
  bool is_sober() const;
  bool irreducible_closed(Bits y) const;  // pair-scan definition

 private:
  DsSpace(Poset order, Family basis, Family opens, Family closeds)
      : order_(std::move(order)), basis_(std::move(basis)),
        opens_(std::move(opens)), closeds_(std::move(closeds)) {}

  Poset order_;
  Family basis_;
  Family opens_;
  Family closeds_;
};

// Dual space of a distributive meet-semilattice: points are the
// irreducible filters ordered by inclusion, basis {beta(a)^c : a}.
class AlgebraDual {
 public:
  // Throws (naming a witness) when the algebra is not distributive.
  static AlgebraDual build(const MeetSemilattice& algebra);

  const MeetSemilattice& algebra() const { return algebra_; }
  const DsSpace& space() const { return space_; }
  int point_count() const { return (int)points_.size(); }

  // Irreducible filter carried by a point; points are sorted by this mask.
  Bits point_filter(int p) const { return points_[p]; }

  Bits beta(int a) const { return beta_[a]; }
  const std::vector<Bits>& beta_table() const { return beta_; }
  // Element a with beta(a) == u, or -1 when u is not a beta value.
  int beta_preimage(Bits u) const;

  Bits filter_to_closed(Bits filter) const;   // {p : filter ⊆ P_p}
  Bits closed_to_filter(Bits closed) const;   // {a : closed ⊆ beta(a)}
  Bits alpha(Bits ideal) const;               // {p : ideal ∩ P_p = ∅}
  Bits ideal_of_saturated(Bits z) const;      // {a : beta(a) ∩ z = ∅}

 private:
  AlgebraDual(MeetSemilattice algebra, DsSpace space, std::vector<Bits> points,
              std::vector<Bits> beta)
      : algebra_(std::move(algebra)), space_(std::move(space)),
        points_(std::move(points)), beta_(std::move(beta)) {}

  MeetSemilattice algebra_;
  DsSpace space_;
  std::vector<Bits> points_;  // filter masks, ascending
  std::vector<Bits> beta_;    // point masks, one per element
};

}  // namespace mds
