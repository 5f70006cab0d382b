#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/dual_space.hpp"
#include "mds/relations.hpp"

namespace mds {

// h[a] is the image of element a; checks meet and top preservation.
bool is_homomorphism(const MeetSemilattice& a, const MeetSemilattice& b,
                     const std::vector<int>& h);

// h(op_a(x)) == op_b(h(x)) for all x.
bool commutes_with_ops(const std::vector<int>& op_a,
                       const std::vector<int>& op_b,
                       const std::vector<int>& h);

// Binary relation between two spaces: one target mask per source point.
using MeetRelation = std::vector<Bits>;

// {x : S(x) ⊆ u}, an operation from target upsets to source subsets.
Bits h_s(const MeetRelation& s, Bits u);

// Meet-relation laws: h_s carries upsets to upsets and every S(x) is the
// intersection of the upsets around it.
bool is_meet_relation(const DsSpace& from, const DsSpace& to,
                      const MeetRelation& s);

// Dual relation of a homomorphism h : A -> B, relating points of the
// B-dual to points of the A-dual.
MeetRelation relation_of_homomorphism(const AlgebraDual& b_dual,
                                      const AlgebraDual& a_dual,
                                      const std::vector<int>& h);

// Relational composite: first `inner`, then `outer`.
MeetRelation compose(const MeetRelation& outer, const MeetRelation& inner);

// Identity arrow: the dual specialization order itself.
MeetRelation identity_relation(const DsSpace& space);

// Pointwise exchange law for a meet-relation between structures carrying
// S-side multirelations: a co-upset is seen from S(x) exactly when its
// preimage is a neighborhood of x.
bool monotonic_condition_pointwise(const DsSpace& from,
                                   const Multirelation& r_from,
                                   const DsSpace& to,
                                   const Multirelation& r_to,
                                   const MeetRelation& s);

// Operator form of the same law: h_s intertwines the two box operators.
bool monotonic_condition_algebraic(const DsSpace& from,
                                   const Multirelation& r_from,
                                   const DsSpace& to,
                                   const Multirelation& r_to,
                                   const MeetRelation& s);

}  // namespace mds
