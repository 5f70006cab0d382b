#pragma once

#include <vector>

#include "mds/boolean.hpp"
#include "mds/semilattice.hpp"

namespace mds {

// Three-element chain 0 < c < 1, indices {0:bottom, 1:c, 2:top}.
MeetSemilattice fixture_chain3();

// Four-element diamond 0 < a,b < 1, indices {0:bottom, 1:a, 2:b, 3:top}.
MeetSemilattice fixture_diamond();

// Five-element non-distributive lattice: three incomparable atoms between
// bottom and top, indices {0, 1:x, 2:y, 3:z, 4:top}.
MeetSemilattice fixture_m3();

// Operators as element-index tables.
std::vector<int> fixture_identity_op(const MeetSemilattice& a);
std::vector<int> fixture_const_top_op(const MeetSemilattice& a);
std::vector<int> fixture_const_bottom_op(const MeetSemilattice& a);
std::vector<int> fixture_diamond_step_op();  // 0,a,b,1 -> 0,1,b,1
std::vector<int> fixture_chain3_up_op();     // 0,c,1 -> c,1,1
std::vector<int> fixture_chain3_down_op();   // 0,c,1 -> 0,0,c

// Homomorphism from the chain into the diamond: 0 -> 0, c -> a, 1 -> 1.
std::vector<int> fixture_chain3_to_diamond_hom();

// Two-atom powerset with a box operator fixing top and collapsing the rest
// to bottom.
BooleanMds fixture_bool4();

}  // namespace mds
