#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/semilattice.hpp"

namespace mds {

// Powerset algebra over a small atom set, with a monotone box operator.
// Element indices are atom masks, so meet is bitwise-and and the top is
// the full mask.
struct BooleanMds {
  MeetSemilattice alg;
  int atoms = 0;
  std::vector<int> box;

  int complement_of(int e) const { return (int)(full_set(atoms) & ~Bits(e)); }
  std::vector<int> diamond() const;
};

// Validates that box is monotone with respect to inclusion of atom masks.
BooleanMds make_boolean(int atoms, std::vector<int> box);

struct BooleanDualityReport {
  bool points_are_atom_filters = false;
  bool opens_equal_closeds = false;
  bool diamond_c_equals_box_s = false;
  bool box_c_equals_diamond_s = false;
  bool filter_closures_match_ideal_kernels = false;
  bool ok() const {
    return points_are_atom_filters && opens_equal_closeds &&
           diamond_c_equals_box_s && box_c_equals_diamond_s &&
           filter_closures_match_ideal_kernels;
  }
};
BooleanDualityReport boolean_duality_report(const BooleanMds& b);

}  // namespace mds
