#include "mds/fixtures.hpp"

namespace mds {

MeetSemilattice fixture_chain3() {
  return MeetSemilattice::from_table(3, 2,
                                     {{0, 0, 0},  //
                                      {0, 1, 1},
                                      {0, 1, 2}});
}

MeetSemilattice fixture_diamond() {
  return MeetSemilattice::from_table(4, 3,
                                     {{0, 0, 0, 0},
                                      {0, 1, 0, 1},
                                      {0, 0, 2, 2},
                                      {0, 1, 2, 3}});
}

MeetSemilattice fixture_m3() {
  return MeetSemilattice::from_table(5, 4,
                                     {{0, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 1},
                                      {0, 0, 2, 0, 2},
                                      {0, 0, 0, 3, 3},
                                      {0, 1, 2, 3, 4}});
}

std::vector<int> fixture_identity_op(const MeetSemilattice& a) {
  std::vector<int> m(a.size());
  for (int i = 0; i < a.size(); ++i) m[i] = i;
  return m;
}

std::vector<int> fixture_const_top_op(const MeetSemilattice& a) {
  return std::vector<int>(a.size(), a.top());
}

std::vector<int> fixture_const_bottom_op(const MeetSemilattice& a) {
  return std::vector<int>(a.size(), a.bottom());
}

std::vector<int> fixture_diamond_step_op() { return {0, 3, 2, 3}; }

std::vector<int> fixture_chain3_up_op() { return {1, 2, 2}; }

std::vector<int> fixture_chain3_down_op() { return {0, 0, 1}; }

std::vector<int> fixture_chain3_to_diamond_hom() { return {0, 1, 3}; }

BooleanMds fixture_bool4() { return make_boolean(2, {0, 0, 0, 3}); }

}  // namespace mds
