#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mds/bits.hpp"
#include "mds/dual_space.hpp"
#include "mds/morphisms.hpp"
#include "mds/poset.hpp"
#include "mds/semilattice.hpp"

namespace mds {

// Deterministic across platforms: bounded draws avoid the
// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  bool coin() { return (next() & 1) != 0; }
  int below(int n);           // uniform over 0..n-1
  Bits subset_of(Bits mask);  // each member kept independently
  int pick_member(Bits s);    // uniform member of a nonempty mask

 private:
  std::mt19937_64 eng_;
};

Poset random_poset(Rng& rng, int n);

// Random distributive instance with at most max_size elements; mixes
// upset lattices of small posets with rejection-filtered
// intersection-closed families.
MeetSemilattice random_distributive(Rng& rng, int max_size);

std::vector<int> random_monotone_op(Rng& rng, const MeetSemilattice& a);

// Operator that preserves top and binary meets, built from an antitone
// assignment of upsets to dual points.
std::vector<int> random_modal_op(Rng& rng, const AlgebraDual& dual);

MeetRelation random_meet_relation(Rng& rng, const DsSpace& from,
                                  const DsSpace& to);

std::vector<int> random_homomorphism(Rng& rng, const AlgebraDual& a_dual,
                                     const AlgebraDual& b_dual);

// Least order matrix over all relabelings; equal keys mean isomorphic.
std::string canonical_order_key(const MeetSemilattice& a);
bool isomorphic(const MeetSemilattice& a, const MeetSemilattice& b);

// Every distributive meet-semilattice with at most max_size elements, one
// representative per isomorphism class, ordered by size then key.
std::vector<MeetSemilattice> distributive_catalog(int max_size);

}  // namespace mds
