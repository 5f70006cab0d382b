#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/dual_space.hpp"

namespace mds {

// A multirelation assigns each point a family of subsets of the space.
// S-side second components live in the opens family, C-side ones in the
// closed family (the empty set is admitted on both sides).
struct Multirelation {
  std::vector<Family> at;

  int size() const { return (int)at.size(); }
  bool operator==(const Multirelation&) const = default;
};

// Second components must be members of `allowed`.
bool components_within(const Multirelation& rel, const Family& allowed);

// Box-style operator of an S-side relation: points all of whose
// neighborhoods meet the upset.
Bits m_r(const DsSpace& space, const Multirelation& r, Bits upset);

// Diamond-style operator of a C-side relation: points with a neighborhood
// inside the upset.
Bits m_g(const DsSpace& space, const Multirelation& g, Bits upset);

// Dual relations of a monotone operator on the algebra.
Multirelation relation_from_algebra_S(const AlgebraDual& dual,
                                      const std::vector<int>& op);
Multirelation relation_from_algebra_C(const AlgebraDual& dual,
                                      const std::vector<int>& op);

// Polarity between open-side and closed-side families: everything meeting
// everything. phi maps open families to closed families, psi back.
Family phi(const DsSpace& space, const Family& open_family);
Family psi(const DsSpace& space, const Family& closed_family);

Multirelation g_from_r(const DsSpace& space, const Multirelation& r);
Multirelation r_from_g(const DsSpace& space, const Multirelation& g);

// Frame conditions: lower points see more on the S side, less on the C side.
bool s_frame_condition(const DsSpace& space, const Multirelation& r);
bool c_frame_condition(const DsSpace& space, const Multirelation& g);

// The canonical tight neighborhood family of a point: the meet of the
// constraint families imposed by the upsets whose operator image contains
// the point (full family when no constraint applies).
Family tight_s_neighborhood(const DsSpace& space, const Multirelation& r,
                            int x);
Family tight_c_neighborhood(const DsSpace& space, const Multirelation& g,
                            int x);

struct SMonotonicReport {
  bool closes_duals = false;     // m_r sends upsets to upsets
  bool neighborhoods_tight = false;  // r(x) is the meet of its L_U constraints
  bool ok() const { return closes_duals && neighborhoods_tight; }
};
SMonotonicReport s_monotonic_report(const DsSpace& space,
                                    const Multirelation& r);

struct CMonotonicReport {
  bool closes_duals = false;
  bool neighborhoods_tight = false;
  bool ok() const { return closes_duals && neighborhoods_tight; }
};
CMonotonicReport c_monotonic_report(const DsSpace& space,
                                    const Multirelation& g);

// The three equivalent characterizations of tight S-side neighborhoods,
// each evaluated literally; they must agree whenever the precondition
// (m_r preserves upsets) holds. The pullback condition needs the dual of
// the upset algebra, so it is only evaluated while that algebra fits the
// ground-set bound.
struct EquivalentConditions {
  bool precondition = false;
  bool meet_of_constraints = false;     // r(x) = intersection of L_U
  bool reflects_dual_relation = false;  // membership pulled back along H_X
  bool complement_formula = false;  // m_r on co-opens is a union, r(x) upward
  bool pullback_evaluated = false;
};
EquivalentConditions equivalent_conditions(const DsSpace& space,
                                           const Multirelation& r);

// r(x) is an upset of the opens ordered by inclusion.
bool relation_components_upward(const DsSpace& space, const Multirelation& r);

// Iterated relations; transitivity and weak density are inclusions
// between a relation and its square.
Multirelation r_squared(const DsSpace& space, const Multirelation& r);
Multirelation g_squared(const DsSpace& space, const Multirelation& g);
bool multirel_within(const Multirelation& sub, const Multirelation& super);

// Normality: every neighborhood contains a point whose principal downset
// is itself a neighborhood.
bool is_normal_space(const DsSpace& space, const Multirelation& r);

// Point relation of a normal S-side relation and back.
std::vector<Bits> s_from_r(const DsSpace& space, const Multirelation& r);
Multirelation r_from_s(const DsSpace& space, const std::vector<Bits>& s);
Bits m_s(const DsSpace& space, const std::vector<Bits>& s, Bits upset);

}  // namespace mds
