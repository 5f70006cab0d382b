#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/canonical_extension.hpp"
#include "mds/dual_space.hpp"
#include "mds/relations.hpp"

namespace mds {

// One inequality read three ways: on the algebra, through the open-side
// relation, and through the closed-side relation. The readings must agree.
struct TriView {
  bool algebraic = false;
  bool via_r = false;
  bool via_g = false;
  bool consistent() const { return algebraic == via_r && via_r == via_g; }
};

TriView axiom_top_fixed(const AlgebraDual& dual, const std::vector<int>& op,
                        const Multirelation& r, const Multirelation& g);
TriView axiom_bottom_fixed(const AlgebraDual& dual, const std::vector<int>& op,
                           const Multirelation& r, const Multirelation& g);
TriView axiom_decreasing(const AlgebraDual& dual, const std::vector<int>& op,
                         const Multirelation& r, const Multirelation& g);
TriView axiom_increasing(const AlgebraDual& dual, const std::vector<int>& op,
                         const Multirelation& r, const Multirelation& g);
// ma <= mma versus transitivity/weak density of the relations.
TriView axiom_four_box(const AlgebraDual& dual, const std::vector<int>& op,
                       const Multirelation& r, const Multirelation& g);
TriView axiom_four_diamond(const AlgebraDual& dual, const std::vector<int>& op,
                           const Multirelation& r, const Multirelation& g);

struct AxiomReport {
  TriView top_fixed, bottom_fixed, decreasing, increasing;
  TriView four_box, four_diamond;
  bool all_consistent() const {
    return top_fixed.consistent() && bottom_fixed.consistent() &&
           decreasing.consistent() && increasing.consistent() &&
           four_box.consistent() && four_diamond.consistent();
  }
};
AxiomReport axiom_report(const AlgebraDual& dual, const std::vector<int>& op);

// Squared-relation bridges: membership of alpha(I) (resp. a closed filter
// image) in the squared relation mirrors a purely algebraic inclusion.
bool r_squared_ideal_bridge(const AlgebraDual& dual,
                            const std::vector<int>& op);
bool g_squared_filter_bridge(const AlgebraDual& dual,
                             const std::vector<int>& op);

// Image identities used by the bridge proofs.
bool image_ideal_identity(const AlgebraDual& dual, const std::vector<int>& op);
bool image_filter_identity(const AlgebraDual& dual,
                           const std::vector<int>& op);

// Inequalities between iterates survive the sigma/pi extension, each
// checked over every upset when the algebra satisfies the premise.
struct CanonicityReport {
  bool box_applicable = false;
  bool box_holds = false;
  bool diamond_applicable = false;
  bool diamond_holds = false;
};
CanonicityReport canonicity_report(const AlgebraDual& dual,
                                   const std::vector<int>& op);

bool is_modal_operator(const MeetSemilattice& a, const std::vector<int>& op);
bool modal_preserves_filters(const MeetSemilattice& a,
                             const std::vector<int>& op);

// Point relation of a box operator, three ways; all three must coincide
// for modal operators.
std::vector<Bits> point_relation_via_pi(const AlgebraDual& dual,
                                        const std::vector<int>& op);
std::vector<Bits> point_relation_direct(const AlgebraDual& dual,
                                        const std::vector<int>& op);
std::vector<Bits> point_relation_via_r(const AlgebraDual& dual,
                                       const std::vector<int>& op);

}  // namespace mds
