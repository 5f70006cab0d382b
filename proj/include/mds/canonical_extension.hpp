#pragma once

#include <vector>

#include "mds/bits.hpp"
#include "mds/dual_space.hpp"

namespace mds {

// The completion under study is the lattice of all upsets of the dual
// space, into which the algebra embeds via beta. Elements of the
// completion are upset masks.

// Infima of filters: one closed set per filter, the empty set arising
// from the improper filter.
Family closed_completion_elements(const AlgebraDual& dual);

// Suprema of order ideals (the empty ideal contributes the empty union).
Family open_completion_elements(const AlgebraDual& dual);

// Every upset is the union of the closed elements below it and the
// intersection of the open elements above it.
bool is_dense_completion(const AlgebraDual& dual);

// Whenever inf(D) <= sup(U) in the completion for nonempty dually
// directed D and nonempty directed U in the algebra, some d in D lies
// below some u in U.
bool is_compact_completion(const AlgebraDual& dual);

// Completely join/meet prime members of a finite subset lattice ordered
// by inclusion (joins are unions, meets intersections). Literal scan over
// all subfamilies; |lattice| must stay small.
Family completely_join_primes(const Family& lattice);
Family completely_meet_primes(const Family& lattice);

// sigma- and pi-extensions of a monotone operator, evaluated at an
// arbitrary upset of the dual space.
Bits m_sigma(const AlgebraDual& dual, const std::vector<int>& op, Bits upset);
Bits m_pi(const AlgebraDual& dual, const std::vector<int>& op, Bits upset);

}  // namespace mds
