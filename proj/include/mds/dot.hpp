#pragma once

#include <string>

#include "mds/document.hpp"

namespace mds {

// Hasse diagram of the natural order: one node per element, one edge per
// covering pair, drawn bottom-up. Node order follows the element order.
std::string dot_hasse(const AlgebraDocument& doc);

// Dual space of the algebra: point nodes with the covering pairs of the
// specialization order.
std::string dot_dual(const AlgebraDocument& doc);

// Specialization order of a space document.
std::string dot_space(const SpaceDocument& doc);

// Bipartite view of the open-side relation of the operator: one node per
// point, one box node per saturated set, an edge for every neighborhood.
std::string dot_relation(const AlgebraDocument& doc);

// Same bipartite view for a relation document.
std::string dot_relation_document(const RelationDocument& doc);

}  // namespace mds
