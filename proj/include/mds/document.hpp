#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mds/boolean.hpp"
#include "mds/dual_space.hpp"
#include "mds/relations.hpp"
#include "mds/semilattice.hpp"

namespace mds {

// Parsed algebra file: named elements, a meet table, an optional operator.
// kind is one of "mds", "modal", "boolean"; stricter kinds add validation
// (modal operators must preserve top and binary meets, boolean carriers
// must be powersets of atoms).
struct AlgebraDocument {
  std::string kind = "mds";
  std::vector<std::string> names;
  int top = -1;
  MeetSemilattice alg = MeetSemilattice::from_table(1, 0, {{0}});
  std::optional<std::vector<int>> op;

  int index_of(const std::string& name) const;  // -1 when unknown
};

struct SpaceDocument {
  std::vector<std::string> point_names;
  DsSpace space = DsSpace::from_basis(0, {});
};

// Self-contained relation file: the space it lives on plus one family of
// subsets per point. side 'S' constrains components to saturated (open)
// sets, side 'C' to closed ones.
struct RelationDocument {
  char side = 'S';
  std::vector<std::string> point_names;
  DsSpace space = DsSpace::from_basis(0, {});
  Multirelation rel;
};

using Document = std::variant<AlgebraDocument, SpaceDocument, RelationDocument>;

// Text parsers; all throw ParseError with a named diagnostic.
AlgebraDocument parse_algebra_text(const std::string& text);
AlgebraDocument parse_algebra_json(const std::string& text);
SpaceDocument parse_space_text(const std::string& text);
RelationDocument parse_relation_text(const std::string& text);

// Dispatch on the kind line (or a leading '{' for JSON).
Document parse_document(const std::string& text);

// Canonical serializations; parse(serialize(d)) reproduces d.
std::string serialize_algebra_text(const AlgebraDocument& doc);
std::string serialize_algebra_json(const AlgebraDocument& doc);
std::string serialize_space_text(const SpaceDocument& doc);
std::string serialize_relation_text(const RelationDocument& doc);

// View of a boolean-kind algebra as a powerset with atom masks; throws
// ParseError when the carrier is not a powerset or the operator is absent.
struct BooleanView {
  BooleanMds boolean;
  std::vector<int> element_to_mask;  // algebra index -> atom mask
};
BooleanView boolean_view(const AlgebraDocument& doc);

}  // namespace mds
