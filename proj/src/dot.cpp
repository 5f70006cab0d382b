#include "mds/dot.hpp"

#include "mds/relations.hpp"

namespace mds {
namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string order_graph(const std::string& name, const Poset& order,
                        const std::vector<std::string>& labels) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (int i = 0; i < order.size(); ++i)
    out += "  " + quoted(labels[i]) + ";\n";
  for (auto [lo, hi] : order.covers())
    out += "  " + quoted(labels[lo]) + " -> " + quoted(labels[hi]) + ";\n";
  return out + "}\n";
}

std::vector<std::string> point_labels(int n) {
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back("P" + std::to_string(p));
  return labels;
}

std::string set_label(Bits mask, const std::vector<std::string>& names) {
  std::string out = "{";
  for_each_member(mask, [&](int p) { out += " " + names[p]; });
  return out + " }";
}

std::string bipartite_relation(const DsSpace& space, const Multirelation& rel,
                               const std::vector<std::string>& names) {
  std::string out = "digraph relation {\n  rankdir=LR;\n";
  for (int p = 0; p < space.size(); ++p) out += "  " + quoted(names[p]) + ";\n";
  const Family& opens = space.opens();
  for (size_t z = 0; z < opens.size(); ++z)
    out += "  \"Z" + std::to_string(z) + "\" [shape=box,label=" +
           quoted(set_label(opens[z], names)) + "];\n";
  for (int p = 0; p < space.size(); ++p)
    for (Bits z : rel.at[p])
      out += "  " + quoted(names[p]) + " -> \"Z" +
             std::to_string(family_index(opens, z)) + "\";\n";
  return out + "}\n";
}

}  // namespace

std::string dot_hasse(const AlgebraDocument& doc) {
  return order_graph("hasse", doc.alg.order(), doc.names);
}

std::string dot_dual(const AlgebraDocument& doc) {
  AlgebraDual dual = AlgebraDual::build(doc.alg);
  return order_graph("dual", dual.space().order(),
                     point_labels(dual.point_count()));
}

std::string dot_space(const SpaceDocument& doc) {
  return order_graph("space", doc.space.order(), doc.point_names);
}

std::string dot_relation(const AlgebraDocument& doc) {
  if (!doc.op) throw Error("relation export requires an operator");
  AlgebraDual dual = AlgebraDual::build(doc.alg);
  Multirelation rel = relation_from_algebra_S(dual, *doc.op);
  return bipartite_relation(dual.space(), rel,
                            point_labels(dual.point_count()));
}

std::string dot_relation_document(const RelationDocument& doc) {
  if (doc.side != 'S')
    throw Error("relation export draws open-side relation documents");
  return bipartite_relation(doc.space, doc.rel, doc.point_names);
}

}  // namespace mds
