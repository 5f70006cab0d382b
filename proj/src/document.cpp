#include "mds/document.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace mds {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == '{' || c == '}') {
      if (!cur.empty()) out.push_back(cur), cur.clear();
      out.push_back(std::string(1, c));
    } else if (std::isspace((unsigned char)c)) {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

bool valid_name(const std::string& s) {
  return !s.empty() && s != "{" && s != "}" && s != "=" && s != "<=";
}

std::vector<std::string> read_names(const std::vector<std::string>& toks,
                                    const char* what) {
  std::vector<std::string> names(toks.begin() + 1, toks.end());
  for (const auto& n : names)
    if (!valid_name(n)) throw ParseError(std::string("invalid ") + what +
                                         " name '" + n + "'");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw ParseError(std::string("duplicate ") + what + " name '" +
                         names[i] + "'");
  if (names.size() > (size_t)kMaxGround)
    throw ParseError(std::string("too many ") + what + "s (max 16)");
  return names;
}

int lookup(const std::vector<std::string>& names, const std::string& name,
           const char* context) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return (int)i;
  throw ParseError("unknown name '" + name + "' in " + context + " line");
}

// Validates the laws on the fully specified table with named diagnostics,
// then defers to the core constructor.
AlgebraDocument finish_algebra(std::string kind,
                               std::vector<std::string> names, int top,
                               const std::vector<std::vector<int>>& table,
                               std::optional<std::vector<int>> op) {
  if (kind != "mds" && kind != "modal" && kind != "boolean")
    throw ParseError("unknown algebra kind '" + kind + "'");
  int n = (int)names.size();
  for (int i = 0; i < n; ++i)
    if (table[i][i] != i)
      throw ParseError("meet of " + names[i] + " and " + names[i] +
                       " must be " + names[i]);
  for (int i = 0; i < n; ++i) {
    if (table[i][top] != i || table[top][i] != i)
      throw ParseError("meet of " + names[i] + " and top " + names[top] +
                       " must be " + names[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (table[i][j] != table[j][i])
        throw ParseError("conflicting meets for " + names[i] + " and " +
                         names[j] + ": " + names[table[i][j]] + " vs " +
                         names[table[j][i]]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw ParseError("meet not associative on " + names[i] + ", " +
                           names[j] + ", " + names[k]);

  AlgebraDocument doc;
  doc.kind = std::move(kind);
  doc.names = std::move(names);
  doc.top = top;
  try {
    doc.alg = MeetSemilattice::from_table(n, top, table);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid meet table: ") + e.what());
  }
  if (op) {
    if ((int)op->size() != n)
      throw ParseError("operator table has wrong size");
    const Poset& ord = doc.alg.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (ord.leq(a, b) && !ord.leq((*op)[a], (*op)[b]))
          throw ParseError("operator not monotone: " + doc.names[a] +
                           " <= " + doc.names[b] + " but op values " +
                           doc.names[(*op)[a]] + ", " + doc.names[(*op)[b]] +
                           " are not ordered");
    doc.op = std::move(op);
  }
  if (doc.kind == "modal") {
    if (!doc.op) throw ParseError("modal algebra requires op lines");
    const auto& m = *doc.op;
    if (m[top] != top)
      throw ParseError("modal operator must fix the top element");
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (m[doc.alg.meet(a, b)] != doc.alg.meet(m[a], m[b]))
          throw ParseError("modal operator does not preserve the meet of " +
                           doc.names[a] + " and " + doc.names[b]);
  }
  if (doc.kind == "boolean") boolean_view(doc);  // structural validation
  return doc;
}

// Reads one brace-delimited set of point names starting at toks[pos]=='{'
// and returns the mask, advancing pos past the closing brace.
Bits read_set(const std::vector<std::string>& toks, size_t& pos,
              const std::vector<std::string>& point_names,
              const char* context) {
  if (pos >= toks.size() || toks[pos] != "{")
    throw ParseError(std::string("expected '{' in ") + context + " line");
  ++pos;
  Bits mask = 0;
  while (pos < toks.size() && toks[pos] != "}") {
    if (toks[pos] == "{")
      throw ParseError(std::string("nested '{' in ") + context + " line");
    mask |= bit(lookup(point_names, toks[pos], context));
    ++pos;
  }
  if (pos >= toks.size())
    throw ParseError(std::string("missing '}' in ") + context + " line");
  ++pos;
  return mask;
}

std::string set_text(Bits mask, const std::vector<std::string>& names) {
  std::string out = "{";
  for_each_member(mask, [&](int p) { out += " " + names[p]; });
  out += " }";
  return out;
}

// Shared by space and relation parsers: consumes points/basis/order lines.
struct SpaceLines {
  std::vector<std::string> point_names;
  Family basis;
  bool saw_points = false, saw_basis = false;
};

void apply_space_line(SpaceLines& s, const std::vector<std::string>& toks) {
  if (toks[0] == "points") {
    if (s.saw_points) throw ParseError("duplicate points line");
    s.point_names = read_names(toks, "point");
    s.saw_points = true;
  } else if (toks[0] == "basis") {
    if (!s.saw_points) throw ParseError("basis line before points line");
    if (s.saw_basis) throw ParseError("duplicate basis line");
    size_t pos = 1;
    while (pos < toks.size())
      s.basis.push_back(read_set(toks, pos, s.point_names, "basis"));
    s.saw_basis = true;
  } else {
    throw ParseError("unrecognized line '" + toks[0] + "'");
  }
}

DsSpace build_space(const SpaceLines& s) {
  if (!s.saw_points) throw ParseError("missing points line");
  if (!s.saw_basis) throw ParseError("missing basis line");
  try {
    return DsSpace::from_basis((int)s.point_names.size(), s.basis);
  } catch (const Error& e) {
    throw ParseError(std::string("invalid space: ") + e.what());
  }
}

void check_order_line(const DsSpace& space,
                      const std::vector<std::string>& point_names,
                      const std::vector<std::string>& toks) {
  if (toks.size() != 4 || toks[2] != "<=")
    throw ParseError("order line must read 'order p <= q'");
  int p = lookup(point_names, toks[1], "order");
  int q = lookup(point_names, toks[3], "order");
  if (!space.order().leq(p, q))
    throw ParseError("declared order " + point_names[p] + " <= " +
                     point_names[q] + " contradicts the basis");
}

std::string require_kind(const std::vector<std::vector<std::string>>& lines) {
  if (lines.empty()) throw ParseError("empty document");
  if (lines[0][0] != "kind" || lines[0].size() != 2)
    throw ParseError("document must start with a kind line");
  return lines[0][1];
}

}  // namespace

int AlgebraDocument::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return (int)i;
  return -1;
}

AlgebraDocument parse_algebra_text(const std::string& text) {
  auto lines = token_lines(text);
  std::string kind = "mds";
  std::vector<std::string> names;
  int top = -1;
  bool saw_elements = false, saw_top = false;
  std::vector<std::vector<int>> table;
  std::optional<std::vector<int>> op;

  for (size_t li = 0; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    const std::string& head = toks[0];
    if (head == "kind") {
      if (li != 0) throw ParseError("kind line must come first");
      if (toks.size() != 2) throw ParseError("kind line must name one kind");
      kind = toks[1];
    } else if (head == "elements") {
      if (saw_elements) throw ParseError("duplicate elements line");
      names = read_names(toks, "element");
      if (names.empty()) throw ParseError("elements line is empty");
      saw_elements = true;
      int n = (int)names.size();
      table.assign(n, std::vector<int>(n, -1));
    } else if (head == "top") {
      if (!saw_elements) throw ParseError("top line before elements line");
      if (saw_top) throw ParseError("duplicate top line");
      if (toks.size() != 2) throw ParseError("top line must name one element");
      top = lookup(names, toks[1], "top");
      saw_top = true;
    } else if (head == "meet") {
      if (!saw_elements) throw ParseError("meet line before elements line");
      if (toks.size() != 5 || toks[3] != "=")
        throw ParseError("meet line must read 'meet a b = c'");
      int a = lookup(names, toks[1], "meet");
      int b = lookup(names, toks[2], "meet");
      int c = lookup(names, toks[4], "meet");
      if (table[a][b] != -1 && table[a][b] != c)
        throw ParseError("conflicting meets for " + names[std::min(a, b)] +
                         " and " + names[std::max(a, b)] + ": " +
                         names[table[a][b]] + " vs " + names[c]);
      table[a][b] = table[b][a] = c;
    } else if (head == "op") {
      if (!saw_elements) throw ParseError("op line before elements line");
      if (toks.size() != 4 || toks[2] != "=")
        throw ParseError("op line must read 'op a = b'");
      if (!op) op.emplace(names.size(), -1);
      int a = lookup(names, toks[1], "op");
      int b = lookup(names, toks[3], "op");
      if ((*op)[a] != -1)
        throw ParseError("duplicate operator line for " + names[a]);
      (*op)[a] = b;
    } else {
      throw ParseError("unrecognized line '" + head + "'");
    }
  }
  if (!saw_elements) throw ParseError("missing elements line");
  if (!saw_top) throw ParseError("missing top line");

  int n = (int)names.size();
  for (int i = 0; i < n; ++i) {
    if (table[i][i] == -1) table[i][i] = i;
    if (table[i][top] == -1) table[i][top] = table[top][i] = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (table[i][j] == -1)
        throw ParseError("meet of " + names[i] + " and " + names[j] +
                         " not specified");
  if (op)
    for (int a = 0; a < n; ++a)
      if ((*op)[a] == -1)
        throw ParseError("operator missing for element " + names[a]);
  return finish_algebra(kind, names, top, table, op);
}

AlgebraDocument parse_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("JSON document must be an object");
  std::string kind = "mds";
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("kind must be a string");
    kind = j["kind"].get<std::string>();
  }
  if (!j.contains("elements") || !j["elements"].is_array())
    throw ParseError("missing elements array");
  std::vector<std::string> names;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("element names must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::string> toks = {"elements"};
  toks.insert(toks.end(), names.begin(), names.end());
  names = read_names(toks, "element");
  if (names.empty()) throw ParseError("elements array is empty");
  int n = (int)names.size();

  if (!j.contains("top") || !j["top"].is_string())
    throw ParseError("missing top name");
  int top = lookup(names, j["top"].get<std::string>(), "top");

  if (!j.contains("meet") || !j["meet"].is_array() ||
      (int)j["meet"].size() != n)
    throw ParseError("meet must be an array of " + std::to_string(n) +
                     " rows");
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    const auto& row = j["meet"][i];
    if (!row.is_array() || (int)row.size() != n)
      throw ParseError("meet row for " + names[i] + " must list " +
                       std::to_string(n) + " names");
    for (int k = 0; k < n; ++k) {
      if (!row[k].is_string())
        throw ParseError("meet entries must be element names");
      table[i][k] = lookup(names, row[k].get<std::string>(), "meet");
    }
  }
  std::optional<std::vector<int>> op;
  if (j.contains("op")) {
    if (!j["op"].is_object()) throw ParseError("op must be an object");
    op.emplace(n, -1);
    for (const auto& [key, val] : j["op"].items()) {
      int a = lookup(names, key, "op");
      if (!val.is_string()) throw ParseError("op values must be names");
      (*op)[a] = lookup(names, val.get<std::string>(), "op");
    }
    for (int a = 0; a < n; ++a)
      if ((*op)[a] == -1)
        throw ParseError("operator missing for element " + names[a]);
  }
  return finish_algebra(kind, names, top, table, op);
}

SpaceDocument parse_space_text(const std::string& text) {
  auto lines = token_lines(text);
  if (require_kind(lines) != "space")
    throw ParseError("expected kind space");
  SpaceLines s;
  std::vector<std::vector<std::string>> order_lines;
  for (size_t li = 1; li < lines.size(); ++li) {
    if (lines[li][0] == "order")
      order_lines.push_back(lines[li]);
    else
      apply_space_line(s, lines[li]);
  }
  SpaceDocument doc;
  doc.point_names = s.point_names;
  doc.space = build_space(s);
  for (const auto& toks : order_lines)
    check_order_line(doc.space, doc.point_names, toks);
  return doc;
}

RelationDocument parse_relation_text(const std::string& text) {
  auto lines = token_lines(text);
  std::string kind = require_kind(lines);
  if (kind != "srelation" && kind != "crelation")
    throw ParseError("expected kind srelation or crelation");
  char side = kind == "srelation" ? 'S' : 'C';

  SpaceLines s;
  std::vector<std::vector<std::string>> rel_lines, order_lines;
  for (size_t li = 1; li < lines.size(); ++li) {
    if (lines[li][0] == "rel")
      rel_lines.push_back(lines[li]);
    else if (lines[li][0] == "order")
      order_lines.push_back(lines[li]);
    else
      apply_space_line(s, lines[li]);
  }
  RelationDocument doc;
  doc.side = side;
  doc.point_names = s.point_names;
  doc.space = build_space(s);
  for (const auto& toks : order_lines)
    check_order_line(doc.space, doc.point_names, toks);

  int n = doc.space.size();
  std::vector<Family> at(n);
  std::vector<bool> seen(n, false);
  const Family& pool = side == 'S' ? doc.space.opens() : doc.space.closeds();
  const char* pool_name = side == 'S' ? "saturated" : "closed";
  for (const auto& toks : rel_lines) {
    if (toks.size() < 4 || toks[2] != "=" || toks[3] != "{")
      throw ParseError("rel line must read 'rel p = { ... }'");
    int p = lookup(doc.point_names, toks[1], "rel");
    if (seen[p])
      throw ParseError("duplicate relation line for " + doc.point_names[p]);
    seen[p] = true;
    if (toks.back() != "}")
      throw ParseError("rel line must end with '}'");
    size_t pos = 4;
    Family fam;
    while (pos + 1 < toks.size())
      fam.push_back(read_set(toks, pos, doc.point_names, "rel"));
    for (Bits comp : fam)
      if (!family_has(pool, comp))
        throw ParseError("component " + set_text(comp, doc.point_names) +
                         " of rel " + doc.point_names[p] + " is not a " +
                         pool_name + " set");
    at[p] = family_from(fam);
  }
  for (int p = 0; p < n; ++p)
    if (!seen[p])
      throw ParseError("relation missing for point " + doc.point_names[p]);
  doc.rel = Multirelation{std::move(at)};
  return doc;
}

Document parse_document(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_algebra_json(text);
  auto lines = token_lines(text);
  if (lines.empty()) throw ParseError("empty document");
  if (lines[0][0] == "kind" && lines[0].size() == 2) {
    const std::string& kind = lines[0][1];
    if (kind == "space") return parse_space_text(text);
    if (kind == "srelation" || kind == "crelation")
      return parse_relation_text(text);
  }
  return parse_algebra_text(text);
}

std::string serialize_algebra_text(const AlgebraDocument& doc) {
  std::string out = "kind " + doc.kind + "\nelements";
  for (const auto& n : doc.names) out += " " + n;
  out += "\ntop " + doc.names[doc.top] + "\n";
  int n = (int)doc.names.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == doc.top || j == doc.top) continue;
      out += "meet " + doc.names[i] + " " + doc.names[j] + " = " +
             doc.names[doc.alg.meet(i, j)] + "\n";
    }
  if (doc.op)
    for (int a = 0; a < n; ++a)
      out += "op " + doc.names[a] + " = " + doc.names[(*doc.op)[a]] + "\n";
  return out;
}

std::string serialize_algebra_json(const AlgebraDocument& doc) {
  nlohmann::json j;
  j["kind"] = doc.kind;
  j["elements"] = doc.names;
  j["top"] = doc.names[doc.top];
  int n = (int)doc.names.size();
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < n; ++k) row.push_back(doc.names[doc.alg.meet(i, k)]);
    rows.push_back(row);
  }
  j["meet"] = rows;
  if (doc.op) {
    auto obj = nlohmann::json::object();
    for (int a = 0; a < n; ++a) obj[doc.names[a]] = doc.names[(*doc.op)[a]];
    j["op"] = obj;
  }
  return j.dump(2) + "\n";
}

namespace {
std::string space_section(const DsSpace& space,
                          const std::vector<std::string>& names) {
  std::string out = "points";
  for (const auto& n : names) out += " " + n;
  out += "\nbasis";
  for (Bits b : space.basis()) out += " " + set_text(b, names);
  return out + "\n";
}
}  // namespace

std::string serialize_space_text(const SpaceDocument& doc) {
  return "kind space\n" + space_section(doc.space, doc.point_names);
}

std::string serialize_relation_text(const RelationDocument& doc) {
  std::string out = doc.side == 'S' ? "kind srelation\n" : "kind crelation\n";
  out += space_section(doc.space, doc.point_names);
  for (int p = 0; p < doc.space.size(); ++p) {
    out += "rel " + doc.point_names[p] + " = {";
    for (Bits comp : doc.rel.at[p]) out += " " + set_text(comp, doc.point_names);
    out += " }\n";
  }
  return out;
}

BooleanView boolean_view(const AlgebraDocument& doc) {
  if (!doc.op) throw ParseError("boolean document requires op lines");
  const MeetSemilattice& alg = doc.alg;
  int n = alg.size();
  int bot = alg.bottom();
  std::vector<int> atoms;
  for (int e = 0; e < n; ++e)
    if (e != bot && alg.order().down_of(e) == (bit(e) | bit(bot)))
      atoms.push_back(e);
  int k = (int)atoms.size();
  if (k > 4 || n != (1 << k))
    throw ParseError("boolean carrier is not a powerset of its atoms");
  std::vector<int> elem_to_mask(n, 0);
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < k; ++i)
      if (alg.order().leq(atoms[i], e)) elem_to_mask[e] |= (int)bit(i);
  std::vector<int> mask_to_elem(1 << k, -1);
  for (int e = 0; e < n; ++e) {
    if (mask_to_elem[elem_to_mask[e]] != -1)
      throw ParseError("boolean carrier is not a powerset of its atoms");
    mask_to_elem[elem_to_mask[e]] = e;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (elem_to_mask[alg.meet(a, b)] != (elem_to_mask[a] & elem_to_mask[b]))
        throw ParseError("meet of " + doc.names[a] + " and " + doc.names[b] +
                         " does not match atom intersection");
  std::vector<int> box(1 << k, 0);
  for (int e = 0; e < n; ++e)
    box[elem_to_mask[e]] = elem_to_mask[(*doc.op)[e]];
  try {
    return BooleanView{make_boolean(k, box), elem_to_mask};
  } catch (const Error& e) {
    throw ParseError(std::string("invalid boolean operator: ") + e.what());
  }
}

}  // namespace mds
