#include "mds/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "mds/axioms.hpp"
#include "mds/canonical_extension.hpp"
#include "mds/generate.hpp"
#include "mds/relations.hpp"

namespace mds {

bool InstanceReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool Report::all_pass() const {
  for (const auto& i : instances)
    if (!i.all_pass()) return false;
  return true;
}

int Report::pass_count() const {
  int n = 0;
  for (const auto& i : instances)
    for (const auto& c : i.checks) n += c.pass ? 1 : 0;
  return n;
}

int Report::fail_count() const {
  int n = 0;
  for (const auto& i : instances)
    for (const auto& c : i.checks) n += c.pass ? 0 : 1;
  return n;
}

unsigned suite_from_name(const std::string& name) {
  if (name == "representation") return kSuiteRepresentation;
  if (name == "duality") return kSuiteDuality;
  if (name == "axioms") return kSuiteAxioms;
  if (name == "canonicity") return kSuiteCanonicity;
  if (name == "boolean") return kSuiteBoolean;
  if (name == "all") return kSuiteAll;
  throw ParseError("unknown suite '" + name + "'");
}

namespace {

std::string point_label(int p) { return "P" + std::to_string(p); }

bool basis_property_literal(const DsSpace& space) {
  for (Bits b1 : space.basis())
    for (Bits b2 : space.basis()) {
      Bits inter = b1 & b2;
      bool bad = false;
      for_each_member(inter, [&](int x) {
        bool found = false;
        for (Bits b3 : space.basis())
          if (has(b3, x) && is_subset(b3, inter)) found = true;
        if (!found) bad = true;
      });
      if (bad) return false;
    }
  return true;
}

void representation_checks(std::vector<CheckResult>& out,
                           const AlgebraDocument& doc,
                           const AlgebraDual& dual) {
  const MeetSemilattice& alg = doc.alg;
  const DsSpace& X = dual.space();
  int n = alg.size();

  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (dual.beta(a) == dual.beta(b)) {
          ok = false;
          detail = "collides on " + doc.names[a] + " and " + doc.names[b];
        }
    out.push_back({"rep.beta_injective", ok, detail});
  }
  {
    bool ok = dual.beta(alg.top()) == X.universe();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (dual.beta(alg.meet(a, b)) != (dual.beta(a) & dual.beta(b)))
          ok = false;
    out.push_back({"rep.beta_meet_top", ok, ""});
  }
  out.push_back({"rep.beta_onto_upsets",
                 family_from(dual.beta_table()) == X.closeds(), ""});
  out.push_back({"rep.canonical_dense", is_dense_completion(dual), ""});
  out.push_back({"rep.canonical_compact", is_compact_completion(dual), ""});
  Family closed_elems = closed_completion_elements(dual);
  Family open_elems = open_completion_elements(dual);
  {
    Family nonempty;
    for (Bits c : closed_elems)
      if (c != 0) nonempty.push_back(c);
    bool ok = closed_elems == X.closeds() &&
              family_from(nonempty) == X.closeds_nonempty();
    out.push_back({"rep.closed_elements", ok, ""});
  }
  out.push_back({"rep.open_elements", open_elems == X.closeds(), ""});
  {
    Family ups;
    for (int p = 0; p < X.size(); ++p) ups.push_back(X.order().up_of(p));
    out.push_back({"rep.join_primes",
                   completely_join_primes(X.closeds()) == family_from(ups),
                   ""});
    Family codowns;
    for (int p = 0; p < X.size(); ++p)
      codowns.push_back(X.universe() & ~X.order().down_of(p));
    out.push_back({"rep.meet_primes",
                   completely_meet_primes(X.closeds()) == family_from(codowns),
                   ""});
  }
  if (!doc.op) return;
  const std::vector<int>& op = *doc.op;
  Multirelation R = relation_from_algebra_S(dual, op);
  Multirelation G = relation_from_algebra_C(dual, op);
  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < n; ++a)
      if (m_r(X, R, dual.beta(a)) != dual.beta(op[a])) {
        ok = false;
        detail = "fails at " + doc.names[a];
        break;
      }
    out.push_back({"rep.operator_commutes", ok, detail});
  }
  {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (m_g(X, G, dual.beta(a)) != dual.beta(op[a])) ok = false;
    out.push_back({"rep.operator_via_closed_relation", ok, ""});
  }
  {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      Bits want = dual.beta(op[a]);
      if (m_sigma(dual, op, dual.beta(a)) != want ||
          m_pi(dual, op, dual.beta(a)) != want)
        ok = false;
    }
    out.push_back({"rep.extension_agrees", ok, ""});
  }
  {
    bool bounds = true, families = true, via = true;
    for (Bits u : X.closeds()) {
      Bits sig = m_sigma(dual, op, u), pi = m_pi(dual, op, u);
      if (!is_subset(sig, pi)) bounds = false;
      if (m_r(X, R, u) != pi || m_g(X, G, u) != sig) via = false;
    }
    for (Bits u : family_union(closed_elems, open_elems))
      if (m_sigma(dual, op, u) != m_pi(dual, op, u)) families = false;
    out.push_back({"rep.extension_bounds", bounds, ""});
    out.push_back({"rep.extension_on_families", families, ""});
    out.push_back({"rep.extension_via_relations", via, ""});
  }
}

void duality_checks(std::vector<CheckResult>& out, const AlgebraDocument& doc,
                    const AlgebraDual& dual) {
  const MeetSemilattice& alg = doc.alg;
  const DsSpace& X = dual.space();

  out.push_back({"dual.space_sober", X.is_sober(), ""});
  out.push_back({"dual.basis_property", basis_property_literal(X), ""});
  {
    bool ok = true;
    for (int p = 0; p < X.size(); ++p)
      for (int q = 0; q < X.size(); ++q)
        if (X.order().leq(p, q) !=
            is_subset(dual.point_filter(p), dual.point_filter(q)))
          ok = false;
    out.push_back({"dual.specialization_matches_inclusion", ok, ""});
  }
  {
    Family filters = alg.filters();
    Family image;
    bool ok = true;
    for (Bits f : filters) {
      Bits c = dual.filter_to_closed(f);
      image.push_back(c);
      if (dual.closed_to_filter(c) != f) ok = false;
    }
    if (family_from(image) != X.closeds()) ok = false;
    for (Bits f : filters)
      for (Bits g : filters)
        if (is_subset(f, g) != is_subset(dual.filter_to_closed(g),
                                         dual.filter_to_closed(f)))
          ok = false;
    for (Bits c : X.closeds())
      if (dual.filter_to_closed(dual.closed_to_filter(c)) != c) ok = false;
    out.push_back({"dual.filters_closed_antitone", ok, ""});
  }
  {
    Family ideals = alg.order_ideals(false);
    Family image;
    bool ok = true;
    for (Bits i : ideals) {
      Bits z = dual.alpha(i);
      image.push_back(z);
      if (dual.ideal_of_saturated(z) != i) ok = false;
    }
    if (family_from(image) != X.opens()) ok = false;
    for (Bits i : ideals)
      for (Bits j : ideals)
        if (is_subset(i, j) != is_subset(dual.alpha(j), dual.alpha(i)))
          ok = false;
    for (Bits z : X.opens())
      if (dual.alpha(dual.ideal_of_saturated(z)) != z) ok = false;
    out.push_back({"dual.ideals_saturated_antitone", ok, ""});
  }
  {
    bool ok = true;
    for (int a = 0; a < alg.size(); ++a)
      if (dual.alpha(alg.order().down_of(a)) !=
          (X.universe() & ~dual.beta(a)))
        ok = false;
    out.push_back({"dual.alpha_principal", ok, ""});
  }
  {
    bool geometry = true, separation = true;
    for (Bits f : alg.proper_filters())
      for (Bits i : alg.order_ideals(true)) {
        bool disjoint = (f & i) == 0;
        bool meets = (dual.filter_to_closed(f) & dual.alpha(i)) != 0;
        if (disjoint != meets) geometry = false;
        if (disjoint) {
          auto w = alg.separation_witness(f, i);
          if (!w || !alg.irreducibility_report(*w).irreducible ||
              !is_subset(f, *w) || (*w & i) != 0)
            separation = false;
        }
      }
    out.push_back({"dual.filter_ideal_geometry", geometry, ""});
    out.push_back({"dual.separation", separation, ""});
  }
  {
    bool ok = true;
    for (Bits f : alg.filters()) {
      auto r = alg.irreducibility_report(f);
      if (r.proper &&
          (r.irreducible != r.residual_bound ||
           r.irreducible != r.complement_ideal))
        ok = false;
    }
    out.push_back({"dual.irreducibility_equivalents", ok, ""});
  }
  if (!doc.op) return;
  Multirelation R = relation_from_algebra_S(dual, *doc.op);
  Multirelation G = relation_from_algebra_C(dual, *doc.op);
  out.push_back({"dual.frame_laws",
                 s_frame_condition(X, R) && c_frame_condition(X, G), ""});
  SMonotonicReport sr = s_monotonic_report(X, R);
  out.push_back({"dual.relation_condition1", sr.closes_duals, ""});
  out.push_back({"dual.relation_condition2", sr.neighborhoods_tight, ""});
  CMonotonicReport cr = c_monotonic_report(X, G);
  out.push_back({"dual.relation_condition3", cr.closes_duals, ""});
  out.push_back({"dual.relation_condition4", cr.neighborhoods_tight, ""});
  {
    bool ok = true;
    std::string detail;
    for (int p = 0; p < X.size(); ++p) {
      if (psi(X, phi(X, R.at[p])) != R.at[p] ||
          phi(X, psi(X, G.at[p])) != G.at[p] || phi(X, R.at[p]) != G.at[p] ||
          psi(X, G.at[p]) != R.at[p]) {
        ok = false;
        detail = "closure laws fail at " + point_label(p);
        break;
      }
    }
    out.push_back({"dual.galois_connection", ok, detail});
  }
  {
    bool ok = g_from_r(X, R) == G && r_from_g(X, G) == R;
    for (Bits u : X.closeds())
      if (m_r(X, R, u) != m_g(X, G, u)) ok = false;
    out.push_back({"dual.interdefinable", ok, ""});
  }
  {
    EquivalentConditions eq = equivalent_conditions(X, R);
    bool ok = eq.precondition && eq.meet_of_constraints &&
              eq.complement_formula && eq.pullback_evaluated &&
              eq.reflects_dual_relation;
    out.push_back({"dual.equivalent_conditions", ok, ""});
  }
}

void axiom_checks(std::vector<CheckResult>& out, const AlgebraDocument& doc,
                  const AlgebraDual& dual) {
  if (!doc.op) return;
  const std::vector<int>& op = *doc.op;
  const DsSpace& X = dual.space();
  AxiomReport ax = axiom_report(dual, op);
  auto tri = [&](const char* id, const TriView& v) {
    out.push_back({id, v.consistent(),
                   v.algebraic ? "axiom holds" : "axiom fails"});
  };
  tri("ax.top_fixed", ax.top_fixed);
  tri("ax.bottom_fixed", ax.bottom_fixed);
  tri("ax.decreasing", ax.decreasing);
  tri("ax.increasing", ax.increasing);
  tri("ax.four_box", ax.four_box);
  tri("ax.four_diamond", ax.four_diamond);
  out.push_back({"ax.r_squared_bridge", r_squared_ideal_bridge(dual, op), ""});
  out.push_back({"ax.g_squared_bridge", g_squared_filter_bridge(dual, op), ""});
  out.push_back({"ax.image_identities",
                 image_ideal_identity(dual, op) &&
                     image_filter_identity(dual, op),
                 ""});
  bool modal = is_modal_operator(doc.alg, op);
  Multirelation R = relation_from_algebra_S(dual, op);
  {
    bool ok = is_normal_space(X, R) == modal &&
              modal_preserves_filters(doc.alg, op) == modal;
    out.push_back({"ax.modal_iff_normal", ok,
                   modal ? "operator is modal" : "operator is not modal"});
  }
  if (modal) {
    std::vector<Bits> s1 = point_relation_via_pi(dual, op);
    std::vector<Bits> s2 = point_relation_direct(dual, op);
    std::vector<Bits> s3 = point_relation_via_r(dual, op);
    out.push_back({"ax.point_relations_agree", s1 == s2 && s2 == s3, ""});
    std::vector<Bits> s = s_from_r(X, R);
    bool ok = r_from_s(X, s) == R;
    for (Bits u : X.closeds())
      if (m_s(X, s, u) != m_r(X, R, u)) ok = false;
    out.push_back({"ax.relation_roundtrip", ok, ""});
  } else {
    out.push_back(
        {"ax.point_relations_agree", true, "operator not modal; vacuous"});
    out.push_back(
        {"ax.relation_roundtrip", true, "operator not modal; vacuous"});
  }
}

void canonicity_checks(std::vector<CheckResult>& out,
                       const AlgebraDocument& doc, const AlgebraDual& dual) {
  if (!doc.op) return;
  CanonicityReport c = canonicity_report(dual, *doc.op);
  out.push_back({"can.sigma_box", !c.box_applicable || c.box_holds,
                 c.box_applicable ? "premise holds; inequality preserved"
                                  : "premise absent; vacuous"});
  out.push_back({"can.pi_diamond", !c.diamond_applicable || c.diamond_holds,
                 c.diamond_applicable ? "premise holds; inequality preserved"
                                      : "premise absent; vacuous"});
}

void boolean_checks(std::vector<CheckResult>& out,
                    const AlgebraDocument& doc) {
  if (doc.kind != "boolean") return;
  try {
    BooleanView view = boolean_view(doc);
    out.push_back({"bool.structure", true, ""});
    BooleanDualityReport br = boolean_duality_report(view.boolean);
    out.push_back({"bool.atom_points", br.points_are_atom_filters, ""});
    out.push_back({"bool.self_dual_family", br.opens_equal_closeds, ""});
    out.push_back(
        {"bool.diamond_closed_matches_box", br.diamond_c_equals_box_s, ""});
    out.push_back(
        {"bool.box_closed_matches_diamond", br.box_c_equals_diamond_s, ""});
    out.push_back({"bool.filter_ideal_swap",
                   br.filter_closures_match_ideal_kernels, ""});
  } catch (const Error& e) {
    out.push_back({"bool.structure", false, e.what()});
  }
}

}  // namespace

InstanceReport check_algebra(const std::string& instance,
                             const AlgebraDocument& doc, unsigned suites) {
  InstanceReport rep;
  rep.instance = instance;
  auto gap = doc.alg.distributivity_witness();
  if (gap) {
    rep.checks.push_back(
        {"rep.distributive", false,
         "no split above " + doc.names[(*gap)[0]] + ", " +
             doc.names[(*gap)[1]] + " reaching " + doc.names[(*gap)[2]]});
    return rep;
  }
  if (suites & kSuiteRepresentation)
    rep.checks.push_back({"rep.distributive", true, "no counterexample"});
  AlgebraDual dual = AlgebraDual::build(doc.alg);
  if (suites & kSuiteRepresentation)
    representation_checks(rep.checks, doc, dual);
  if (suites & kSuiteDuality) duality_checks(rep.checks, doc, dual);
  if (suites & kSuiteAxioms) axiom_checks(rep.checks, doc, dual);
  if (suites & kSuiteCanonicity) canonicity_checks(rep.checks, doc, dual);
  if (suites & kSuiteBoolean) boolean_checks(rep.checks, doc);
  return rep;
}

InstanceReport check_space(const std::string& instance,
                           const SpaceDocument& doc, unsigned suites) {
  InstanceReport rep;
  rep.instance = instance;
  if (!(suites & kSuiteDuality)) return rep;
  const DsSpace& X = doc.space;
  rep.checks.push_back({"space.sober", X.is_sober(), ""});
  rep.checks.push_back(
      {"space.basis_property", basis_property_literal(X), ""});
  {
    Family complements;
    for (Bits z : X.opens()) complements.push_back(X.universe() & ~z);
    rep.checks.push_back({"space.complement_duality",
                          family_from(complements) == X.closeds(), ""});
  }
  return rep;
}

InstanceReport check_relation(const std::string& instance,
                              const RelationDocument& doc, unsigned suites) {
  InstanceReport rep;
  rep.instance = instance;
  if (!(suites & kSuiteDuality)) return rep;
  const DsSpace& X = doc.space;
  const Family& pool = doc.side == 'S' ? X.opens() : X.closeds();
  rep.checks.push_back(
      {"mon.components", components_within(doc.rel, pool), ""});
  if (doc.side == 'S') {
    rep.checks.push_back(
        {"mon.frame", s_frame_condition(X, doc.rel), ""});
    SMonotonicReport sr = s_monotonic_report(X, doc.rel);
    rep.checks.push_back({"mon.condition1", sr.closes_duals,
                          sr.closes_duals
                              ? ""
                              : "an upset has a non-upset operator image"});
    std::string tight_detail;
    if (!sr.neighborhoods_tight)
      for (int p = 0; p < X.size(); ++p)
        if (tight_s_neighborhood(X, doc.rel, p) != doc.rel.at[p]) {
          tight_detail =
              "neighborhoods not tight at point " + doc.point_names[p];
          break;
        }
    rep.checks.push_back(
        {"mon.condition2", sr.neighborhoods_tight, tight_detail});
    EquivalentConditions eq = equivalent_conditions(X, doc.rel);
    bool consistent = true;
    if (eq.precondition) {
      consistent = eq.meet_of_constraints == eq.complement_formula &&
                   (!eq.pullback_evaluated ||
                    eq.reflects_dual_relation == eq.meet_of_constraints);
    }
    rep.checks.push_back({"mon.equivalent_conditions", consistent,
                          eq.precondition ? "" : "precondition fails"});
  } else {
    rep.checks.push_back(
        {"mon.frame", c_frame_condition(X, doc.rel), ""});
    CMonotonicReport cr = c_monotonic_report(X, doc.rel);
    rep.checks.push_back({"mon.condition1", cr.closes_duals,
                          cr.closes_duals
                              ? ""
                              : "an upset has a non-upset operator image"});
    std::string tight_detail;
    if (!cr.neighborhoods_tight)
      for (int p = 0; p < X.size(); ++p)
        if (tight_c_neighborhood(X, doc.rel, p) != doc.rel.at[p]) {
          tight_detail =
              "neighborhoods not tight at point " + doc.point_names[p];
          break;
        }
    rep.checks.push_back(
        {"mon.condition2", cr.neighborhoods_tight, tight_detail});
  }
  return rep;
}

InstanceReport check_document(const std::string& instance,
                              const Document& doc, unsigned suites) {
  return std::visit(
      [&](const auto& d) -> InstanceReport {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, AlgebraDocument>)
          return check_algebra(instance, d, suites);
        else if constexpr (std::is_same_v<T, SpaceDocument>)
          return check_space(instance, d, suites);
        else
          return check_relation(instance, d, suites);
      },
      doc);
}

namespace {

AlgebraDocument document_of(const MeetSemilattice& alg,
                            const std::vector<int>& op) {
  AlgebraDocument doc;
  doc.kind = "mds";
  for (int i = 0; i < alg.size(); ++i)
    doc.names.push_back("x" + std::to_string(i));
  doc.top = alg.top();
  doc.alg = alg;
  doc.op = op;
  return doc;
}

// keep-mask closed under meet and the operator.
Bits deletion_closure(const AlgebraDocument& doc, Bits keep) {
  bool grew = true;
  while (grew) {
    grew = false;
    Bits next = keep;
    for_each_member(keep, [&](int i) {
      for_each_member(keep, [&](int j) { next |= bit(doc.alg.meet(i, j)); });
      if (doc.op) next |= bit((*doc.op)[i]);
    });
    if (next != keep) {
      keep = next;
      grew = true;
    }
  }
  return keep;
}

AlgebraDocument subdocument(const AlgebraDocument& doc, Bits keep) {
  std::vector<int> old_of;
  std::vector<int> new_of(doc.alg.size(), -1);
  for_each_member(keep, [&](int i) {
    new_of[i] = (int)old_of.size();
    old_of.push_back(i);
  });
  int n = (int)old_of.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = new_of[doc.alg.meet(old_of[i], old_of[j])];
  AlgebraDocument out;
  out.kind = doc.kind;
  for (int i = 0; i < n; ++i) out.names.push_back(doc.names[old_of[i]]);
  out.top = new_of[doc.top];
  out.alg = MeetSemilattice::from_table(n, out.top, table);
  if (doc.op) {
    std::vector<int> op(n);
    for (int i = 0; i < n; ++i) op[i] = new_of[(*doc.op)[old_of[i]]];
    out.op = op;
  }
  return out;
}

}  // namespace

AlgebraDocument shrink_algebra(const AlgebraDocument& doc, unsigned suites) {
  AlgebraDocument cur = doc;
  bool progress = true;
  while (progress) {
    progress = false;
    int n = cur.alg.size();
    for (int e = 0; e < n; ++e) {
      if (e == cur.top) continue;
      Bits keep = deletion_closure(cur, full_set(n) & ~bit(e));
      if (keep == full_set(n)) continue;
      AlgebraDocument cand = subdocument(cur, keep);
      if (!check_algebra("shrink", cand, suites).all_pass()) {
        cur = std::move(cand);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

Report fuzz_report(uint64_t seed, int count, int max_size, unsigned suites) {
  Report out;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    MeetSemilattice alg = random_distributive(rng, max_size);
    std::vector<int> op = random_monotone_op(rng, alg);
    AlgebraDocument doc = document_of(alg, op);
    char id[32];
    std::snprintf(id, sizeof id, "fuzz/%06d", i);
    InstanceReport ir = check_algebra(id, doc, suites);
    if (!ir.all_pass())
      ir.counterexample = serialize_algebra_text(shrink_algebra(doc, suites));
    out.instances.push_back(std::move(ir));
  }
  return out;
}

namespace {
Report sorted_by_instance(const Report& r) {
  Report out = r;
  std::stable_sort(out.instances.begin(), out.instances.end(),
                   [](const InstanceReport& a, const InstanceReport& b) {
                     return a.instance < b.instance;
                   });
  return out;
}
}  // namespace

std::string render_text(const Report& r, bool timing, long long elapsed_ms) {
  Report sorted = sorted_by_instance(r);
  std::string out;
  for (const auto& inst : sorted.instances) {
    out += "instance " + inst.instance + "\n";
    if (inst.checks.empty()) out += "  (no checks selected)\n";
    for (const auto& c : inst.checks) {
      out += c.pass ? "  [PASS] " : "  [FAIL] ";
      out += c.id;
      if (!c.detail.empty()) out += " :: " + c.detail;
      out += "\n";
    }
    if (!inst.counterexample.empty()) {
      out += "counterexample for " + inst.instance + "\n";
      std::string line;
      for (char ch : inst.counterexample) {
        if (ch == '\n') {
          out += "  | " + line + "\n";
          line.clear();
        } else {
          line.push_back(ch);
        }
      }
    }
  }
  out += "summary instances=" + std::to_string(sorted.instances.size()) +
         " checks=" + std::to_string(sorted.pass_count() + sorted.fail_count()) +
         " pass=" + std::to_string(sorted.pass_count()) +
         " fail=" + std::to_string(sorted.fail_count()) + "\n";
  if (timing) out += "elapsed_ms " + std::to_string(elapsed_ms) + "\n";
  out += sorted.all_pass() ? "result PASS\n" : "result FAIL\n";
  return out;
}

std::string render_json(const Report& r, bool timing, long long elapsed_ms) {
  Report sorted = sorted_by_instance(r);
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const auto& inst : sorted.instances) {
    nlohmann::json ji;
    ji["id"] = inst.instance;
    auto checks = nlohmann::json::array();
    for (const auto& c : inst.checks)
      checks.push_back(
          {{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    ji["checks"] = checks;
    if (!inst.counterexample.empty())
      ji["counterexample"] = inst.counterexample;
    arr.push_back(ji);
  }
  j["instances"] = arr;
  j["summary"] = {{"instances", sorted.instances.size()},
                  {"pass", sorted.pass_count()},
                  {"fail", sorted.fail_count()}};
  if (timing) j["elapsed_ms"] = elapsed_ms;
  j["result"] = sorted.all_pass() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

}  // namespace mds
