#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mds/document.hpp"

namespace mds {

// One verdict line of a verification report: a stable check id, pass/fail,
// and a witness or counterexample description.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct InstanceReport {
  std::string instance;
  std::vector<CheckResult> checks;
  std::string counterexample;  // shrunken failing document, when fuzzing
  bool all_pass() const;
};

struct Report {
  std::vector<InstanceReport> instances;
  bool all_pass() const;
  int pass_count() const;
  int fail_count() const;
};

// Suites select groups of check ids; names representation, duality,
// axioms, canonicity, boolean, all.
enum Suite : unsigned {
  kSuiteRepresentation = 1u,
  kSuiteDuality = 2u,
  kSuiteAxioms = 4u,
  kSuiteCanonicity = 8u,
  kSuiteBoolean = 16u,
  kSuiteAll = 31u,
};
unsigned suite_from_name(const std::string& name);  // throws ParseError

InstanceReport check_algebra(const std::string& instance,
                             const AlgebraDocument& doc, unsigned suites);
InstanceReport check_space(const std::string& instance,
                           const SpaceDocument& doc, unsigned suites);
InstanceReport check_relation(const std::string& instance,
                              const RelationDocument& doc, unsigned suites);
InstanceReport check_document(const std::string& instance,
                              const Document& doc, unsigned suites);

// Deterministic fuzz stream: `count` generated algebra+operator instances,
// each run through the selected suites; failures are shrunk by
// element-deletion closure and embedded as documents.
Report fuzz_report(uint64_t seed, int count, int max_size, unsigned suites);

// Renderings are byte-stable; elapsed time is included only on request.
std::string render_text(const Report& r, bool timing, long long elapsed_ms);
std::string render_json(const Report& r, bool timing, long long elapsed_ms);

// Smallest sub-document (element-deletion closure) still failing the
// selected suites; returns the input when no deletion keeps the failure.
AlgebraDocument shrink_algebra(const AlgebraDocument& doc, unsigned suites);

}  // namespace mds
