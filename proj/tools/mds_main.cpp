#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mds/dot.hpp"
#include "mds/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mds::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_text(mds::Bits mask, const std::vector<std::string>& names) {
  std::string out = "{";
  mds::for_each_member(mask, [&](int i) { out += " " + names[i]; });
  return out + " }";
}

int emit_report(const mds::Report& report, const std::string& format,
                bool timing, long long elapsed_ms) {
  std::cout << (format == "json" ? mds::render_json(report, timing, elapsed_ms)
                                 : mds::render_text(report, timing, elapsed_ms));
  return report.all_pass() ? 0 : 1;
}

int run_verify(const std::vector<std::string>& paths,
               const std::string& suite, const std::string& format,
               bool timing) {
  unsigned suites = mds::suite_from_name(suite);
  auto start = std::chrono::steady_clock::now();
  mds::Report report;
  for (const auto& path : paths) {
    mds::Document doc = mds::parse_document(read_file(path));
    report.instances.push_back(mds::check_document(path, doc, suites));
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit_report(report, format, timing, elapsed);
}

int run_fuzz(std::uint64_t seed, int count, int max_size,
             const std::string& suite, const std::string& format,
             bool timing) {
  unsigned suites = mds::suite_from_name(suite);
  auto start = std::chrono::steady_clock::now();
  mds::Report report = mds::fuzz_report(seed, count, max_size, suites);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return emit_report(report, format, timing, elapsed);
}

int run_export_dot(const std::string& path, const std::string& what) {
  mds::Document doc = mds::parse_document(read_file(path));
  std::string out;
  if (what == "hasse") {
    if (auto* a = std::get_if<mds::AlgebraDocument>(&doc))
      out = mds::dot_hasse(*a);
    else
      throw mds::ParseError("hasse export requires an algebra document");
  } else if (what == "dual") {
    if (auto* a = std::get_if<mds::AlgebraDocument>(&doc))
      out = mds::dot_dual(*a);
    else if (auto* s = std::get_if<mds::SpaceDocument>(&doc))
      out = mds::dot_space(*s);
    else
      out = mds::dot_space(mds::SpaceDocument{
          std::get<mds::RelationDocument>(doc).point_names,
          std::get<mds::RelationDocument>(doc).space});
  } else {  // relation
    if (auto* a = std::get_if<mds::AlgebraDocument>(&doc))
      out = mds::dot_relation(*a);
    else if (auto* r = std::get_if<mds::RelationDocument>(&doc))
      out = mds::dot_relation_document(*r);
    else
      throw mds::ParseError("relation export needs an operator or relation");
  }
  std::cout << out;
  return 0;
}

int run_dualize(const std::string& path) {
  mds::Document doc = mds::parse_document(read_file(path));
  auto* a = std::get_if<mds::AlgebraDocument>(&doc);
  if (!a) throw mds::ParseError("dualize requires an algebra document");
  mds::AlgebraDual dual = mds::AlgebraDual::build(a->alg);
  mds::SpaceDocument space;
  for (int p = 0; p < dual.point_count(); ++p)
    space.point_names.push_back("P" + std::to_string(p));
  space.space = dual.space();
  std::cout << mds::serialize_space_text(space);
  for (int p = 0; p < dual.point_count(); ++p)
    std::cout << "# P" << p << " = "
              << set_text(dual.point_filter(p), a->names) << "\n";
  return 0;
}

int run_analyze(const std::string& path) {
  mds::Document doc = mds::parse_document(read_file(path));
  auto* a = std::get_if<mds::AlgebraDocument>(&doc);
  if (!a) throw mds::ParseError("analyze requires an algebra document");
  const mds::MeetSemilattice& alg = a->alg;
  std::cout << "elements " << alg.size() << "\n";
  std::cout << "top " << a->names[alg.top()] << "\n";
  std::cout << "bottom " << a->names[alg.bottom()] << "\n";
  auto gap = alg.distributivity_witness();
  if (gap)
    std::cout << "distributive no (no split above " << a->names[(*gap)[0]]
              << ", " << a->names[(*gap)[1]] << " reaching "
              << a->names[(*gap)[2]] << ")\n";
  else
    std::cout << "distributive yes\n";
  mds::Family irr = alg.irreducible_filters();
  for (mds::Bits f : alg.filters()) {
    std::cout << "filter " << set_text(f, a->names);
    if (f == mds::full_set(alg.size())) std::cout << " improper";
    if (mds::family_has(irr, f)) std::cout << " irreducible";
    std::cout << "\n";
  }
  for (mds::Bits i : alg.order_ideals(true))
    std::cout << "ideal " << set_text(i, a->names) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dual-space workbench for distributive meet-semilattices"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  std::string suite = "all", format = "text";
  bool timing = false;
  std::uint64_t seed = 1;
  int count = 100, max_size = 6;

  CLI::App* verify = app.add_subcommand("verify", "check documents");
  verify->add_option("paths", paths, "document files")->required();
  verify->add_option("--suite", suite, "suite selector");
  verify->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timing", timing, "include elapsed time");

  CLI::App* fuzz = app.add_subcommand("fuzz", "check generated instances");
  fuzz->add_option("--seed", seed, "stream seed");
  fuzz->add_option("--count", count, "instances")->check(CLI::PositiveNumber);
  fuzz->add_option("--max-size", max_size, "largest carrier")
      ->check(CLI::Range(1, 16));
  fuzz->add_option("--suite", suite, "suite selector");
  fuzz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  fuzz->add_flag("--timing", timing, "include elapsed time");

  CLI::App* exp = app.add_subcommand("export-dot", "draw a document");
  std::string exp_path, exp_what;
  exp->add_option("path", exp_path, "document file")->required();
  exp->add_option("--what", exp_what, "hasse, dual or relation")
      ->required()
      ->check(CLI::IsMember({"hasse", "dual", "relation"}));

  CLI::App* dualize = app.add_subcommand("dualize", "print the dual space");
  std::string dual_path;
  dualize->add_option("path", dual_path, "algebra file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "print algebra anatomy");
  std::string ana_path;
  analyze->add_option("path", ana_path, "algebra file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(paths, suite, format, timing);
    if (fuzz->parsed())
      return run_fuzz(seed, count, max_size, suite, format, timing);
    if (exp->parsed()) return run_export_dot(exp_path, exp_what);
    if (dualize->parsed()) return run_dualize(dual_path);
    if (analyze->parsed()) return run_analyze(ana_path);
  } catch (const mds::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
