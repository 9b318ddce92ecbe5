#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "equisym/catalog.hpp"
#include "equisym/orbits.hpp"
#include "equisym/repr.hpp"
#include "equisym/scanner.hpp"
#include "verify.hpp"

using namespace equisym;

namespace {

struct GlobalOpts {
  std::string output = "text";
  int threads = int(std::thread::hardware_concurrency());
  std::vector<std::string> catalog_files;

  std::vector<Group> load_catalogs() const {
    std::vector<Group> groups;
    for (const auto& path : catalog_files)
      for (auto& g : load_catalog(path)) groups.push_back(std::move(g));
    return groups;
  }
};

// Splits on top-level commas, respecting <...> and {...}.
std::vector<std::string> split_descriptors(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '<' || c == '{') ++depth;
    if (c == '>' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<long long> parse_genus_list(const std::string& text) {
  std::vector<long long> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const long long lo = std::stoll(text.substr(0, dots));
    const long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) fail("empty genus range '" + text + "'");
    for (long long g = lo; g <= hi; ++g) out.push_back(g);
    return out;
  }
  for (const auto& tok : split_descriptors(text)) out.push_back(std::stoll(tok));
  return out;
}

int cmd_signatures(const GlobalOpts& opts, long long genus, long long order, int dim) {
  const auto sigs = enumerate_signatures(genus, order, dim);
  if (opts.output == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& s : sigs) arr.push_back(s.str());
    std::cout << nlohmann::json{{"genus", genus}, {"order", order}, {"dim", dim},
                                {"signatures", arr}}
                     .dump(2)
              << "\n";
  } else if (opts.output == "csv") {
    std::cout << "signature\n";
    for (const auto& s : sigs) std::cout << "\"" << s.str() << "\"\n";
  } else {
    std::cout << sigs.size() << " signature(s) with genus " << genus << ", order " << order
              << ", dim " << dim << "\n";
    for (const auto& s : sigs) std::cout << "  " << s.str() << "\n";
  }
  return 0;
}

int cmd_vectors(const GlobalOpts& opts, const std::string& group_spec, const std::string& sig_text,
                bool count_only) {
  const Group g = build_group(group_spec);
  const Signature sig = Signature::parse(sig_text);
  const auto result = enumerate_vectors(g, sig, opts.threads);
  if (opts.output == "json") {
    nlohmann::json j{{"group", group_spec},
                     {"signature", sig.str()},
                     {"rh_admissible", result.rh_admissible},
                     {"count", result.vectors.size()}};
    if (!count_only) {
      auto arr = nlohmann::json::array();
      for (const auto& p : result.vectors) arr.push_back(GeneratingVector{&g, sig, p}.str());
      j["vectors"] = arr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (opts.output == "csv") {
    std::cout << "vector\n";
    if (!count_only)
      for (const auto& p : result.vectors)
        std::cout << "\"" << GeneratingVector{&g, sig, p}.str() << "\"\n";
  } else {
    if (!result.rh_admissible)
      std::cout << "(" << sig.str() << ", " << group_spec
                << ") fails Riemann-Hurwitz: no actions exist\n";
    std::cout << result.vectors.size() << " generating vector(s)\n";
    if (!count_only)
      for (const auto& p : result.vectors)
        std::cout << "  " << GeneratingVector{&g, sig, p}.str() << "\n";
  }
  return 0;
}

int cmd_strata(const GlobalOpts& opts, const std::string& group_spec, const std::string& sig_text,
               const std::string& cache_dir) {
  const Group g = build_group(group_spec);
  const Signature sig = Signature::parse(sig_text);
  StratumReport report;
  if (!cache_dir.empty()) {
    if (auto cached = load_cached_report(cache_dir, g.spec_string(), sig)) {
      report = std::move(*cached);
    } else {
      report = compute_orbits(g, sig, opts.threads);
      store_cached_report(cache_dir, report);
    }
  } else {
    report = compute_orbits(g, sig, opts.threads);
  }
  if (opts.output == "json") {
    std::cout << report_to_json(report, g) << "\n";
  } else if (opts.output == "csv") {
    std::cout << "representative,size\n";
    for (const auto& o : report.orbits)
      std::cout << "\"" << GeneratingVector{&g, sig, o.representative}.str() << "\"," << o.size
                << "\n";
  } else {
    std::cout << "group " << group_spec << "  signature " << sig.str() << "\n"
              << "vectors " << report.total_vectors << "  orbits " << report.orbit_count()
              << "  (move-set v" << report.move_set_version << ")\n";
    for (std::size_t i = 0; i < report.orbits.size(); ++i)
      std::cout << "  orbit " << i + 1 << ": size " << report.orbits[i].size << "  rep "
                << GeneratingVector{&g, sig, report.orbits[i].representative}.str() << "\n";
  }
  return 0;
}

int cmd_jacobian(const GlobalOpts& opts, const std::string& group_spec,
                 const std::string& sig_text, const std::string& vec_text,
                 const std::string& subgroups, const std::string& pryms) {
  const Group g = build_group(group_spec);
  const Signature sig = Signature::parse(sig_text);
  const auto vec = GeneratingVector::parse(g, sig, vec_text);
  auto report = factor_dimensions(vec);

  std::string sub_list = subgroups;
  if (sub_list.empty())
    sub_list = g.kind == GroupKind::Dihedral ? "G,1,<r>,<s>,<sr>" : "G,1";
  for (const auto& desc : split_descriptors(sub_list))
    report.quotient_rows.push_back(
        quotient_decomposition(report, parse_subgroup(g, desc), desc));
  if (!pryms.empty()) {
    for (const auto& pair : split_descriptors(pryms)) {
      const auto colon = pair.find(':');
      if (colon == std::string::npos)
        fail("prym pair '" + pair + "' is not of the form H1:H2");
      const std::string d1 = pair.substr(0, colon), d2 = pair.substr(colon + 1);
      report.prym_rows.push_back(prym_decomposition(report, parse_subgroup(g, d1),
                                                    parse_subgroup(g, d2), d1, d2));
    }
  }

  if (opts.output == "json") {
    std::cout << report_to_json(report) << "\n";
  } else if (opts.output == "csv") {
    std::cout << "row,label,dim,mult\n";
    for (const auto& f : report.factors)
      std::cout << "factor," << f.irrep.label << "," << f.dim << "," << f.multiplicity << "\n";
    for (const auto& q : report.quotient_rows)
      std::cout << "quotient,\"" << q.subgroup << "\"," << q.dim << ",\n";
    for (const auto& p : report.prym_rows)
      std::cout << "prym,\"" << p.sub1 << "->" << p.sub2 << "\"," << p.dim << ",\n";
  } else {
    std::cout << "group " << group_spec << "  signature " << sig.str() << "  vector "
              << vec.str() << "\n"
              << "genus " << report.genus << "\n";
    std::cout << "factors:\n";
    for (const auto& f : report.factors)
      std::cout << "  " << f.irrep.label << "  dim " << f.dim << "  mult " << f.multiplicity
                << "\n";
    for (const auto& q : report.quotient_rows) {
      std::cout << "JS_" << q.subgroup << "  dim " << q.dim << "  exponents [";
      for (std::size_t i = 0; i < q.exponents.size(); ++i)
        std::cout << (i ? "," : "") << q.exponents[i];
      std::cout << "]\n";
    }
    for (const auto& p : report.prym_rows) {
      std::cout << "Prym(" << p.sub1 << " -> " << p.sub2 << ")  dim " << p.dim
                << "  exponents [";
      for (std::size_t i = 0; i < p.exponents.size(); ++i)
        std::cout << (i ? "," : "") << p.exponents[i];
      std::cout << "]\n";
    }
  }
  return 0;
}

int cmd_scan(const GlobalOpts& opts, int dim, const std::string& genus_range) {
  const auto genera = parse_genus_list(genus_range);
  if (genera.empty()) fail("empty genus range");
  const auto extra = opts.load_catalogs();
  const auto report = scan(dim, genera.front(), genera.back(), extra, opts.threads);
  if (opts.output == "json") {
    std::cout << scan_report_to_json(report) << "\n";
  } else if (opts.output == "csv") {
    std::cout << scan_report_to_csv(report);
  } else {
    for (const auto& row : report.rows) {
      std::cout << "g=" << row.genus << "  arithmetic " << row.arithmetic_max << " (";
      for (std::size_t i = 0; i < row.arithmetic_witnesses.size(); ++i)
        std::cout << (i ? " " : "") << row.arithmetic_witnesses[i].str();
      std::cout << ")  realizable ";
      if (row.realizable_max)
        std::cout << *row.realizable_max << " by " << row.witness->group_spec << " "
                  << row.witness->signature.str();
      else
        std::cout << "none" << (row.probes_skipped ? " (probes skipped)" : "");
      if (!row.hypothesis_tags.empty()) {
        std::cout << "  [";
        for (std::size_t i = 0; i < row.hypothesis_tags.size(); ++i)
          std::cout << (i ? "; " : "") << row.hypothesis_tags[i];
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const GlobalOpts& opts, const std::string& suite, const std::string& genus_list,
               const std::string& fixtures_path) {
  std::string fixtures_text = verify::embedded_fixtures();
  if (!fixtures_path.empty()) {
    std::ifstream in(fixtures_path);
    if (!in) fail("cannot open fixtures file: " + fixtures_path);
    std::stringstream ss;
    ss << in.rdbuf();
    fixtures_text = ss.str();
  }
  const auto fixtures = verify::load_fixtures(fixtures_text);
  std::vector<long long> genera;
  if (!genus_list.empty()) genera = parse_genus_list(genus_list);
  const auto results = verify::run_suite(suite, genera, fixtures, opts.threads);

  int failures = 0;
  if (opts.output == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      nlohmann::json j{{"suite", r.expectation.suite},
                       {"claim", r.expectation.claim},
                       {"tag", r.expectation.tag},
                       {"expected", r.expectation.expected},
                       {"actual", r.actual},
                       {"pass", r.pass}};
      if (r.expectation.genus != 0) j["genus"] = r.expectation.genus;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.expectation.suite << " "
                << r.expectation.claim;
      if (r.expectation.genus != 0) std::cout << " g=" << r.expectation.genus;
      std::cout << " (" << r.expectation.tag << ")";
      if (!r.pass) {
        std::cout << "  expected " << r.expectation.expected.dump() << ", got "
                  << r.actual.dump();
        if (r.expectation.claim.find("within_paper_bound") != std::string::npos)
          std::cout << "  ** move-set possibly incomplete **";
      }
      if (!r.expectation.note.empty()) std::cout << "  -- " << r.expectation.note;
      std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all " : "") << results.size() - failures << "/"
              << results.size() << " expectations passed\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of finite group actions on Riemann surfaces and the "
               "isogeny decomposition of their Jacobians"};
  app.require_subcommand(1);
  GlobalOpts opts;
  if (opts.threads < 1) opts.threads = 1;
  app.add_option("--output", opts.output, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opts.threads,
                 "Worker threads (results are identical for any value)")
      ->check(CLI::PositiveNumber);
  app.add_option("--catalog", opts.catalog_files, "External group catalog file (repeatable)");

  auto* sig_cmd = app.add_subcommand("signatures", "Enumerate admissible signatures");
  long long sig_genus = 0, sig_order = 0;
  int sig_dim = 0;
  sig_cmd->add_option("--genus", sig_genus)->required();
  sig_cmd->add_option("--order", sig_order)->required();
  sig_cmd->add_option("--dim", sig_dim)->required();

  auto* vec_cmd = app.add_subcommand("vectors", "Enumerate surface-kernel generating vectors");
  std::string vec_group, vec_sig;
  bool vec_count_only = false;
  vec_cmd->add_option("--group", vec_group)->required();
  vec_cmd->add_option("--signature", vec_sig)->required();
  vec_cmd->add_flag("--count-only", vec_count_only);

  auto* strata_cmd = app.add_subcommand("strata", "Orbit partition under moves and Aut(G)");
  std::string strata_group, strata_sig, strata_cache;
  strata_cmd->add_option("--group", strata_group)->required();
  strata_cmd->add_option("--signature", strata_sig)->required();
  strata_cmd->add_option("--cache", strata_cache, "Stratum cache directory");

  auto* jac_cmd = app.add_subcommand("jacobian", "Group algebra decomposition of the Jacobian");
  std::string jac_group, jac_sig, jac_vec, jac_subs, jac_pryms;
  jac_cmd->add_option("--group", jac_group)->required();
  jac_cmd->add_option("--signature", jac_sig)->required();
  jac_cmd->add_option("--vector", jac_vec)->required();
  jac_cmd->add_option("--subgroups", jac_subs, "Comma list of subgroup descriptors");
  jac_cmd->add_option("--pryms", jac_pryms, "Comma list of H1:H2 pairs");

  auto* scan_cmd = app.add_subcommand("scan", "Bound search over a genus range");
  int scan_dim = 0;
  std::string scan_range;
  scan_cmd->add_option("--dim", scan_dim)->required();
  scan_cmd->add_option("--genus", scan_range, "Range A..B")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite against fixtures");
  std::string verify_suite, verify_genus, verify_fixtures;
  verify_cmd->add_option("--suite", verify_suite)->required();
  verify_cmd->add_option("--genus", verify_genus, "Genus list or range (default: all fixtures)");
  verify_cmd->add_option("--fixtures", verify_fixtures, "Override the built-in fixtures file");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*sig_cmd) return cmd_signatures(opts, sig_genus, sig_order, sig_dim);
    if (*vec_cmd) return cmd_vectors(opts, vec_group, vec_sig, vec_count_only);
    if (*strata_cmd) return cmd_strata(opts, strata_group, strata_sig, strata_cache);
    if (*jac_cmd) return cmd_jacobian(opts, jac_group, jac_sig, jac_vec, jac_subs, jac_pryms);
    if (*scan_cmd) return cmd_scan(opts, scan_dim, scan_range);
    if (*verify_cmd) return cmd_verify(opts, verify_suite, verify_genus, verify_fixtures);
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
