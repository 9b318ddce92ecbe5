#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equisym/genvec.hpp"
#include "equisym/signature.hpp"

namespace equisym {

// Largest group order admitted by Riemann-Hurwitz arithmetic alone for a
// dim-dimensional family at this genus, with all witnessing signatures.
// Bounded above by the Hurwitz order 84(g-1).
struct ArithmeticMax {
  long long order = 0;
  std::vector<Signature> witnesses;
};
ArithmeticMax arithmetic_max(long long genus, int dim);

struct RealizableWitness {
  std::string group_spec;
  Signature signature;
  PackedVec vector;
  std::string vector_str;
};

// Catalog used by realizability probes: C_N and D_{N/2} are always tried;
// user groups join the pool at their own order.
struct RealizableResult {
  std::optional<long long> order;
  std::optional<RealizableWitness> witness;
  bool probes_skipped = false;  // some (group, signature) search was over budget
};
RealizableResult realizable_max(long long genus, int dim, const std::vector<Group>& extra_catalog,
                                long long arithmetic_bound,
                                std::uint64_t probe_limit = 200'000'000);

struct ScanRow {
  long long genus = 0;
  int dim = 0;
  long long arithmetic_max = 0;
  std::vector<Signature> arithmetic_witnesses;
  std::optional<long long> realizable_max;
  std::optional<RealizableWitness> witness;
  bool probes_skipped = false;
  std::vector<std::string> hypothesis_tags;
};

struct ScanReport {
  int dim = 0;
  long long genus_lo = 0, genus_hi = 0;
  std::vector<ScanRow> rows;
};

ScanReport scan(int dim, long long genus_lo, long long genus_hi,
                const std::vector<Group>& extra_catalog, int threads = 1);

std::vector<std::string> hypothesis_tags(long long genus);

// The unique integer linear form N = a*g + b through all the given rows,
// or a certified refusal with two rows no single integer form can fit.
struct LinearFormResult {
  std::optional<std::pair<long long, long long>> form;  // (a, b)
  std::vector<std::pair<long long, long long>> conflict;  // two (genus, value) rows
};
LinearFormResult linear_form_analysis(const std::vector<std::pair<long long, long long>>& rows);

std::string scan_report_to_json(const ScanReport& report);
std::string scan_report_to_csv(const ScanReport& report);

}  // namespace equisym
