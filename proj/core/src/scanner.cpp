#include "equisym/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "equisym/numth.hpp"
#include "json.hpp"

namespace equisym {

ArithmeticMax arithmetic_max(long long genus, int dim) {
  if (genus < 2) fail("arithmetic_max needs genus >= 2");
  if (dim > 6) throw CapabilityError("arithmetic_max is configured for dim <= 6");
  const long long hurwitz = 84 * (genus - 1);
  for (long long n = hurwitz; n >= 1; --n) {
    auto sigs = enumerate_signatures(genus, n, dim);
    if (!sigs.empty()) return {n, std::move(sigs)};
  }
  return {0, {}};
}

namespace {

// Groups of order n probed during realizability, cheapest first.
std::vector<Group> order_catalog(long long n, const std::vector<Group>& extra) {
  std::vector<Group> pool;
  if (n >= 1 && n <= 0xFFFF) pool.push_back(make_cyclic(int(n)));
  if (n >= 4 && n % 2 == 0 && n <= 0xFFFF) pool.push_back(make_dihedral(int(n / 2)));
  for (const auto& g : extra)
    if (g.order == n) pool.push_back(g);
  return pool;
}

}  // namespace

RealizableResult realizable_max(long long genus, int dim, const std::vector<Group>& extra_catalog,
                                long long arithmetic_bound, std::uint64_t probe_limit) {
  RealizableResult result;
  for (long long n = arithmetic_bound; n >= 1; --n) {
    const auto sigs = enumerate_signatures(genus, n, dim);
    if (sigs.empty()) continue;
    for (const auto& g : order_catalog(n, extra_catalog)) {
      for (const auto& sig : sigs) {
        if (vector_search_size(g, sig) > probe_limit) {
          result.probes_skipped = true;
          continue;
        }
        const auto vec = first_vector(g, sig);
        if (!vec) continue;
        RealizableWitness w;
        w.group_spec = g.spec_string();
        w.signature = sig;
        w.vector = *vec;
        w.vector_str = GeneratingVector{&g, sig, *vec}.str();
        result.order = n;
        result.witness = std::move(w);
        return result;
      }
    }
  }
  return result;
}

std::vector<std::string> hypothesis_tags(long long genus) {
  std::vector<std::string> tags;
  if (is_prime(genus - 1)) tags.push_back("g-1 prime");
  if (genus % 2 == 0 && is_prime(genus / 2)) tags.push_back("g/2 prime");
  if (is_power_of_two(genus - 1)) tags.push_back("g-1 power of 2");
  if (genus % 4 == 3) tags.push_back("g = 3 mod 4");
  if (genus % 6 == 4) tags.push_back("g = 4 mod 6");
  return tags;
}

ScanReport scan(int dim, long long genus_lo, long long genus_hi,
                const std::vector<Group>& extra_catalog, int threads) {
  if (genus_lo < 2 || genus_hi < genus_lo) fail("scan needs 2 <= genus_lo <= genus_hi");
  ScanReport report;
  report.dim = dim;
  report.genus_lo = genus_lo;
  report.genus_hi = genus_hi;
  report.rows.resize(std::size_t(genus_hi - genus_lo + 1));

  auto compute_row = [&](std::size_t i) {
    const long long g = genus_lo + (long long)i;
    ScanRow row;
    row.genus = g;
    row.dim = dim;
    auto am = arithmetic_max(g, dim);
    row.arithmetic_max = am.order;
    row.arithmetic_witnesses = std::move(am.witnesses);
    auto rm = realizable_max(g, dim, extra_catalog, am.order);
    row.realizable_max = rm.order;
    row.witness = std::move(rm.witness);
    row.probes_skipped = rm.probes_skipped;
    row.hypothesis_tags = hypothesis_tags(g);
    report.rows[i] = std::move(row);
  };

  if (threads <= 1 || report.rows.size() < 2) {
    for (std::size_t i = 0; i < report.rows.size(); ++i) compute_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= report.rows.size()) return;
        compute_row(i);
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = std::min<std::size_t>(threads, report.rows.size());
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return report;
}

LinearFormResult linear_form_analysis(const std::vector<std::pair<long long, long long>>& rows) {
  LinearFormResult result;
  if (rows.size() < 2) fail("linear_form_analysis needs at least two rows");
  auto sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  // Slope determined by the first two rows; a form fitting all rows must
  // pass through both.
  const auto [g1, n1] = sorted[0];
  const auto [g2, n2] = sorted[1];
  if (g1 == g2) {
    if (n1 != n2) {
      result.conflict = {sorted[0], sorted[1]};
      return result;
    }
    fail("linear_form_analysis: duplicate genus rows");
  }
  if ((n2 - n1) % (g2 - g1) != 0) {
    result.conflict = {sorted[0], sorted[1]};
    return result;
  }
  const long long a = (n2 - n1) / (g2 - g1);
  const long long b = n1 - a * g1;
  for (std::size_t i = 2; i < sorted.size(); ++i) {
    const auto [gi, ni] = sorted[i];
    if (a * gi + b == ni) continue;
    // Prefer a directly incompatible pair (non-integral slope) as evidence.
    for (const auto& other : sorted) {
      if (other.first == gi) continue;
      if ((ni - other.second) % (gi - other.first) != 0) {
        result.conflict = {other, sorted[i]};
        return result;
      }
    }
    result.conflict = {sorted[0], sorted[i]};
    return result;
  }
  result.form = {a, b};
  return result;
}

namespace {

nlohmann::json row_to_json(const ScanRow& row) {
  nlohmann::json j;
  j["genus"] = row.genus;
  j["dim"] = row.dim;
  j["arithmetic_max"] = row.arithmetic_max;
  auto sigs = nlohmann::json::array();
  for (const auto& s : row.arithmetic_witnesses) sigs.push_back(s.str());
  j["witness_sigs"] = sigs;
  if (row.realizable_max) j["realizable_max"] = *row.realizable_max;
  else j["realizable_max"] = nullptr;
  if (row.witness) {
    j["witness"] = {{"group", row.witness->group_spec},
                    {"signature", row.witness->signature.str()},
                    {"vector", row.witness->vector_str}};
  } else {
    j["witness"] = nullptr;
  }
  j["probes_skipped"] = row.probes_skipped;
  j["hypothesis_tags"] = row.hypothesis_tags;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string scan_report_to_json(const ScanReport& report) {
  nlohmann::json j;
  j["dim"] = report.dim;
  j["genus_range"] = {report.genus_lo, report.genus_hi};
  auto rows = nlohmann::json::array();
  for (const auto& r : report.rows) rows.push_back(row_to_json(r));
  j["rows"] = rows;
  return j.dump(2);
}

std::string scan_report_to_csv(const ScanReport& report) {
  std::string out =
      "genus,dim,arithmetic_max,witness_sigs,realizable_max,witness_group,witness_sig,"
      "witness_vector,hypothesis_tags,probes_skipped\n";
  for (const auto& r : report.rows) {
    std::string sigs;
    for (std::size_t i = 0; i < r.arithmetic_witnesses.size(); ++i) {
      if (i) sigs += ";";
      sigs += r.arithmetic_witnesses[i].str();
    }
    std::string tags;
    for (std::size_t i = 0; i < r.hypothesis_tags.size(); ++i) {
      if (i) tags += ";";
      tags += r.hypothesis_tags[i];
    }
    out += std::to_string(r.genus) + "," + std::to_string(r.dim) + "," +
           std::to_string(r.arithmetic_max) + "," + csv_escape(sigs) + "," +
           (r.realizable_max ? std::to_string(*r.realizable_max) : "") + "," +
           (r.witness ? r.witness->group_spec : "") + "," +
           (r.witness ? csv_escape(r.witness->signature.str()) : "") + "," +
           (r.witness ? csv_escape(r.witness->vector_str) : "") + "," + csv_escape(tags) + "," +
           (r.probes_skipped ? "yes" : "no") + "\n";
  }
  return out;
}

}  // namespace equisym
