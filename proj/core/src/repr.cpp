#include "equisym/repr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "equisym/catalog.hpp"
#include "equisym/numth.hpp"
#include "json.hpp"

namespace equisym {

namespace {

void need_builtin(const Group& g) {
  if (g.kind == GroupKind::External)
    throw CapabilityError("representation data is only provided for the built-in cyclic and "
                          "dihedral families, not for external group '" + g.name + "'");
}

}  // namespace

std::vector<RationalIrrep> rational_irreducibles(const Group& g) {
  need_builtin(g);
  std::vector<RationalIrrep> out;
  const int n = g.n_param;
  if (g.kind == GroupKind::Cyclic) {
    out.push_back({RationalIrrep::Family::Trivial, 0, "chi1", 1, 1, 1, 1});
    for (long long d : divisors(n)) {
      if (d == n) continue;
      RationalIrrep w;
      w.family = RationalIrrep::Family::CyclicChar;
      w.d = int(d);
      w.label = "W" + std::to_string(d);
      w.complex_degree = 1;
      w.schur_index = 1;
      w.galois_degree = int(euler_phi(n / d));
      w.multiplicity = 1;
      out.push_back(w);
    }
    return out;
  }
  // Dihedral.
  out.push_back({RationalIrrep::Family::Trivial, 0, "chi1", 1, 1, 1, 1});
  out.push_back({RationalIrrep::Family::DihedralSign, 0, "chi2", 1, 1, 1, 1});
  if (n % 2 == 0) {
    out.push_back({RationalIrrep::Family::DihedralChi3, 0, "chi3", 1, 1, 1, 1});
    out.push_back({RationalIrrep::Family::DihedralChi4, 0, "chi4", 1, 1, 1, 1});
  }
  for (long long d : divisors(n)) {
    const bool in_range = n % 2 == 0 ? (d < n / 2) : (d < n);
    if (!in_range) continue;
    RationalIrrep w;
    w.family = RationalIrrep::Family::DihedralPsi;
    w.d = int(d);
    w.label = "W" + std::to_string(d);
    w.complex_degree = 2;
    w.schur_index = 1;  // Schur index of every dihedral representation is 1
    w.galois_degree = int(euler_phi(n / d) / 2);
    w.multiplicity = 2;
    out.push_back(w);
  }
  return out;
}

namespace {

// Character value sign of the linear dihedral characters on element x:
// chi2 = -1 on reflections; chi3(r^k) = chi3(s r^k) = (-1)^k;
// chi4(r^k) = (-1)^k, chi4(s r^k) = (-1)^{k+1}.
bool linear_char_trivial_on(const Group& g, const RationalIrrep& irrep, Elem x) {
  switch (irrep.family) {
    case RationalIrrep::Family::Trivial:
      return true;
    case RationalIrrep::Family::DihedralSign:
      return g.is_rotation(x);
    case RationalIrrep::Family::DihedralChi3:
      return g.rotation_exponent(x) % 2 == 0;
    case RationalIrrep::Family::DihedralChi4:
      return (g.rotation_exponent(x) + (g.is_rotation(x) ? 0 : 1)) % 2 == 0;
    case RationalIrrep::Family::CyclicChar:
      return (std::int64_t(irrep.d) * x) % g.n_param == 0;
    default:
      fail("not a linear character");
  }
  return false;
}

}  // namespace

int fixed_subspace_dim(const Group& g, const RationalIrrep& irrep, const Subgroup& h) {
  need_builtin(g);
  if (irrep.family != RationalIrrep::Family::DihedralPsi) {
    for (Elem x : h.elements)
      if (!linear_char_trivial_on(g, irrep, x)) return 0;
    return 1;
  }
  // psi_d: rotations r^k act as diag(w^{dk}, w^{-dk}), reflections swap the
  // two eigenlines. The fixed space of the rotation part <r^a> is the whole
  // plane iff n | d*a (else zero); a reflection then pins one line.
  const int n = g.n_param;
  int a = n;  // <r^a> = rotation part of H
  bool has_reflection = false;
  for (Elem x : h.elements) {
    if (g.is_rotation(x)) a = std::gcd(a, g.rotation_exponent(x) == 0 ? n : g.rotation_exponent(x));
    else has_reflection = true;
  }
  const bool rotations_trivial = (std::int64_t(irrep.d) * a) % n == 0;
  if (!rotations_trivial) return 0;
  return has_reflection ? 1 : 2;
}

int fixed_subspace_dim(const Group& g, const RationalIrrep& irrep, Elem x) {
  need_builtin(g);
  if (irrep.family != RationalIrrep::Family::DihedralPsi)
    return linear_char_trivial_on(g, irrep, x) ? 1 : 0;
  const int n = g.n_param;
  if (!g.is_rotation(x)) return 1;
  const int k = g.rotation_exponent(x);
  return (std::int64_t(irrep.d) * k) % n == 0 ? 2 : 0;
}

DecompositionReport factor_dimensions(const GeneratingVector& vec) {
  const Group& g = *vec.group;
  need_builtin(g);
  const auto check = is_surface_kernel(vec);
  if (!check.ok) fail("factor_dimensions on an invalid vector: " + check.diagnosis);

  DecompositionReport report;
  report.group = &g;
  report.signature = vec.signature;
  report.vector_entries = vec.entries;
  report.genus = rh_genus(vec.signature, g.order);

  const int h = vec.signature.h;
  const int l = vec.signature.l();
  for (const auto& irrep : rational_irreducibles(g)) {
    FactorRow row;
    row.irrep = irrep;
    row.multiplicity = irrep.multiplicity;
    if (irrep.family == RationalIrrep::Family::Trivial) {
      row.dim = h;  // dim B_1 = quotient genus
    } else {
      // k_V [ d_V (h-1) + (1/2) sum_k (d_V - d_V^{<theta(x_k)>}) ]
      long long twice = 2LL * irrep.complex_degree * (h - 1);
      for (int j = 0; j < l; ++j)
        twice += irrep.complex_degree - fixed_subspace_dim(g, irrep, vec.elliptic(j));
      const long long numer = irrep.galois_degree * twice;
      if (numer % 2 != 0)
        throw std::logic_error("dimension formula produced a half-integer for " + irrep.label);
      row.dim = numer / 2;
      if (row.dim < 0)
        throw std::logic_error("negative factor dimension for " + irrep.label);
    }
    report.factors.push_back(std::move(row));
  }
  long long total = 0;
  for (const auto& row : report.factors) total += row.dim * row.multiplicity;
  if (total != report.genus)
    throw std::logic_error("factor dimensions sum to " + std::to_string(total) +
                           ", expected genus " + std::to_string(report.genus));
  return report;
}

QuotientRow quotient_decomposition(const DecompositionReport& report, const Subgroup& h,
                                   const std::string& descriptor) {
  const Group& g = *report.group;
  QuotientRow row;
  row.subgroup = descriptor;
  for (const auto& f : report.factors) {
    const int exp = fixed_subspace_dim(g, f.irrep, h) / f.irrep.schur_index;
    row.exponents.push_back(exp);
    row.dim += (long long)exp * f.dim;
  }
  return row;
}

PrymRow prym_decomposition(const DecompositionReport& report, const Subgroup& h1,
                           const Subgroup& h2, const std::string& desc1,
                           const std::string& desc2) {
  if (!h2.contains_all(h1)) fail("prym_decomposition: " + desc1 + " is not contained in " + desc2);
  const QuotientRow q1 = quotient_decomposition(report, h1, desc1);
  const QuotientRow q2 = quotient_decomposition(report, h2, desc2);
  PrymRow row;
  row.sub1 = desc1;
  row.sub2 = desc2;
  for (std::size_t i = 0; i < q1.exponents.size(); ++i) {
    const int e = q1.exponents[i] - q2.exponents[i];
    if (e < 0)
      throw std::logic_error("negative Prym exponent for factor " +
                             report.factors[i].irrep.label);
    row.exponents.push_back(e);
    row.dim += (long long)e * report.factors[i].dim;
  }
  return row;
}

long long quotient_genus(const GeneratingVector& vec, const Subgroup& h) {
  const Group& g = *vec.group;
  if (h.parent != &g) fail("quotient_genus: subgroup of a different group");
  const auto cosets = left_cosets(g, h);
  const long long index = (long long)cosets.reps.size();
  long long rhs = index * (2LL * vec.signature.h - 2);
  for (int j = 0; j < vec.signature.l(); ++j) {
    const auto perm = coset_action(g, cosets, vec.elliptic(j));
    rhs += index - permutation_cycle_count(perm);
  }
  if (rhs % 2 != 0)
    throw std::logic_error("coset Riemann-Hurwitz produced an odd value; internal inconsistency");
  const long long genus = rhs / 2 + 1;
  if (genus < 0) throw std::logic_error("negative quotient genus; internal inconsistency");
  return genus;
}

Subgroup parse_subgroup(const Group& g, const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s == "G") return whole_group(g);
  if (s == "1") return trivial_subgroup(g);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>')
    return subgroup_generated(g, {parse_element(g, s.substr(1, s.size() - 2))});
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    std::vector<Elem> gens;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      gens.push_back(parse_element(g, body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return subgroup_generated(g, gens);
  }
  fail("cannot parse subgroup descriptor '" + raw + "' (expected G, 1, <expr> or {e1,e2,...})");
  return {};  // unreachable
}

OracleCrossCheck oracle_crosscheck(const Group& g, const Signature& sig,
                                   const std::vector<std::string>& subgroup_descs,
                                   int threads) {
  OracleCrossCheck result;
  const auto irreps = rational_irreducibles(g);
  const auto vecs = enumerate_vectors(g, sig, threads).vectors;
  result.vectors = vecs.size();
  if (vecs.empty()) return result;
  const long long genus = rh_genus(sig, g.order);
  const int h = sig.h;
  const int l = sig.l();

  // fix[i][x] = dim V_i^{<x>}, shared by the dimension formula.
  std::vector<std::vector<int>> fix(irreps.size(), std::vector<int>(g.order));
  for (std::size_t i = 0; i < irreps.size(); ++i)
    for (int x = 0; x < g.order; ++x) fix[i][x] = fixed_subspace_dim(g, irreps[i], Elem(x));

  struct SubgroupData {
    long long index;
    std::vector<int> exponents;    // n_l^H
    std::vector<int> cycle_count;  // cycles of x acting on G/H, per element x
  };
  std::vector<SubgroupData> subs;
  for (const auto& desc : subgroup_descs) {
    const Subgroup hsub = parse_subgroup(g, desc);
    SubgroupData data;
    data.index = hsub.index();
    for (const auto& irrep : irreps)
      data.exponents.push_back(fixed_subspace_dim(g, irrep, hsub) / irrep.schur_index);
    const auto cosets = left_cosets(g, hsub);
    data.cycle_count.resize(g.order);
    for (int x = 0; x < g.order; ++x)
      data.cycle_count[x] = permutation_cycle_count(coset_action(g, cosets, Elem(x)));
    subs.push_back(std::move(data));
  }

  std::vector<long long> dims(irreps.size());
  for (const auto& vec : vecs) {
    long long total = 0;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
      if (irreps[i].family == RationalIrrep::Family::Trivial) {
        dims[i] = h;
      } else {
        long long twice = 2LL * irreps[i].complex_degree * (h - 1);
        for (int j = 0; j < l; ++j)
          twice += irreps[i].complex_degree - fix[i][vec[2 * h + j]];
        dims[i] = irreps[i].galois_degree * twice / 2;
      }
      total += dims[i] * irreps[i].multiplicity;
    }
    bool ok = total == genus;
    for (const auto& sub : subs) {
      long long rhs = sub.index * (2LL * h - 2);
      for (int j = 0; j < l; ++j) rhs += sub.index - sub.cycle_count[vec[2 * h + j]];
      const long long oracle_genus = rhs / 2 + 1;
      long long exponent_sum = 0;
      for (std::size_t i = 0; i < irreps.size(); ++i)
        exponent_sum += (long long)sub.exponents[i] * dims[i];
      ok = ok && rhs % 2 == 0 && oracle_genus == exponent_sum;
    }
    if (!ok) ++result.mismatches;
  }
  return result;
}

std::string report_to_json(const DecompositionReport& report) {
  nlohmann::json j;
  j["group"] = report.group->spec_string();
  j["signature"] = report.signature.str();
  GeneratingVector v{report.group, report.signature, report.vector_entries};
  j["vector"] = v.str();
  j["genus"] = report.genus;
  auto factors = nlohmann::json::array();
  for (const auto& f : report.factors)
    factors.push_back({{"label", f.irrep.label},
                       {"d", f.irrep.d},
                       {"dim", f.dim},
                       {"mult", f.multiplicity}});
  j["factors"] = factors;
  auto quotients = nlohmann::json::array();
  for (const auto& q : report.quotient_rows)
    quotients.push_back({{"subgroup", q.subgroup}, {"exponents", q.exponents}, {"dim", q.dim}});
  j["quotients"] = quotients;
  auto pryms = nlohmann::json::array();
  for (const auto& p : report.prym_rows)
    pryms.push_back(
        {{"pair", {p.sub1, p.sub2}}, {"exponents", p.exponents}, {"dim", p.dim}});
  j["pryms"] = pryms;
  return j.dump(2);
}

}  // namespace equisym
