#pragma once

#include <string>
#include <vector>

#include "equisym/genvec.hpp"

namespace equisym {

// A rational irreducible representation of C_n or D_n, described by the
// integer data the dimension formulas consume: the degree d_V of an
// associated complex irreducible V, its Schur index s_V (always 1 for
// these families), the degree k_V of the minimal field of definition over
// the rationals, and the multiplicity n_V = d_V / s_V.
struct RationalIrrep {
  enum class Family {
    Trivial,       // chi_1
    DihedralSign,  // chi_2: r -> 1, s -> -1
    DihedralChi3,  // chi_3 (n even): r -> -1, s -> 1
    DihedralChi4,  // chi_4 (n even): r -> -1, s -> -1
    DihedralPsi,   // W_d, V = psi_d: r -> diag(w^d, w^-d), s -> swap
    CyclicChar,    // W_d, V = chi_d: t -> w^d
  };
  Family family = Family::Trivial;
  int d = 0;  // divisor parameter for the W_d families
  std::string label;
  int complex_degree = 1;  // d_V
  int schur_index = 1;     // s_V
  int galois_degree = 1;   // k_V
  int multiplicity = 1;    // n_V
};

// Complete list for cyclic(n) / dihedral(n); capability error otherwise.
// D_n odd: chi_1, chi_2, W_d for divisors d of n with 1 <= d < n.
// D_n even: chi_1..chi_4, W_d for divisors d with 1 <= d < n/2.
// C_n: trivial plus one class W_d per divisor d < n (V = chi_d).
std::vector<RationalIrrep> rational_irreducibles(const Group& g);

// dim V^H, the fixed subspace of the complex irreducible V under H,
// computed exactly from the explicit matrix models.
int fixed_subspace_dim(const Group& g, const RationalIrrep& irrep, const Subgroup& h);
// Same for the cyclic subgroup generated by one element.
int fixed_subspace_dim(const Group& g, const RationalIrrep& irrep, Elem x);

struct FactorRow {
  RationalIrrep irrep;
  long long dim = 0;     // dim B_i
  int multiplicity = 1;  // exponent n_V in JS ~ prod B_i^{n_i}
};

struct QuotientRow {
  std::string subgroup;        // descriptor, e.g. "<r>", "G", "1"
  std::vector<int> exponents;  // n_l^H per factor row
  long long dim = 0;           // dim JS_H = sum n_l^H dim B_l
};

struct PrymRow {
  std::string sub1, sub2;
  std::vector<int> exponents;  // n_l^{H1} - n_l^{H2}
  long long dim = 0;
};

struct DecompositionReport {
  const Group* group = nullptr;
  Signature signature;
  PackedVec vector_entries;
  long long genus = 0;  // dim JS
  std::vector<FactorRow> factors;
  std::vector<QuotientRow> quotient_rows;
  std::vector<PrymRow> prym_rows;
};

// Factor dimensions of the group algebra decomposition of JS for the
// action represented by vec: the trivial factor has dim = h, every other
// factor dim is k_V [ d_V (h - 1) + (1/2) sum_k (d_V - d_V^{<theta(x_k)>}) ].
DecompositionReport factor_dimensions(const GeneratingVector& vec);

QuotientRow quotient_decomposition(const DecompositionReport& report, const Subgroup& h,
                                   const std::string& descriptor);
PrymRow prym_decomposition(const DecompositionReport& report, const Subgroup& h1,
                           const Subgroup& h2, const std::string& desc1,
                           const std::string& desc2);

// Genus of the quotient surface S_H, computed independently of the
// representation data by Riemann-Hurwitz on the degree-[G:H] coset cover:
// 2 g_H - 2 = [G:H](2h - 2) + sum_j ([G:H] - #cycles of theta(x_j) on G/H).
long long quotient_genus(const GeneratingVector& vec, const Subgroup& h);

// Subgroup descriptors: "G", "1", "<expr>" (cyclic, expr an element
// literal), or "{e1,e2,...}" (generated by the listed elements).
Subgroup parse_subgroup(const Group& g, const std::string& descriptor);

// Cross-validation over every generating vector of (group, signature):
// for each listed subgroup H, the coset Riemann-Hurwitz genus of S_H must
// equal sum_l n_l^H dim B_l; the factor dims must also sum to the genus.
// The two sides share no code path beyond the group table.
struct OracleCrossCheck {
  std::uint64_t vectors = 0;
  std::uint64_t mismatches = 0;
};
OracleCrossCheck oracle_crosscheck(const Group& g, const Signature& sig,
                                   const std::vector<std::string>& subgroup_descs,
                                   int threads = 1);

std::string report_to_json(const DecompositionReport& report);

}  // namespace equisym
