#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equisym/rational.hpp"

namespace equisym {

// Fuchsian signature (h; m_1,...,m_l). Periods are kept sorted ascending;
// two signatures are equal iff h and the sorted periods agree.
struct Signature {
  int h = 0;
  std::vector<int> periods;  // each >= 2, sorted ascending

  Signature() = default;
  Signature(int genus, std::vector<int> ms);

  int l() const { return int(periods.size()); }
  bool operator==(const Signature&) const = default;
  bool operator<(const Signature& o) const;

  // Text form "h;m1,m2,...,ml", empty period list rendered "h;-".
  std::string str() const;
  static Signature parse(const std::string& text);
};

// Complex dimension of the associated Teichmueller space: 3h - 3 + l.
int teichmuller_dimension(const Signature& sig);

// The right-hand side of the Riemann-Hurwitz identity
// 2g - 2 = order * (2h - 2 + sum_j (1 - 1/m_j)), exact.
Rational rh_rhs(const Signature& sig, long long order);

// Solves for g. Throws ValidationError ("not a surface-kernel-admissible
// pair", carrying the rational value) unless the RHS is an even integer
// with g >= 2.
long long rh_genus(const Signature& sig, long long order);
std::optional<long long> try_rh_genus(const Signature& sig, long long order);

// All signatures with teichmuller_dimension == dim, periods dividing
// `order`, and rh_genus == genus; sorted by h then periods. Quotient
// genus h is capped (desk-scale searches never need more).
std::vector<Signature> enumerate_signatures(long long genus, long long order, int dim,
                                            int h_cap = 4);

}  // namespace equisym
