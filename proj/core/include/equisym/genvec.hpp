#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equisym/group.hpp"
#include "equisym/signature.hpp"

namespace equisym {

// Flat tuple (a_1,b_1,...,a_h,b_h, x_1,...,x_l) of element indices.
// Fixed capacity keeps orbit hashing allocation-free.
inline constexpr int kMaxVecLen = 16;

struct PackedVec {
  std::array<Elem, kMaxVecLen> v{};
  std::uint8_t len = 0;

  Elem& operator[](int i) { return v[i]; }
  Elem operator[](int i) const { return v[i]; }
  bool operator==(const PackedVec&) const = default;
  auto operator<=>(const PackedVec&) const = default;

  static PackedVec of(std::span<const Elem> entries);
};

struct PackedVecHash {
  std::size_t operator()(const PackedVec& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < p.len; ++i) {
      h ^= p.v[i];
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

// A surface-kernel generating vector for (group, signature): the tuple of
// images of the canonical Fuchsian generators.
struct GeneratingVector {
  const Group* group = nullptr;
  Signature signature;
  PackedVec entries;  // 2h hyperbolic entries then l elliptic entries

  int hyperbolic_count() const { return 2 * signature.h; }
  Elem hyperbolic(int i) const { return entries[i]; }
  Elem elliptic(int j) const { return entries[hyperbolic_count() + j]; }

  std::string str() const;  // "a,b;x1,x2,...", hyperbolic part "-" when h = 0
  static GeneratingVector parse(const Group& g, const Signature& sig, const std::string& text);
};

struct SurfaceKernelCheck {
  bool ok = false;
  std::string diagnosis;  // names the first violated invariant when !ok
};

// The three invariants, in order: long product relation, exact orders of
// the elliptic images, generation. Length mismatch is a shape error.
SurfaceKernelCheck is_surface_kernel(const Group& g, const Signature& sig,
                                     const PackedVec& entries);
SurfaceKernelCheck is_surface_kernel(const GeneratingVector& vec);

struct VectorEnumeration {
  std::vector<PackedVec> vectors;  // lexicographically sorted, duplicate-free
  bool rh_admissible = false;      // false: the (sig, |G|) pair fails Riemann-Hurwitz
};

// Complete enumeration. The last elliptic entry is solved from the product
// relation; hyperbolic entries iterate outermost. Deterministic for any
// thread count.
VectorEnumeration enumerate_vectors(const Group& g, const Signature& sig, int threads = 1);

std::uint64_t count_vectors(const Group& g, const Signature& sig, int threads = 1);
bool any_vector_exists(const Group& g, const Signature& sig);

// Lexicographically first vector, without enumerating the rest.
std::optional<PackedVec> first_vector(const Group& g, const Signature& sig);

// Upper bound on the number of enumeration leaves (free slots only).
std::uint64_t vector_search_size(const Group& g, const Signature& sig);

}  // namespace equisym
