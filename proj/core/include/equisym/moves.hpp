#pragma once

#include <string>

#include "equisym/genvec.hpp"

namespace equisym {

// Bumped whenever the orbit generator set changes; stratum caches carrying
// a different version are discarded.
inline constexpr int kMoveSetVersion = 1;

// Mapping-class moves on generating vectors. Indices are 1-based as in the
// usual presentation: Braid(i) acts on (x_i, x_{i+1}), 1 <= i <= l-1;
// C-moves take 1 <= i <= l. A-moves and C-moves need quotient genus 1.
//
//   Braid(i):    (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^-1 x_i x_{i+1})
//   BraidInv(i): inverse of Braid(i)
//   BraidSq(i):  Braid(i) twice. Unlike a single braid it fixes the period
//                layout, so it stays valid across a period boundary (the
//                full twist of two adjacent branch points).
//   A1(n): b_1 -> b_1 a_1^n          A2(n): a_1 -> a_1 b_1^n
//   C1(i): a_1 -> u a_1, x_i -> v x_i v^-1,  u = b_1^-1 w z, v = z b_1^-1 w
//   C2(i): b_1 -> u b_1, x_i -> v x_i v^-1,  u = w z a_1,   v = z a_1 w
// where w = prod_{k<i} x_k and z = prod_{k>i} x_k.
struct Move {
  enum class Kind { Braid, BraidInv, BraidSq, A1, A2, C1, C2 };
  Kind kind;
  int index = 0;          // braid / C-move position
  long long exponent = 0; // A-move twist count (taken mod the group exponent)

  static Move braid(int i) { return {Kind::Braid, i, 0}; }
  static Move braid_inv(int i) { return {Kind::BraidInv, i, 0}; }
  static Move braid_sq(int i) { return {Kind::BraidSq, i, 0}; }
  static Move a1(long long n) { return {Kind::A1, 0, n}; }
  static Move a2(long long n) { return {Kind::A2, 0, n}; }
  static Move c1(int i) { return {Kind::C1, i, 0}; }
  static Move c2(int i) { return {Kind::C2, i, 0}; }

  std::string str() const;
};

// Applies a move; the result is again a valid generating vector for the
// same signature. Invalid index / wrong quotient genus / a single braid
// across unequal periods is a shape error.
GeneratingVector apply_move(const GeneratingVector& vec, const Move& move);

// Entrywise image under an automorphism of the vector's group.
GeneratingVector apply_automorphism(const GeneratingVector& vec, const Automorphism& w);

namespace detail {

// Raw tuple-level appliers (no validity checks); hh = 2h is the offset of
// the first elliptic slot. Braid/C indices 0-based here.
void braid(const Group& g, PackedVec& v, int hh, int i);
void braid_inv(const Group& g, PackedVec& v, int hh, int i);
void a1(const Group& g, PackedVec& v, long long n);
void a2(const Group& g, PackedVec& v, long long n);
void c1(const Group& g, PackedVec& v, int hh, int l, int i);
void c2(const Group& g, PackedVec& v, int hh, int l, int i);
void aut_image(const Automorphism& w, PackedVec& v);

}  // namespace detail

}  // namespace equisym
