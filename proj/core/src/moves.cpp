#include "equisym/moves.hpp"

namespace equisym {

namespace detail {

void braid(const Group& g, PackedVec& v, int hh, int i) {
  const Elem xi = v[hh + i], xj = v[hh + i + 1];
  v[hh + i] = xj;
  v[hh + i + 1] = g.mul(g.mul(g.inv(xj), xi), xj);
}

void braid_inv(const Group& g, PackedVec& v, int hh, int i) {
  const Elem xi = v[hh + i], xj = v[hh + i + 1];
  v[hh + i] = g.mul(g.mul(xi, xj), g.inv(xi));
  v[hh + i + 1] = xi;
}

void a1(const Group& g, PackedVec& v, long long n) {
  v[1] = g.mul(v[1], g.pow(v[0], n));  // b1 -> b1 a1^n
}

void a2(const Group& g, PackedVec& v, long long n) {
  v[0] = g.mul(v[0], g.pow(v[1], n));  // a1 -> a1 b1^n
}

namespace {

// w = x_1 ... x_{i-1}, z = x_{i+1} ... x_l  (i 0-based)
void flank_products(const Group& g, const PackedVec& v, int hh, int l, int i, Elem& w, Elem& z) {
  w = g.identity;
  for (int k = 0; k < i; ++k) w = g.mul(w, v[hh + k]);
  z = g.identity;
  for (int k = i + 1; k < l; ++k) z = g.mul(z, v[hh + k]);
}

}  // namespace

void c1(const Group& g, PackedVec& v, int hh, int l, int i) {
  Elem w, z;
  flank_products(g, v, hh, l, i, w, z);
  const Elem b_inv = g.inv(v[1]);
  const Elem u = g.mul(g.mul(b_inv, w), z);   // u = b1^-1 w z
  const Elem conj = g.mul(g.mul(z, b_inv), w);  // v = z b1^-1 w
  v[0] = g.mul(u, v[0]);
  v[hh + i] = g.mul(g.mul(conj, v[hh + i]), g.inv(conj));
}

void c2(const Group& g, PackedVec& v, int hh, int l, int i) {
  Elem w, z;
  flank_products(g, v, hh, l, i, w, z);
  const Elem a = v[0];
  const Elem u = g.mul(g.mul(w, z), a);       // u = w z a1
  const Elem conj = g.mul(g.mul(z, a), w);    // v = z a1 w
  v[1] = g.mul(u, v[1]);
  v[hh + i] = g.mul(g.mul(conj, v[hh + i]), g.inv(conj));
}

void aut_image(const Automorphism& w, PackedVec& v) {
  for (int i = 0; i < v.len; ++i) v[i] = w.map[v[i]];
}

}  // namespace detail

std::string Move::str() const {
  switch (kind) {
    case Kind::Braid: return "Braid(" + std::to_string(index) + ")";
    case Kind::BraidInv: return "BraidInv(" + std::to_string(index) + ")";
    case Kind::BraidSq: return "BraidSq(" + std::to_string(index) + ")";
    case Kind::A1: return "A1(" + std::to_string(exponent) + ")";
    case Kind::A2: return "A2(" + std::to_string(exponent) + ")";
    case Kind::C1: return "C1(" + std::to_string(index) + ")";
    case Kind::C2: return "C2(" + std::to_string(index) + ")";
  }
  return "?";
}

GeneratingVector apply_move(const GeneratingVector& vec, const Move& move) {
  const Group& g = *vec.group;
  const Signature& sig = vec.signature;
  const int hh = 2 * sig.h;
  const int l = sig.l();
  GeneratingVector out = vec;

  auto need_braid_index = [&](int i) {
    if (i < 1 || i > l - 1)
      fail(move.str() + ": braid index out of range for l = " + std::to_string(l));
  };
  auto need_genus_one = [&]() {
    if (sig.h != 1) fail(move.str() + " needs quotient genus 1, signature has h = " +
                         std::to_string(sig.h));
  };

  switch (move.kind) {
    case Move::Kind::Braid:
    case Move::Kind::BraidInv:
      need_braid_index(move.index);
      if (sig.periods[move.index - 1] != sig.periods[move.index])
        fail(move.str() + " would swap periods " + std::to_string(sig.periods[move.index - 1]) +
             " and " + std::to_string(sig.periods[move.index]) + "; use BraidSq");
      if (move.kind == Move::Kind::Braid)
        detail::braid(g, out.entries, hh, move.index - 1);
      else
        detail::braid_inv(g, out.entries, hh, move.index - 1);
      break;
    case Move::Kind::BraidSq:
      need_braid_index(move.index);
      detail::braid(g, out.entries, hh, move.index - 1);
      detail::braid(g, out.entries, hh, move.index - 1);
      break;
    case Move::Kind::A1:
      need_genus_one();
      detail::a1(g, out.entries, move.exponent);
      break;
    case Move::Kind::A2:
      need_genus_one();
      detail::a2(g, out.entries, move.exponent);
      break;
    case Move::Kind::C1:
    case Move::Kind::C2:
      need_genus_one();
      if (move.index < 1 || move.index > l)
        fail(move.str() + ": index out of range for l = " + std::to_string(l));
      if (move.kind == Move::Kind::C1)
        detail::c1(g, out.entries, hh, l, move.index - 1);
      else
        detail::c2(g, out.entries, hh, l, move.index - 1);
      break;
  }
  return out;
}

GeneratingVector apply_automorphism(const GeneratingVector& vec, const Automorphism& w) {
  if (w.parent != vec.group) fail("automorphism belongs to a different group");
  GeneratingVector out = vec;
  detail::aut_image(w, out.entries);
  return out;
}

}  // namespace equisym
