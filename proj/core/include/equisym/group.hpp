#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "equisym/errors.hpp"

namespace equisym {

using Elem = std::uint16_t;

// Dense multiplication tables are held in memory; this caps them at 32 MiB.
inline constexpr int kMaxGroupOrder = 4096;

enum class GroupKind { Cyclic, Dihedral, External };

// A finite group as an exact multiplication table over dense element
// indices 0..order-1. Immutable after construction; all queries are pure.
//
// Built-in index layout:
//   cyclic(n):    index k  is t^k
//   dihedral(n):  index k < n is r^k, index n+k is s r^k
class Group {
 public:
  GroupKind kind = GroupKind::External;
  int n_param = 0;  // n for C_n / D_n, 0 for external tables
  std::string name;
  int order = 0;
  std::vector<Elem> table;       // row-major: table[a*order+b] = a*b
  Elem identity = 0;
  std::vector<Elem> inverse_of;  // precomputed inverses
  std::vector<int> order_of;     // precomputed element orders
  std::vector<std::string> element_names;
  std::vector<Elem> generators;  // designated generators

  Elem mul(Elem a, Elem b) const { return table[std::size_t(a) * order + b]; }
  Elem inv(Elem a) const { return inverse_of[a]; }
  Elem pow(Elem a, long long k) const;
  long long exponent() const;  // lcm of element orders

  // D_n helpers (valid only for kind == Dihedral).
  bool is_rotation(Elem a) const { return a < Elem(n_param); }
  int rotation_exponent(Elem a) const { return is_rotation(a) ? a : a - n_param; }

  std::string spec_string() const;  // "C:n", "D:n", or the external name
};

struct Subgroup {
  const Group* parent = nullptr;
  std::vector<Elem> elements;  // sorted ascending, closed, contains identity

  int size() const { return int(elements.size()); }
  int index() const { return parent->order / size(); }
  bool contains(Elem x) const;
  bool contains_all(const Subgroup& other) const;
};

struct Automorphism {
  const Group* parent = nullptr;
  std::vector<Elem> map;  // map[x] = image of x

  Elem operator()(Elem x) const { return map[x]; }
};

// Constructors. Cyclic accepts n >= 1, dihedral n >= 2.
Group make_cyclic(int n);
Group make_dihedral(int n);

// Validates an external multiplication table (Latin square, identity,
// associativity on all triples) and rejects it with the first failing
// triple otherwise.
Group make_external(std::string name, const std::vector<std::vector<int>>& table,
                    std::vector<int> generators, std::vector<std::string> names = {});

int element_order(const Group& g, Elem x);

// Smallest subgroup containing gens (closure under multiplication).
Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& gens);
Subgroup whole_group(const Group& g);
Subgroup trivial_subgroup(const Group& g);

// Complete list of automorphisms. Closed forms for C_n and D_n (n >= 3);
// brute force over generator images otherwise, gated at brute_force_limit.
std::vector<Automorphism> automorphisms(const Group& g, int brute_force_limit = 64);

// Left cosets xH enumerated by least element index.
struct CosetSpace {
  std::vector<Elem> reps;      // least element of each coset, ascending
  std::vector<int> coset_of;   // element index -> coset number
};
CosetSpace left_cosets(const Group& g, const Subgroup& h);

// Permutation c -> coset of x * rep(c).
std::vector<int> coset_action(const Group& g, const Subgroup& h, Elem x);
std::vector<int> coset_action(const Group& g, const CosetSpace& cosets, Elem x);

int permutation_cycle_count(const std::vector<int>& perm);

}  // namespace equisym
