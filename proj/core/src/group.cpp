#include "equisym/group.hpp"

#include <algorithm>
#include <numeric>

namespace equisym {

namespace {

void finalize(Group& g) {
  g.inverse_of.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    bool found = false;
    for (int b = 0; b < g.order; ++b) {
      if (g.mul(Elem(a), Elem(b)) == g.identity) {
        g.inverse_of[a] = Elem(b);
        found = true;
        break;
      }
    }
    if (!found) fail("element " + std::to_string(a) + " has no inverse");
  }
  g.order_of.assign(g.order, 0);
  for (int a = 0; a < g.order; ++a) {
    Elem p = Elem(a);
    int k = 1;
    while (p != g.identity) {
      p = g.mul(p, Elem(a));
      ++k;
      if (k > g.order) fail("element order exceeds group order; table is not a group");
    }
    g.order_of[a] = k;
  }
}

}  // namespace

Elem Group::pow(Elem a, long long k) const {
  const int n = order_of[a];
  k %= n;
  if (k < 0) k += n;
  Elem acc = identity;
  for (long long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

long long Group::exponent() const {
  long long e = 1;
  for (int k : order_of) e = std::lcm(e, (long long)k);
  return e;
}

std::string Group::spec_string() const {
  switch (kind) {
    case GroupKind::Cyclic: return "C:" + std::to_string(n_param);
    case GroupKind::Dihedral: return "D:" + std::to_string(n_param);
    case GroupKind::External: return name;
  }
  return name;
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

Group make_cyclic(int n) {
  if (n < 1) fail("cyclic group needs n >= 1");
  Group g;
  g.kind = GroupKind::Cyclic;
  g.n_param = n;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.table.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[std::size_t(a) * n + b] = Elem((a + b) % n);
  g.identity = 0;
  g.element_names.resize(n);
  for (int k = 0; k < n; ++k)
    g.element_names[k] = k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k));
  if (n > 1) g.generators = {Elem(1)};
  finalize(g);
  return g;
}

Group make_dihedral(int n) {
  if (n < 2) fail("dihedral group needs n >= 2");
  Group g;
  g.kind = GroupKind::Dihedral;
  g.n_param = n;
  g.name = "D" + std::to_string(n);
  g.order = 2 * n;
  g.table.resize(std::size_t(g.order) * g.order);
  auto idx = [n](bool refl, int k) { return Elem((refl ? n : 0) + ((k % n + n) % n)); };
  for (int a = 0; a < g.order; ++a) {
    const bool ra = a >= n;
    const int ka = ra ? a - n : a;
    for (int b = 0; b < g.order; ++b) {
      const bool rb = b >= n;
      const int kb = rb ? b - n : b;
      // r^a r^b = r^{a+b};  r^a (s r^b) = s r^{b-a};
      // (s r^a) r^b = s r^{a+b};  (s r^a)(s r^b) = r^{b-a}
      Elem prod;
      if (!ra && !rb) prod = idx(false, ka + kb);
      else if (!ra && rb) prod = idx(true, kb - ka);
      else if (ra && !rb) prod = idx(true, ka + kb);
      else prod = idx(false, kb - ka);
      g.table[std::size_t(a) * g.order + b] = prod;
    }
  }
  g.identity = 0;
  g.element_names.resize(g.order);
  for (int k = 0; k < n; ++k) {
    g.element_names[k] = k == 0 ? "1" : (k == 1 ? "r" : "r^" + std::to_string(k));
    g.element_names[n + k] = k == 0 ? "s" : (k == 1 ? "sr" : "sr^" + std::to_string(k));
  }
  g.generators = {Elem(1), Elem(n)};  // r, s
  finalize(g);
  return g;
}

Group make_external(std::string name, const std::vector<std::vector<int>>& table,
                    std::vector<int> generators, std::vector<std::string> names) {
  const int n = int(table.size());
  if (n == 0) fail("empty multiplication table");
  Group g;
  g.kind = GroupKind::External;
  g.name = std::move(name);
  g.order = n;
  g.table.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    if (int(table[a].size()) != n) fail("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        fail("table entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      g.table[std::size_t(a) * n + b] = Elem(v);
    }
  }
  // Latin square: each row and column is a permutation.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[g.mul(Elem(a), Elem(b))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n)
      fail("row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[g.mul(Elem(b), Elem(a))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n)
      fail("column " + std::to_string(a) + " is not a permutation");
  }
  // Identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.mul(Elem(e), Elem(x)) == Elem(x) && g.mul(Elem(x), Elem(e)) == Elem(x);
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) fail("table has no identity element");
  g.identity = Elem(id);
  // Associativity, exhaustive. Rejected with the first failing triple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(Elem(a), Elem(b)), Elem(c)) != g.mul(Elem(a), g.mul(Elem(b), Elem(c))))
          fail("associativity fails at triple (" + std::to_string(a) + "," + std::to_string(b) +
               "," + std::to_string(c) + ")");
  for (int x : generators) {
    if (x < 0 || x >= n) fail("generator index out of range");
    g.generators.push_back(Elem(x));
  }
  if (!names.empty()) {
    if (int(names.size()) != n) fail("element_names has wrong length");
    g.element_names = std::move(names);
  } else {
    g.element_names.resize(n);
    for (int k = 0; k < n; ++k) g.element_names[k] = "#" + std::to_string(k);
  }
  finalize(g);
  if (!g.generators.empty()) {
    Subgroup h = subgroup_generated(g, g.generators);
    if (h.size() != n) fail("declared generators do not generate the group");
  }
  return g;
}

int element_order(const Group& g, Elem x) { return g.order_of[x]; }

Subgroup subgroup_generated(const Group& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order, 0);
  std::vector<Elem> list;
  in[g.identity] = 1;
  list.push_back(g.identity);
  std::vector<Elem> work(gens);
  while (!work.empty()) {
    Elem y = work.back();
    work.pop_back();
    if (in[y]) continue;
    in[y] = 1;
    list.push_back(y);
    for (std::size_t i = 0; i < list.size(); ++i) {
      work.push_back(g.mul(y, list[i]));
      work.push_back(g.mul(list[i], y));
    }
  }
  std::sort(list.begin(), list.end());
  return Subgroup{&g, std::move(list)};
}

Subgroup whole_group(const Group& g) {
  Subgroup h{&g, {}};
  h.elements.resize(g.order);
  std::iota(h.elements.begin(), h.elements.end(), Elem(0));
  return h;
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup{&g, {g.identity}}; }

namespace {

// Brute-force automorphism search: assign images to a greedily chosen
// generating set, extending each partial assignment to the generated
// subgroup and pruning on conflicts.
std::vector<Automorphism> automorphisms_brute(const Group& g) {
  // Greedy generating set: repeatedly add the element whose closure grows most.
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(g);
  while (span.size() < g.order) {
    int best_size = -1;
    Elem best = 0;
    for (int x = 0; x < g.order; ++x) {
      if (span.contains(Elem(x))) continue;
      auto cand = gens;
      cand.push_back(Elem(x));
      const int s = subgroup_generated(g, cand).size();
      if (s > best_size) {
        best_size = s;
        best = Elem(x);
      }
    }
    gens.push_back(best);
    span = subgroup_generated(g, gens);
  }

  std::vector<Automorphism> result;
  const int k = int(gens.size());
  std::vector<Elem> images(k);

  // Extend the partial map determined by gens[0..upto) -> images[0..upto).
  // Returns the map on the generated subgroup, or empty on conflict.
  auto extend = [&](int upto) -> std::vector<int> {
    std::vector<int> pmap(g.order, -1);
    pmap[g.identity] = g.identity;
    std::vector<Elem> list{g.identity};
    std::vector<std::pair<Elem, Elem>> work;
    for (int i = 0; i < upto; ++i) work.emplace_back(gens[i], images[i]);
    while (!work.empty()) {
      auto [y, im] = work.back();
      work.pop_back();
      if (pmap[y] >= 0) {
        if (pmap[y] != im) return {};
        continue;
      }
      pmap[y] = im;
      list.push_back(y);
      for (std::size_t i = 0; i < list.size(); ++i) {
        const Elem z = list[i];
        work.emplace_back(g.mul(y, z), g.mul(Elem(pmap[y]), Elem(pmap[z])));
        work.emplace_back(g.mul(z, y), g.mul(Elem(pmap[z]), Elem(pmap[y])));
      }
    }
    return pmap;
  };

  std::vector<std::vector<Elem>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < g.order; ++x)
      if (g.order_of[x] == g.order_of[gens[i]]) candidates[i].push_back(Elem(x));

  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      auto pmap = extend(k);
      if (pmap.empty()) return;
      // Total, bijective, multiplicative - the extension covers <gens> = G,
      // but verify the full homomorphism property over all pairs.
      std::vector<char> hit(g.order, 0);
      for (int x = 0; x < g.order; ++x) {
        if (pmap[x] < 0) return;
        hit[pmap[x]] = 1;
      }
      if (std::count(hit.begin(), hit.end(), 1) != g.order) return;
      for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
          if (pmap[g.mul(Elem(a), Elem(b))] != g.mul(Elem(pmap[a]), Elem(pmap[b]))) return;
      Automorphism w{&g, {}};
      w.map.assign(pmap.begin(), pmap.end());
      result.push_back(std::move(w));
      return;
    }
    for (Elem c : candidates[i]) {
      images[i] = c;
      if (extend(i + 1).empty()) continue;  // conflict in the partial extension
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace

std::vector<Automorphism> automorphisms(const Group& g, int brute_force_limit) {
  std::vector<Automorphism> result;
  if (g.kind == GroupKind::Cyclic) {
    const int n = g.n_param;
    if (n == 1) {
      result.push_back(Automorphism{&g, {g.identity}});
      return result;
    }
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      Automorphism w{&g, std::vector<Elem>(g.order)};
      for (int k = 0; k < n; ++k) w.map[k] = Elem((std::int64_t(a) * k) % n);
      result.push_back(std::move(w));
    }
    return result;
  }
  if (g.kind == GroupKind::Dihedral && g.n_param >= 3) {
    // phi_{alpha,beta}: r -> r^alpha (gcd(alpha,n)=1), s -> s r^beta.
    const int n = g.n_param;
    for (int a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      for (int b = 0; b < n; ++b) {
        Automorphism w{&g, std::vector<Elem>(g.order)};
        for (int k = 0; k < n; ++k) {
          w.map[k] = Elem((std::int64_t(a) * k) % n);
          w.map[n + k] = Elem(n + int((b + std::int64_t(a) * k) % n));
        }
        result.push_back(std::move(w));
      }
    }
    return result;
  }
  // D_2 is the Klein four-group: the r/s closed form misses the
  // automorphisms permuting r into the reflections, so fall through
  // to the brute-force search (order 4).
  if (g.order > brute_force_limit)
    throw CapabilityError("automorphism search limited to order <= " +
                          std::to_string(brute_force_limit) + ", got " +
                          std::to_string(g.order));
  return automorphisms_brute(g);
}

CosetSpace left_cosets(const Group& g, const Subgroup& h) {
  if (h.parent != &g) fail("subgroup belongs to a different group");
  CosetSpace cs;
  cs.coset_of.assign(g.order, -1);
  for (int x = 0; x < g.order; ++x) {
    if (cs.coset_of[x] >= 0) continue;
    const int c = int(cs.reps.size());
    cs.reps.push_back(Elem(x));  // x is the least element of its coset
    for (Elem s : h.elements) cs.coset_of[g.mul(Elem(x), s)] = c;
  }
  return cs;
}

std::vector<int> coset_action(const Group& g, const CosetSpace& cs, Elem x) {
  std::vector<int> perm(cs.reps.size());
  for (std::size_t c = 0; c < cs.reps.size(); ++c)
    perm[c] = cs.coset_of[g.mul(x, cs.reps[c])];
  return perm;
}

std::vector<int> coset_action(const Group& g, const Subgroup& h, Elem x) {
  return coset_action(g, left_cosets(g, h), x);
}

int permutation_cycle_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = std::size_t(perm[j]);
    }
  }
  return cycles;
}

}  // namespace equisym
