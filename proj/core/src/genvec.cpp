#include "equisym/genvec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "equisym/catalog.hpp"

namespace equisym {

PackedVec PackedVec::of(std::span<const Elem> entries) {
  if (int(entries.size()) > kMaxVecLen)
    throw CapabilityError("generating vector longer than " + std::to_string(kMaxVecLen));
  PackedVec p;
  p.len = std::uint8_t(entries.size());
  std::copy(entries.begin(), entries.end(), p.v.begin());
  return p;
}

std::string GeneratingVector::str() const {
  std::string s;
  const int hh = hyperbolic_count();
  if (hh == 0) {
    s = "-";
  } else {
    for (int i = 0; i < hh; ++i) {
      if (i) s += ",";
      s += element_name(*group, entries[i]);
    }
  }
  s += ";";
  for (int j = 0; j < signature.l(); ++j) {
    if (j) s += ",";
    s += element_name(*group, elliptic(j));
  }
  return s;
}

GeneratingVector GeneratingVector::parse(const Group& g, const Signature& sig,
                                         const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) fail("vector '" + text + "' has no ';'");
  auto split = [](const std::string& part) {
    std::vector<std::string> toks;
    if (part == "-" || part.empty()) return toks;
    std::size_t pos = 0;
    while (pos <= part.size()) {
      auto comma = part.find(',', pos);
      if (comma == std::string::npos) comma = part.size();
      toks.push_back(part.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return toks;
  };
  const auto hyp = split(text.substr(0, semi));
  const auto ell = split(text.substr(semi + 1));
  if (int(hyp.size()) != 2 * sig.h)
    fail("vector '" + text + "': expected " + std::to_string(2 * sig.h) +
         " hyperbolic entries, got " + std::to_string(hyp.size()));
  if (int(ell.size()) != sig.l())
    fail("vector '" + text + "': expected " + std::to_string(sig.l()) +
         " elliptic entries, got " + std::to_string(ell.size()));
  std::vector<Elem> entries;
  for (const auto& t : hyp) entries.push_back(parse_element(g, t));
  for (const auto& t : ell) entries.push_back(parse_element(g, t));
  return GeneratingVector{&g, sig, PackedVec::of(entries)};
}

SurfaceKernelCheck is_surface_kernel(const Group& g, const Signature& sig,
                                     const PackedVec& entries) {
  const int hh = 2 * sig.h;
  const int l = sig.l();
  if (entries.len != hh + l)
    fail("vector shape mismatch: expected " + std::to_string(hh + l) + " entries, got " +
         std::to_string(int(entries.len)));
  // Long relation: prod [a_i, b_i] * prod x_j = 1.
  Elem p = g.identity;
  for (int i = 0; i < hh; i += 2) {
    const Elem a = entries[i], b = entries[i + 1];
    p = g.mul(p, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  for (int j = 0; j < l; ++j) p = g.mul(p, entries[hh + j]);
  if (p != g.identity)
    return {false, "product relation fails: long product is " + element_name(g, p)};
  // Exact orders on elliptic images (torsion-free kernel).
  for (int j = 0; j < l; ++j) {
    const int got = g.order_of[entries[hh + j]];
    if (got != sig.periods[j])
      return {false, "order of x_" + std::to_string(j + 1) + " is " + std::to_string(got) +
                         ", period demands " + std::to_string(sig.periods[j])};
  }
  // Generation (surjectivity).
  std::vector<Elem> gens(entries.v.begin(), entries.v.begin() + entries.len);
  const Subgroup h = subgroup_generated(g, gens);
  if (h.size() != g.order)
    return {false, "entries generate a proper subgroup of size " + std::to_string(h.size())};
  return {true, ""};
}

SurfaceKernelCheck is_surface_kernel(const GeneratingVector& vec) {
  return is_surface_kernel(*vec.group, vec.signature, vec.entries);
}

namespace {

// Incrementally maintained closure <entries so far>, as bitset + list.
struct Closure {
  std::vector<std::uint64_t> bits;
  std::vector<Elem> list;

  void reset(const Group& g) {
    bits.assign((g.order + 63) / 64, 0);
    list.clear();
    bits[g.identity >> 6] |= 1ull << (g.identity & 63);
    list.push_back(g.identity);
  }
  bool contains(Elem x) const { return (bits[x >> 6] >> (x & 63)) & 1; }
  int size() const { return int(list.size()); }
};

void closure_insert(const Group& g, Closure& c, Elem x, std::vector<Elem>& work) {
  if (c.contains(x)) return;
  work.clear();
  work.push_back(x);
  while (!work.empty()) {
    const Elem y = work.back();
    work.pop_back();
    if (c.contains(y)) continue;
    c.bits[y >> 6] |= 1ull << (y & 63);
    c.list.push_back(y);
    for (std::size_t i = 0; i < c.list.size(); ++i) {
      work.push_back(g.mul(y, c.list[i]));
      work.push_back(g.mul(c.list[i], y));
    }
  }
}

struct EnumPlan {
  const Group* g;
  int h = 0;
  std::vector<int> periods;
  std::vector<std::vector<Elem>> elliptic_candidates;  // per slot, ascending
  int total_len() const { return 2 * h + int(periods.size()); }
};

EnumPlan make_plan(const Group& g, const Signature& sig) {
  EnumPlan plan;
  plan.g = &g;
  plan.h = sig.h;
  plan.periods = sig.periods;
  plan.elliptic_candidates.resize(sig.l());
  for (int j = 0; j < sig.l(); ++j) {
    for (int x = 0; x < g.order; ++x)
      if (g.order_of[x] == sig.periods[j]) plan.elliptic_candidates[j].push_back(Elem(x));
  }
  return plan;
}

// Depth-first enumeration; the last elliptic slot is solved from the long
// relation. visit() returns false to stop early. first_slot_value, when
// >= 0, pins slot 0 (used to partition work across threads).
bool enumerate_rec(const EnumPlan& plan, const std::function<bool(const PackedVec&)>& visit,
                   int first_slot_value) {
  const Group& g = *plan.g;
  const int hh = 2 * plan.h;
  const int l = int(plan.periods.size());
  const int L = hh + l;
  if (L == 0) return true;
  if (L > kMaxVecLen)
    throw CapabilityError("signature needs " + std::to_string(L) + " entries, above the engine cap " +
                          std::to_string(kMaxVecLen));

  std::array<Elem, kMaxVecLen> entries{};
  // Per-depth state: closure of entries placed so far and running product
  // of the long relation prefix.
  std::vector<Closure> closures(L + 1);
  std::vector<Elem> prefix(L + 1, g.identity);
  closures[0].reset(g);
  std::vector<Elem> scratch;

  // solve_last: slots [0, L-2] are free, slot L-1 is determined (only when
  // l >= 1). With l == 0 every hyperbolic slot is free.
  const bool solve_last = l >= 1;
  const int free_slots = solve_last ? L - 1 : L;

  auto place = [&](int depth, Elem x) {
    entries[depth] = x;
    closures[depth + 1] = closures[depth];
    closure_insert(g, closures[depth + 1], x, scratch);
    if (depth < hh) {
      if (depth % 2 == 1) {  // finished a hyperbolic pair: multiply [a,b]
        const Elem a = entries[depth - 1], b = entries[depth];
        prefix[depth + 1] =
            g.mul(prefix[depth - 1], g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
      } else {
        prefix[depth + 1] = prefix[depth];
      }
    } else {
      prefix[depth + 1] = g.mul(prefix[depth], x);
    }
  };

  auto emit = [&](int used) -> bool {
    PackedVec p;
    p.len = std::uint8_t(used);
    std::copy(entries.begin(), entries.begin() + used, p.v.begin());
    return visit(p);
  };

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == free_slots) {
      if (solve_last) {
        const Elem x = g.inv(prefix[depth]);
        if (g.order_of[x] != plan.periods[l - 1]) return true;
        place(depth, x);
        if (closures[depth + 1].size() != g.order) return true;
        return emit(L);
      }
      if (prefix[depth] != g.identity) return true;
      if (closures[depth].size() != g.order) return true;
      return emit(L);
    }
    if (depth < hh) {
      for (int x = 0; x < g.order; ++x) {
        if (depth == 0 && first_slot_value >= 0 && x != first_slot_value) continue;
        place(depth, Elem(x));
        if (!self(self, depth + 1)) return false;
      }
    } else {
      for (Elem x : plan.elliptic_candidates[depth - hh]) {
        if (depth == 0 && first_slot_value >= 0 && x != Elem(first_slot_value)) continue;
        place(depth, x);
        if (!self(self, depth + 1)) return false;
      }
    }
    return true;
  };
  return rec(rec, 0);
}

std::vector<int> first_slot_values(const EnumPlan& plan) {
  const Group& g = *plan.g;
  std::vector<int> vals;
  if (plan.total_len() <= 1) return vals;
  if (plan.h > 0) {
    vals.resize(g.order);
    for (int i = 0; i < g.order; ++i) vals[i] = i;
  } else {
    for (Elem x : plan.elliptic_candidates[0]) vals.push_back(x);
  }
  return vals;
}

}  // namespace

VectorEnumeration enumerate_vectors(const Group& g, const Signature& sig, int threads) {
  VectorEnumeration result;
  result.rh_admissible = try_rh_genus(sig, g.order).has_value();
  if (!result.rh_admissible) return result;
  const EnumPlan plan = make_plan(g, sig);
  for (int j = 0; j < sig.l(); ++j)
    if (plan.elliptic_candidates[j].empty()) return result;  // no element of that order

  const auto firsts = first_slot_values(plan);
  if (threads <= 1 || firsts.size() < 2) {
    enumerate_rec(plan,
                  [&](const PackedVec& p) {
                    result.vectors.push_back(p);
                    return true;
                  },
                  -1);
    return result;
  }
  // One bucket per value of the outermost slot; buckets are concatenated in
  // slot order, so the output is identical for every thread count.
  std::vector<std::vector<PackedVec>> buckets(firsts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= firsts.size()) return;
      enumerate_rec(plan,
                    [&](const PackedVec& p) {
                      buckets[i].push_back(p);
                      return true;
                    },
                    firsts[i]);
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = std::min<int>(threads, int(firsts.size()));
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& b : buckets)
    result.vectors.insert(result.vectors.end(), b.begin(), b.end());
  return result;
}

std::uint64_t count_vectors(const Group& g, const Signature& sig, int threads) {
  return enumerate_vectors(g, sig, threads).vectors.size();
}

bool any_vector_exists(const Group& g, const Signature& sig) {
  return first_vector(g, sig).has_value();
}

std::optional<PackedVec> first_vector(const Group& g, const Signature& sig) {
  if (!try_rh_genus(sig, g.order)) return std::nullopt;
  const EnumPlan plan = make_plan(g, sig);
  for (int j = 0; j < sig.l(); ++j)
    if (plan.elliptic_candidates[j].empty()) return std::nullopt;
  std::optional<PackedVec> found;
  enumerate_rec(plan,
                [&](const PackedVec& p) {
                  found = p;
                  return false;
                },
                -1);
  return found;
}

std::uint64_t vector_search_size(const Group& g, const Signature& sig) {
  const EnumPlan plan = make_plan(g, sig);
  const int l = sig.l();
  std::uint64_t total = 1;
  auto mul_sat = [&](std::uint64_t f) {
    if (f == 0) {
      total = 0;
      return;
    }
    if (total > UINT64_MAX / f) total = UINT64_MAX;
    else total *= f;
  };
  for (int i = 0; i < 2 * sig.h; ++i) mul_sat(g.order);
  for (int j = 0; j + (l >= 1 ? 1 : 0) < l; ++j)
    mul_sat(plan.elliptic_candidates[j].size());
  return total;
}

}  // namespace equisym
