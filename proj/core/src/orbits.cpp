#include "equisym/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "equisym/catalog.hpp"
#include "json.hpp"

namespace equisym {

namespace {

// One prepared generator of the equivalence closure: a mapping-class move
// or an automorphism applied entrywise.
struct PreparedGen {
  enum class Kind { Braid, BraidInv, BraidSq, PureTwist, A1, A2, C1, C2, Aut };
  Kind kind;
  int i = 0, j = 0;
  long long n = 0;
  const Automorphism* aut = nullptr;
};

void apply_gen(const Group& g, int hh, int l, const PreparedGen& gen, PackedVec& v) {
  switch (gen.kind) {
    case PreparedGen::Kind::Braid:
      detail::braid(g, v, hh, gen.i);
      break;
    case PreparedGen::Kind::BraidInv:
      detail::braid_inv(g, v, hh, gen.i);
      break;
    case PreparedGen::Kind::BraidSq:
      detail::braid(g, v, hh, gen.i);
      detail::braid(g, v, hh, gen.i);
      break;
    case PreparedGen::Kind::PureTwist:
      // Band generator A_{ij}: walk strand j down next to i, full twist,
      // walk back. Net strand permutation is trivial, so the period layout
      // is preserved for any mix of periods.
      for (int t = gen.j - 1; t > gen.i; --t) detail::braid(g, v, hh, t);
      detail::braid(g, v, hh, gen.i);
      detail::braid(g, v, hh, gen.i);
      for (int t = gen.i + 1; t <= gen.j - 1; ++t) detail::braid_inv(g, v, hh, t);
      break;
    case PreparedGen::Kind::A1:
      detail::a1(g, v, gen.n);
      break;
    case PreparedGen::Kind::A2:
      detail::a2(g, v, gen.n);
      break;
    case PreparedGen::Kind::C1:
      detail::c1(g, v, hh, l, gen.i);
      break;
    case PreparedGen::Kind::C2:
      detail::c2(g, v, hh, l, gen.i);
      break;
    case PreparedGen::Kind::Aut:
      detail::aut_image(*gen.aut, v);
      break;
  }
}

// The closure generators for (h, periods): adjacent braids where the two
// periods agree, full twists across every pair when periods are mixed
// (these generate the pure braid group), the genus-one A/C moves, and all
// automorphisms. Every generator is a bijection of the finite vector set,
// so the generated semigroup is a group and plain forward closure yields
// orbits.
std::vector<PreparedGen> build_generators(const Signature& sig,
                                          const std::vector<Automorphism>& auts) {
  std::vector<PreparedGen> gens;
  const int l = sig.l();
  const bool uniform =
      l == 0 || std::all_of(sig.periods.begin(), sig.periods.end(),
                            [&](int m) { return m == sig.periods[0]; });
  for (int i = 0; i + 1 < l; ++i) {
    if (sig.periods[i] == sig.periods[i + 1]) {
      gens.push_back({PreparedGen::Kind::Braid, i, 0, 0, nullptr});
      gens.push_back({PreparedGen::Kind::BraidInv, i, 0, 0, nullptr});
    } else {
      gens.push_back({PreparedGen::Kind::BraidSq, i, 0, 0, nullptr});
    }
  }
  if (!uniform) {
    for (int i = 0; i + 1 < l; ++i)
      for (int j = i + 1; j < l; ++j)
        gens.push_back({PreparedGen::Kind::PureTwist, i, j, 0, nullptr});
  }
  if (sig.h == 1) {
    gens.push_back({PreparedGen::Kind::A1, 0, 0, 1, nullptr});
    gens.push_back({PreparedGen::Kind::A1, 0, 0, -1, nullptr});
    gens.push_back({PreparedGen::Kind::A2, 0, 0, 1, nullptr});
    gens.push_back({PreparedGen::Kind::A2, 0, 0, -1, nullptr});
    for (int i = 0; i < l; ++i) {
      gens.push_back({PreparedGen::Kind::C1, i, 0, 0, nullptr});
      gens.push_back({PreparedGen::Kind::C2, i, 0, 0, nullptr});
    }
  }
  for (const auto& w : auts) {
    bool identity = true;
    for (std::size_t x = 0; x < w.map.size() && identity; ++x) identity = w.map[x] == Elem(x);
    if (!identity) gens.push_back({PreparedGen::Kind::Aut, 0, 0, 0, &w});
  }
  return gens;
}

void check_supported(const Signature& sig) {
  if (sig.h >= 2)
    throw CapabilityError(
        "no mapping-class move set is provided for quotient genus >= 2 (signature " + sig.str() +
        ")");
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = std::uint32_t(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;  // keep the least index as root
    else parent[a] = b;
  }
};

}  // namespace

StratumReport compute_orbits(const Group& g, const Signature& sig, int threads,
                             std::uint64_t search_limit) {
  check_supported(sig);
  const std::uint64_t est = vector_search_size(g, sig);
  if (est > search_limit)
    throw CapabilityError("orbit search would visit about " + std::to_string(est) +
                          " enumeration leaves, above the limit " + std::to_string(search_limit));

  StratumReport report;
  report.group_spec = g.spec_string();
  report.signature = sig;

  auto enumeration = enumerate_vectors(g, sig, threads);
  auto& vecs = enumeration.vectors;
  report.total_vectors = vecs.size();
  if (vecs.empty()) return report;

  const auto auts = automorphisms(g);
  const auto gens = build_generators(sig, auts);
  const int hh = 2 * sig.h;
  const int l = sig.l();

  std::unordered_map<PackedVec, std::uint32_t, PackedVecHash> index;
  index.reserve(vecs.size() * 2);
  for (std::uint32_t i = 0; i < vecs.size(); ++i) index.emplace(vecs[i], i);

  UnionFind uf(vecs.size());

  // Images are computed in fixed-size chunks; workers fill disjoint slices
  // of the chunk buffer, and unions are applied in index order afterwards,
  // so the partition is identical for every thread count.
  const std::size_t chunk = 1 << 15;
  std::vector<std::uint32_t> images(std::min(chunk, vecs.size()) * gens.size());
  for (std::size_t base = 0; base < vecs.size(); base += chunk) {
    const std::size_t count = std::min(chunk, vecs.size() - base);
    auto fill = [&](std::size_t lo, std::size_t hi) {
      PackedVec tmp;
      for (std::size_t k = lo; k < hi; ++k) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          tmp = vecs[base + k];
          apply_gen(g, hh, l, gens[gi], tmp);
          const auto it = index.find(tmp);
          if (it == index.end())
            throw std::logic_error("move image left the enumerated vector set; move set bug");
          images[k * gens.size() + gi] = it->second;
        }
      }
    };
    if (threads <= 1 || count < 1024) {
      fill(0, count);
    } else {
      const int n_threads = std::min<std::size_t>(threads, 16);
      std::vector<std::thread> pool;
      const std::size_t step = (count + n_threads - 1) / n_threads;
      for (int t = 0; t < n_threads; ++t) {
        const std::size_t lo = std::min(count, t * step), hi = std::min(count, lo + step);
        if (lo < hi) pool.emplace_back(fill, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t gi = 0; gi < gens.size(); ++gi)
        uf.unite(std::uint32_t(base + k), images[k * gens.size() + gi]);
  }

  // Vectors are enumerated in lexicographic order, so the least index of a
  // class is its lexicographically least vector.
  std::unordered_map<std::uint32_t, std::uint64_t> sizes;
  for (std::uint32_t i = 0; i < vecs.size(); ++i) ++sizes[uf.find(i)];
  std::vector<std::uint32_t> roots;
  roots.reserve(sizes.size());
  for (const auto& [root, _] : sizes) roots.push_back(root);
  std::sort(roots.begin(), roots.end());
  for (std::uint32_t root : roots)
    report.orbits.push_back(OrbitClass{vecs[root], sizes[root]});
  return report;
}

namespace {

// Forward closure from a single vector (membership map built lazily).
// visit_target, when non-null, stops the walk early once seen.
bool orbit_walk(const GeneratingVector& start, const PackedVec* target, PackedVec* least_out) {
  check_supported(start.signature);
  const Group& g = *start.group;
  const auto auts = automorphisms(g);
  const auto gens = build_generators(start.signature, auts);
  const int hh = 2 * start.signature.h;
  const int l = start.signature.l();

  std::unordered_set<PackedVec, PackedVecHash> seen;
  std::vector<PackedVec> frontier{start.entries};
  seen.insert(start.entries);
  PackedVec least = start.entries;
  while (!frontier.empty()) {
    const PackedVec cur = frontier.back();
    frontier.pop_back();
    for (const auto& gen : gens) {
      PackedVec img = cur;
      apply_gen(g, hh, l, gen, img);
      if (seen.insert(img).second) {
        if (img < least) least = img;
        if (target && img == *target) return true;
        frontier.push_back(img);
      }
    }
  }
  if (least_out) *least_out = least;
  return target ? seen.count(*target) > 0 : true;
}

}  // namespace

bool are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2) {
  if (!v1.group || !v2.group || v1.group->spec_string() != v2.group->spec_string())
    fail("are_equivalent: vectors over different groups");
  if (!(v1.signature == v2.signature)) fail("are_equivalent: vectors with different signatures");
  if (v1.entries == v2.entries) return true;
  return orbit_walk(v1, &v2.entries, nullptr);
}

PackedVec canonical_representative(const GeneratingVector& vec) {
  PackedVec least;
  orbit_walk(vec, nullptr, &least);
  return least;
}

namespace {

std::string sanitize(const std::string& key) {
  std::string out;
  for (char c : key)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
  return out;
}

std::string cache_path(const std::string& dir, const std::string& group_spec,
                       const Signature& sig) {
  return dir + "/" + sanitize(group_spec + "_" + sig.str()) + ".json";
}

}  // namespace

std::string report_to_json(const StratumReport& report, const Group& g) {
  nlohmann::json j;
  j["group"] = report.group_spec;
  j["signature"] = report.signature.str();
  j["move_set_version"] = report.move_set_version;
  j["total_vectors"] = report.total_vectors;
  j["orbit_count"] = report.orbit_count();
  auto orbits = nlohmann::json::array();
  for (const auto& o : report.orbits) {
    GeneratingVector v{&g, report.signature, o.representative};
    orbits.push_back({{"representative", v.str()}, {"size", o.size}});
  }
  j["orbits"] = orbits;
  return j.dump(2);
}

std::optional<StratumReport> load_cached_report(const std::string& cache_dir,
                                                const std::string& group_spec,
                                                const Signature& sig) {
  const auto path = cache_path(cache_dir, group_spec, sig);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (j.value("move_set_version", -1) != kMoveSetVersion) return std::nullopt;
  if (j.value("group", "") != group_spec || j.value("signature", "") != sig.str())
    return std::nullopt;
  StratumReport report;
  report.group_spec = group_spec;
  report.signature = sig;
  report.total_vectors = j.value("total_vectors", std::uint64_t(0));
  Group g = build_group(group_spec);
  for (const auto& o : j["orbits"]) {
    const auto vec = GeneratingVector::parse(g, sig, o.at("representative").get<std::string>());
    report.orbits.push_back(OrbitClass{vec.entries, o.at("size").get<std::uint64_t>()});
  }
  return report;
}

void store_cached_report(const std::string& cache_dir, const StratumReport& report) {
  std::filesystem::create_directories(cache_dir);
  Group g = build_group(report.group_spec);
  std::ofstream out(cache_path(cache_dir, report.group_spec, report.signature));
  out << report_to_json(report, g) << "\n";
}

}  // namespace equisym
