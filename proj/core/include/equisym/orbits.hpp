#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equisym/moves.hpp"

namespace equisym {

struct OrbitClass {
  PackedVec representative;  // lexicographically least vector of the orbit
  std::uint64_t size = 0;
};

// Orbit partition of all generating vectors of (group, signature) under
// the mapping-class moves combined with Aut(G): one orbit per topological
// class of actions (candidate equisymmetric stratum).
struct StratumReport {
  std::string group_spec;
  Signature signature;
  std::uint64_t total_vectors = 0;
  int move_set_version = kMoveSetVersion;
  std::vector<OrbitClass> orbits;  // sorted by representative

  std::uint64_t orbit_count() const { return orbits.size(); }
};

inline constexpr std::uint64_t kDefaultOrbitSearchLimit = 50'000'000;

// Enumerates all vectors and partitions them. Quotient genus >= 2 is a
// capability error (no move set is provided there), as is a search above
// `search_limit` enumeration leaves.
StratumReport compute_orbits(const Group& g, const Signature& sig, int threads = 1,
                             std::uint64_t search_limit = kDefaultOrbitSearchLimit);

// Same orbit test via closure from v1 (no full enumeration).
bool are_equivalent(const GeneratingVector& v1, const GeneratingVector& v2);

// Lexicographically least vector in the orbit of vec.
PackedVec canonical_representative(const GeneratingVector& vec);

// Stratum cache: one JSON file per (group spec, signature) key inside a
// directory. Entries with a different move-set version are ignored.
std::optional<StratumReport> load_cached_report(const std::string& cache_dir,
                                                const std::string& group_spec,
                                                const Signature& sig);
void store_cached_report(const std::string& cache_dir, const StratumReport& report);

std::string report_to_json(const StratumReport& report, const Group& g);

}  // namespace equisym
