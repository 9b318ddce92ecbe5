#include <algorithm>
#include <set>

#include "doctest.h"
#include "equisym/catalog.hpp"
#include "equisym/orbits.hpp"

using namespace equisym;

namespace {

GeneratingVector vec_of(const Group& g, const Signature& sig, const std::string& text) {
  return GeneratingVector::parse(g, sig, text);
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("braid example: Phi_5 on (s,s,s,sr,sr,s)") {
  const Group d5 = make_dihedral(5);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto v = vec_of(d5, sig, "-;s,s,s,sr,sr,s");
  const auto moved = apply_move(v, Move::braid(5));
  CHECK(moved.str() == "-;s,s,s,sr,s,sr^4");  // sr^4 = s r^-1
}

TEST_CASE("braid then inverse braid is the identity (exhaustive on a small case)") {
  const Group d3 = make_dihedral(3);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto vecs = enumerate_vectors(d3, sig).vectors;
  REQUIRE(!vecs.empty());
  for (const auto& p : vecs) {
    const GeneratingVector v{&d3, sig, p};
    for (int i = 1; i < sig.l(); ++i) {
      CHECK(apply_move(apply_move(v, Move::braid(i)), Move::braid_inv(i)).entries == p);
      CHECK(apply_move(apply_move(v, Move::braid_inv(i)), Move::braid(i)).entries == p);
    }
  }
}

TEST_CASE("A1(1) multiplies b_1 by a_1") {
  const Group c4 = make_cyclic(4);
  const auto v = vec_of(c4, Signature(1, {2, 2, 2, 2}), "t,1;t^2,t^2,t^2,t^2");
  CHECK(apply_move(v, Move::a1(1)).str() == "t,t;t^2,t^2,t^2,t^2");
}

TEST_CASE("moves preserve the surface-kernel invariants") {
  const Group d3 = make_dihedral(3);
  const Signature sig(1, {2, 2, 2, 2});
  const auto vecs = enumerate_vectors(d3, sig).vectors;
  REQUIRE(!vecs.empty());
  std::vector<Move> moves;
  for (int i = 1; i < sig.l(); ++i) {
    moves.push_back(Move::braid(i));
    moves.push_back(Move::braid_inv(i));
    moves.push_back(Move::braid_sq(i));
  }
  for (long long n : {1, -1, 3}) {
    moves.push_back(Move::a1(n));
    moves.push_back(Move::a2(n));
  }
  for (int i = 1; i <= sig.l(); ++i) {
    moves.push_back(Move::c1(i));
    moves.push_back(Move::c2(i));
  }
  for (const auto& p : vecs) {
    const GeneratingVector v{&d3, sig, p};
    for (const auto& m : moves) {
      CAPTURE(m.str());
      const auto out = apply_move(v, m);
      CHECK(is_surface_kernel(out).ok);
    }
  }
}

TEST_CASE("braid squares stay valid across a period boundary, single braids do not") {
  const Group d5 = make_dihedral(5);
  const Signature sig(0, {2, 2, 2, 2, 2, 2, 5});
  const auto v = vec_of(d5, sig, "-;s,s,s,s,s,sr,r^4");
  CHECK_THROWS_AS(apply_move(v, Move::braid(6)), ValidationError);
  const auto out = apply_move(v, Move::braid_sq(6));
  CHECK(is_surface_kernel(out).ok);
}

TEST_CASE("move indices are range-checked") {
  const Group d5 = make_dihedral(5);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto v = vec_of(d5, sig, "-;s,s,s,s,sr,sr");
  CHECK_THROWS_AS(apply_move(v, Move::braid(6)), ValidationError);
  CHECK_THROWS_AS(apply_move(v, Move::braid(0)), ValidationError);
  CHECK_THROWS_AS(apply_move(v, Move::a1(1)), ValidationError);  // needs h = 1
  CHECK_THROWS_AS(apply_move(v, Move::c1(1)), ValidationError);
}

TEST_CASE("automorphism action") {
  const Group d5 = make_dihedral(5);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto auts = automorphisms(d5);
  SUBCASE("phi_{1,-1} sends sr to s") {
    // phi_{alpha,beta}: r -> r^alpha, s -> s r^beta. Find phi_{1,4}: sr -> s r^{4+1} = s.
    const auto v = vec_of(d5, sig, "-;s,s,s,s,sr,sr");
    bool found = false;
    for (const auto& w : auts) {
      if (w(parse_element(d5, "r")) == parse_element(d5, "r") &&
          w(parse_element(d5, "s")) == parse_element(d5, "sr^4")) {
        const auto out = apply_automorphism(v, w);
        CHECK(out.str() == "-;sr^4,sr^4,sr^4,sr^4,s,s");
        found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("identity automorphism is the identity on vectors") {
    const auto v = vec_of(d5, sig, "-;s,s,s,s,sr,sr");
    for (const auto& w : auts) {
      bool identity = true;
      for (int x = 0; x < d5.order; ++x) identity = identity && w(Elem(x)) == Elem(x);
      if (identity) CHECK(apply_automorphism(v, w).entries == v.entries);
    }
  }
  SUBCASE("automorphisms commute with braids on vectors") {
    const auto vecs = enumerate_vectors(d5, sig).vectors;
    const GeneratingVector v{&d5, sig, vecs.front()};
    for (const auto& w : auts)
      for (int i = 1; i < sig.l(); ++i) {
        const auto a = apply_move(apply_automorphism(v, w), Move::braid(i));
        const auto b = apply_automorphism(apply_move(v, Move::braid(i)), w);
        CHECK(a.entries == b.entries);
      }
  }
}

TEST_CASE("orbit counts for the three-dimensional dihedral family") {
  SUBCASE("q = 5: one orbit") {
    const auto report = compute_orbits(make_dihedral(5), Signature(0, {2, 2, 2, 2, 2, 2}));
    CHECK(report.orbit_count() == 1);
    CHECK(report.total_vectors == 3120);
    const Group d5 = make_dihedral(5);
    GeneratingVector rep{&d5, report.signature, report.orbits[0].representative};
    CHECK(rep.str() == "-;s,s,s,s,sr,sr");
  }
  SUBCASE("Klein four-group: two orbits, the second represented by (s,s,r,r,sr,sr)") {
    const Group d2 = make_dihedral(2);
    const Signature sig(0, {2, 2, 2, 2, 2, 2});
    const auto report = compute_orbits(d2, sig);
    REQUIRE(report.orbit_count() == 2);
    std::uint64_t total = 0;
    for (const auto& o : report.orbits) total += o.size;
    CHECK(total == report.total_vectors);
    const auto v1 = vec_of(d2, sig, "-;s,s,s,s,sr,sr");
    const auto v2 = vec_of(d2, sig, "-;s,s,r,r,sr,sr");
    CHECK(!are_equivalent(v1, v2));
    const auto c1 = canonical_representative(v1);
    const auto c2 = canonical_representative(v2);
    CHECK(c1 != c2);
    std::set<PackedVec> reps{report.orbits[0].representative, report.orbits[1].representative};
    CHECK(reps == std::set<PackedVec>{c1, c2});
  }
}

TEST_CASE("orbit partition is independent of the thread count") {
  const Group d4 = make_dihedral(4);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto r1 = compute_orbits(d4, sig, 1);
  const auto r4 = compute_orbits(d4, sig, 4);
  REQUIRE(r1.orbit_count() == r4.orbit_count());
  for (std::size_t i = 0; i < r1.orbits.size(); ++i) {
    CHECK(r1.orbits[i].representative == r4.orbits[i].representative);
    CHECK(r1.orbits[i].size == r4.orbits[i].size);
  }
}

TEST_CASE("equivalence witnesses from the q prime reduction") {
  const Group d5 = make_dihedral(5);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto t1 = vec_of(d5, sig, "-;s,s,s,sr,s,sr^4");
  const auto t2 = vec_of(d5, sig, "-;s,s,s,sr,sr,s");
  CHECK(are_equivalent(t1, t2));
  CHECK(are_equivalent(t1, t1));
}

TEST_CASE("quotient genus >= 2 has no move set: capability error") {
  const Group d3 = make_dihedral(3);
  CHECK_THROWS_AS(compute_orbits(d3, Signature(2, {2, 2})), CapabilityError);
}

TEST_CASE("orbit search limit produces a capability error carrying the estimate") {
  const Group d5 = make_dihedral(5);
  try {
    compute_orbits(d5, Signature(0, {2, 2, 2, 2, 2, 2}), 1, /*search_limit=*/10);
    FAIL("expected capability error");
  } catch (const CapabilityError& e) {
    CHECK(std::string(e.what()).find("3125") != std::string::npos);
  }
}

TEST_CASE("stratum cache round-trips and is invalidated by version") {
  const Group d2 = make_dihedral(2);
  const Signature sig(0, {2, 2, 2, 2, 2, 2});
  const auto report = compute_orbits(d2, sig);
  const std::string dir = "cache_test_dir";
  store_cached_report(dir, report);
  const auto loaded = load_cached_report(dir, "D:2", sig);
  REQUIRE(loaded.has_value());
  CHECK(loaded->orbit_count() == report.orbit_count());
  CHECK(loaded->total_vectors == report.total_vectors);
  CHECK(loaded->orbits[0].representative == report.orbits[0].representative);
  CHECK(!load_cached_report(dir, "D:3", sig).has_value());
}

}  // TEST_SUITE
