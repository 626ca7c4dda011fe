#include <doctest.h>

#include <algorithm>
#include <set>

#include "lieperm/rootsys.hpp"

using namespace lieperm;
using namespace lieperm::rootsys;

TEST_CASE("type parsing accepts the supported catalogue and nothing else") {
  CHECK(LieType::parse("A1").rank() == 1);
  CHECK(LieType::parse("B6").rank() == 6);
  CHECK(LieType::parse("G2").rank() == 2);
  CHECK(LieType::parse("F4").rank() == 4);
  // A1..A6, B2..B6, C2..C6, D3..D6, G2, F4.
  CHECK(LieType::all_supported().size() == 22);
  CHECK_THROWS_AS(LieType::parse("E8"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("A7"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(LieType::parse("A0"), std::invalid_argument);
}

TEST_CASE("Cartan determinants match the classical index of connection") {
  auto det_of = [](const char* s) { return LieType::parse(s).cartan_det(); };
  CHECK(det_of("A1") == 2);
  CHECK(det_of("A4") == 5);
  CHECK(det_of("A6") == 7);
  CHECK(det_of("B2") == 2);
  CHECK(det_of("B5") == 2);
  CHECK(det_of("C4") == 2);
  CHECK(det_of("D4") == 4);
  CHECK(det_of("D6") == 4);
  CHECK(det_of("G2") == 1);
  CHECK(det_of("F4") == 1);
}

TEST_CASE("simple reflections are involutions fixing nothing dominant-regular") {
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto t = LieType::parse(name);
    const int n = t.rank();
    Weight rho(n);
    for (int i = 0; i < n; ++i) rho[i] = 1;
    for (int i = 0; i < n; ++i) {
      Weight once = apply_simple_reflection(t, i, rho);
      CHECK(once != rho);
      CHECK(apply_simple_reflection(t, i, once) == rho);
      // s_i(rho) = rho - alpha_i in the weight basis.
      CHECK(once == rho - simple_root_in_weight_basis(t, i));
    }
  }
}

TEST_CASE("fundamental orbit sizes match classical counts") {
  auto orbit_size = [](const char* s, int j) {
    auto t = LieType::parse(s);
    Weight w(t.rank());
    w[j] = 1;
    return orbit_of(t, w).size();
  };
  CHECK(orbit_size("A1", 0) == 2);
  CHECK(orbit_size("A2", 0) == 3);
  CHECK(orbit_size("A2", 1) == 3);
  CHECK(orbit_size("A3", 0) == 4);
  CHECK(orbit_size("A3", 1) == 6);
  CHECK(orbit_size("A3", 2) == 4);
  CHECK(orbit_size("B2", 0) == 4);
  CHECK(orbit_size("B2", 1) == 4);
  CHECK(orbit_size("B3", 0) == 6);
  CHECK(orbit_size("B3", 2) == 8);
  CHECK(orbit_size("G2", 0) == 6);
  CHECK(orbit_size("G2", 1) == 6);
  CHECK(orbit_size("D4", 0) == 8);
  CHECK(orbit_size("F4", 0) == 24);
  CHECK(orbit_size("F4", 3) == 24);
}

TEST_CASE("orbits are closed under every simple reflection") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    auto t = LieType::parse(name);
    Weight seed(t.rank());
    seed[0] = 2;
    if (t.rank() > 1) seed[1] = 1;
    auto orb = orbit_of(t, seed);
    std::set<Weight, decltype([](const Weight& a, const Weight& b) { return a.cmp_lex(b) < 0; })>
        members(orb.begin(), orb.end());
    CHECK(members.size() == orb.size());  // no duplicates
    for (const Weight& w : orb)
      for (int i = 0; i < t.rank(); ++i)
        CHECK(members.count(apply_simple_reflection(t, i, w)) == 1);
  }
}

TEST_CASE("dominant representative is the unique dominant orbit member") {
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    auto t = LieType::parse(name);
    Weight seed(t.rank());
    seed[0] = 1;
    seed[t.rank() - 1] = 2;
    auto orb = orbit_of(t, seed);
    int dominant_count = 0;
    for (const Weight& w : orb) {
      if (is_dominant(w)) ++dominant_count;
      CHECK(dominant_representative(t, w) == seed);
    }
    CHECK(dominant_count == 1);
  }
}

TEST_CASE("dominance order: mu <= lambda iff lambda - mu is a nonneg root combo") {
  auto a2 = LieType::parse("A2");
  Weight zero(2);
  Weight theta(2);  // highest root of A2 = alpha_1 + alpha_2 = omega_1 + omega_2
  theta[0] = 1;
  theta[1] = 1;
  CHECK(dominance_leq(a2, zero, theta));
  CHECK(!dominance_leq(a2, theta, zero));
  CHECK(dominance_leq(a2, theta, theta));
  // omega_1 and omega_2 differ by a non-integral root combination in A2.
  Weight w1(2), w2(2);
  w1[0] = 1;
  w2[1] = 1;
  CHECK(!dominance_leq(a2, w1, w2));
  CHECK(!dominance_leq(a2, w2, w1));

  // Simple roots themselves sit above zero, in every type.
  for (const char* name : {"B2", "C3", "D4", "G2", "F4"}) {
    auto t = LieType::parse(name);
    Weight z(t.rank());
    for (int i = 0; i < t.rank(); ++i) {
      CHECK(dominance_leq(t, z, simple_root_in_weight_basis(t, i)));
      CHECK(!dominance_leq(t, simple_root_in_weight_basis(t, i), z));
    }
  }
}

TEST_CASE("scaled height is linear and positive on dominant nonzero weights") {
  for (const char* name : {"A2", "B3", "F4"}) {
    auto t = LieType::parse(name);
    const int n = t.rank();
    for (int j = 0; j < n; ++j) {
      Weight w(n);
      w[j] = 1;
      CHECK(scaled_height(t, w) > 0);
      Weight w2 = w + w;
      CHECK(scaled_height(t, w2) == 2 * scaled_height(t, w));
    }
  }
}
