#include <doctest.h>

#include <set>

#include "lieperm/weyl.hpp"

using namespace lieperm;
using namespace lieperm::weyl;

TEST_CASE("group orders match the classical formulas") {
  auto order_of = [](const char* s) { return WeylGroup::generate(rootsys::LieType::parse(s)).order(); };
  CHECK(order_of("A1") == 2);
  CHECK(order_of("A2") == 6);
  CHECK(order_of("A3") == 24);
  CHECK(order_of("A4") == 120);
  CHECK(order_of("B2") == 8);
  CHECK(order_of("B3") == 48);
  CHECK(order_of("C3") == 48);
  CHECK(order_of("D4") == 192);
  CHECK(order_of("G2") == 12);
  CHECK(order_of("F4") == 1152);
}

TEST_CASE("element orders: every matrix has the recorded multiplicative order") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto W = WeylGroup::generate(rootsys::LieType::parse(name));
    const int n = W.type().rank();
    for (size_t i = 0; i < W.order(); ++i) {
      const IMat& m = W.elements()[i];
      int ord = W.element_order(i);
      CHECK(ord >= 1);
      IMat acc = IMat::identity(n);
      for (int rep = 0; rep < ord; ++rep) acc = acc * m;
      CHECK(acc == IMat::identity(n));
      if (ord > 1) {
        IMat prev = IMat::identity(n);
        for (int rep = 0; rep + 1 < ord; ++rep) prev = prev * m;
        CHECK(!(prev == IMat::identity(n)));
      }
    }
  }
}

TEST_CASE("order sets") {
  auto set_of = [](const char* s) {
    return WeylGroup::generate(rootsys::LieType::parse(s)).order_set();
  };
  CHECK(set_of("A1") == std::vector<int>{1, 2});
  CHECK(set_of("A2") == std::vector<int>{1, 2, 3});
  CHECK(set_of("B2") == std::vector<int>{1, 2, 4});
  CHECK(set_of("G2") == std::vector<int>{1, 2, 3, 6});
  CHECK(set_of("A4") == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("characteristic polynomial bookkeeping is consistent") {
  for (const char* name : {"A2", "B2", "A4", "G2"}) {
    auto W = WeylGroup::generate(rootsys::LieType::parse(name));
    const auto& set = W.charpoly_set();
    std::set<std::vector<int64_t>> uniq(set.begin(), set.end());
    CHECK(uniq.size() == set.size());  // genuinely distinct
    for (size_t i = 0; i < W.order(); ++i) {
      int id = W.charpoly_id(i);
      REQUIRE(id >= 0);
      REQUIRE(static_cast<size_t>(id) < set.size());
      CHECK(char_poly(W.elements()[i]) == set[id]);
    }
  }
  CHECK(WeylGroup::generate(rootsys::LieType::parse("A4")).charpoly_set().size() == 7);
  CHECK(WeylGroup::generate(rootsys::LieType::parse("G2")).charpoly_set().size() == 5);
}

TEST_CASE("identity element carries charpoly (x-1)^n") {
  auto W = WeylGroup::generate(rootsys::LieType::parse("A3"));
  // (x-1)^3 = -1 + 3x - 3x^2 + x^3, coefficients constant-first.
  bool found = false;
  for (const auto& cp : W.charpoly_set())
    if (cp == std::vector<int64_t>{-1, 3, -3, 1}) found = true;
  CHECK(found);
}

TEST_CASE("generation respects the safety cap") {
  CHECK_THROWS_AS(WeylGroup::generate(rootsys::LieType::parse("A4"), 10), BudgetError);
}

TEST_CASE("Weyl matrices permute the fundamental-orbit union") {
  auto t = rootsys::LieType::parse("B2");
  auto W = WeylGroup::generate(t);
  Weight w1(2);
  w1[0] = 1;
  auto orb = rootsys::orbit_of(t, w1);
  std::set<Weight, decltype([](const Weight& a, const Weight& b) { return a.cmp_lex(b) < 0; })>
      members(orb.begin(), orb.end());
  for (const auto& m : W.elements())
    for (const auto& w : orb) CHECK(members.count(m.apply(w)) == 1);
}
