#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lieperm/excep.hpp"

using namespace lieperm;
using namespace lieperm::excep;

namespace {
rootsys::LieType T(const char* s) { return rootsys::LieType::parse(s); }
}  // namespace

TEST_CASE("matrix criterion basics") {
  auto W = weyl::WeylGroup::generate(T("A1"));
  // chi values at q are q - 1 and q + 1; permutation iff gcd(k, q^2 - 1) = 1.
  CHECK(!theorem_criterion(W, 7, 3).holds);  // gcd(3, 48) = 3
  CHECK(theorem_criterion(W, 7, 5).holds);   // gcd(5, 48) = 1
  auto r = theorem_criterion(W, 7, 3);
  CHECK(r.rows.size() == W.charpoly_set().size());
  REQUIRE(r.failing_charpoly_id.has_value());
  CHECK(r.rows[*r.failing_charpoly_id].gcd_with_k > 1);
  CHECK_THROWS_AS(theorem_criterion(W, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(theorem_criterion(W, 1, 3), std::invalid_argument);
}

TEST_CASE("rank one: criterion collapses to gcd(k, q^2 - 1) = 1") {
  auto W = weyl::WeylGroup::generate(T("A1"));
  for (uint64_t q : {2, 3, 4, 5, 7, 9, 11, 13}) {
    mpz_class m = mpz_class(q) * q - 1;
    for (int64_t k = 2; k <= 15; ++k)
      CHECK(theorem_criterion(W, q, k).holds == (gcd(m, mpz_class(k)) == 1));
  }
}

TEST_CASE("order criterion implies the matrix criterion") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto W = weyl::WeylGroup::generate(T(name));
    for (int64_t k = 2; k <= 10; ++k)
      for (uint64_t q : {2, 3, 4, 5, 7, 9}) {
        bool oc = order_criterion(W, q, k);
        bool tc = theorem_criterion(W, q, k).holds;
        if (oc) CHECK(tc);
      }
  }
}

TEST_CASE("exhaustive image counts") {
  // Degree 3 in rank one is X^3 - 3X; over F_7 its image is {0, 2, 3, 4, 5}
  // (0,1,2,3,4,5,6 map to 0,5,2,4,3,5,2), so 5 of 7 values are hit.
  auto P = exppoly::compute_P(T("A1"), 3);
  auto F = ffield::FieldSpec::from_order(7);
  auto res = brute_force_is_permutation(P, F);
  CHECK(!res.is_permutation);
  CHECK(res.popcount == 5);

  // Degree 5 on F_7: gcd(5, 48) = 1, a genuine permutation.
  auto res5 = brute_force_is_permutation(exppoly::compute_P(T("A1"), 5), F);
  CHECK(res5.is_permutation);
  CHECK(res5.popcount == 7);
}

TEST_CASE("exhaustive check respects the point budget") {
  auto P = exppoly::compute_P(T("B2"), 3);
  auto F = ffield::FieldSpec::from_order(9);
  BruteForceOptions opt;
  opt.max_points = 80;  // 9^2 = 81 exceeds it
  CHECK_THROWS_AS(brute_force_is_permutation(P, F, opt), BudgetError);
}

TEST_CASE("verdicts are thread-count independent") {
  auto P = exppoly::compute_P(T("A2"), 5);
  auto F = ffield::FieldSpec::from_order(7);
  ffield::ReducedMap M(P, F);
  BruteForceOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto a = brute_force_is_permutation(M, one);
  auto b = brute_force_is_permutation(M, four);
  CHECK(a.is_permutation == b.is_permutation);
  CHECK(a.popcount == b.popcount);
}

TEST_CASE("degree-q reduction is the Frobenius; other degrees are not") {
  CHECK(frobenius_check(T("A1"), ffield::FieldSpec::from_order(5)));
  CHECK(frobenius_check(T("A2"), ffield::FieldSpec::from_order(4)));
  CHECK(frobenius_check(T("B2"), ffield::FieldSpec::from_order(3)));

  // Degree 2 over F_3 is not the Frobenius: X^2 - 2 sends 0 to 1, Frobenius keeps 0.
  auto P = exppoly::compute_P(T("A1"), 2);
  ffield::ReducedMap M(P, ffield::FieldSpec::from_order(3));
  CHECK(!map_equals_frobenius(M));
}

TEST_CASE("fixed points: counts, values, provenance") {
  auto fp2 = fixed_points(T("A1"), 2);
  REQUIRE(fp2.points.size() == 2);
  std::vector<double> vals;
  for (const auto& p : fp2.points) {
    CHECK(std::abs(p.value[0].imag()) < 1e-9);
    vals.push_back(p.value[0].real());
  }
  std::sort(vals.begin(), vals.end());
  CHECK(std::abs(vals[0] + 1.0) < 1e-9);
  CHECK(std::abs(vals[1] - 2.0) < 1e-9);

  auto fp3 = fixed_points(T("A1"), 3);
  REQUIRE(fp3.points.size() == 3);
  vals.clear();
  for (const auto& p : fp3.points) vals.push_back(p.value[0].real());
  std::sort(vals.begin(), vals.end());
  CHECK(std::abs(vals[0] + 2.0) < 1e-9);
  CHECK(std::abs(vals[1] - 0.0) < 1e-9);
  CHECK(std::abs(vals[2] - 2.0) < 1e-9);

  auto W = weyl::WeylGroup::generate(T("A2"));
  auto fp = fixed_points(W, 3);
  CHECK(fp.points.size() == 9);
  for (const auto& p : fp.points) {
    REQUIRE(p.element_index < W.order());
    // Torus coordinates lie in [0, 1) with denominators dividing k^ord - 1.
    mpz_class bound = 1;
    for (int rep = 0; rep < W.element_order(p.element_index); ++rep) bound *= 3;
    bound -= 1;
    for (const auto& c : p.torus) {
      CHECK(c >= 0);
      CHECK(c < 1);
      CHECK(bound % c.get_den() == 0);
    }
  }
}

TEST_CASE("fixed point enumeration respects the solution budget") {
  FixedPointOptions opt;
  opt.max_solutions = 3;
  CHECK_THROWS_AS(fixed_points(T("A2"), 3, opt), BudgetError);
}

TEST_CASE("denominator containment across the small grid") {
  for (const char* name : {"A1", "A2", "B2", "G2"})
    for (int k = 2; k <= 5; ++k) CHECK(denominator_check(T(name), k));
}

TEST_CASE("exceptional certificates") {
  auto c1 = search_exceptional(T("A1"));
  CHECK(c1.k == 5);
  CHECK(c1.modulus == 5);
  CHECK(c1.residue == 2);
  CHECK(c1.verified_primes == std::vector<uint64_t>{2, 7, 17, 37, 47});

  auto c2 = search_exceptional(T("B2"));
  CHECK(c2.k == 7);  // orders {1,2,4}: smallest prime ell with ell - 1 > 4
  CHECK(c2.residue == 3);
  CHECK(c2.verified_primes == std::vector<uint64_t>{3, 17, 31, 59, 73});

  // Independent re-verification of both criteria at each witness prime.
  auto W = weyl::WeylGroup::generate(T("B2"));
  for (uint64_t p : c2.verified_primes) {
    CHECK(theorem_criterion(W, p, c2.k).holds);
    CHECK(order_criterion(W, p, c2.k));
  }
}

TEST_CASE("report construction enforces the structural laws") {
  auto t = T("A1");
  auto W = weyl::WeylGroup::generate(t);
  auto th = theorem_criterion(W, 7, 5);  // holds
  CHECK_THROWS_AS(CriterionReport::make(t, 5, 7, th, true, false), std::logic_error);
  auto th2 = theorem_criterion(W, 7, 3);  // fails
  CHECK_THROWS_AS(CriterionReport::make(t, 3, 7, th2, true, std::nullopt), std::logic_error);
  auto ok = CriterionReport::make(t, 5, 7, th, true, true);
  CHECK(ok.theorem_holds);
  CHECK(ok.brute_force.has_value());
}

TEST_CASE("full report ties theorem and brute force together") {
  auto r = full_report(T("B2"), 3, ffield::FieldSpec::from_order(5), true);
  CHECK(r.theorem_holds == *r.brute_force);
  auto r2 = full_report(T("A2"), 5, ffield::FieldSpec::from_order(2), true);
  CHECK(r2.theorem_holds);
  CHECK(*r2.brute_force);
}
