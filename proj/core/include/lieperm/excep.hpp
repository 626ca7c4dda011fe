#pragma once

#include <complex>
#include <optional>

#include "lieperm/chevalley.hpp"
#include "lieperm/ffield.hpp"
#include "lieperm/weyl.hpp"

namespace lieperm::excep {

/// One evaluation row of the matrix criterion: the id-th distinct
/// characteristic polynomial evaluated at q, and its gcd with k.
struct CharpolyRow {
  int charpoly_id;
  mpz_class value;
  mpz_class gcd_with_k;
};

struct TheoremResult {
  bool holds;
  std::vector<CharpolyRow> rows;
  std::optional<int> failing_charpoly_id;  // first row with gcd > 1
};

/// Matrix criterion: the reduced map permutes F_q^n iff gcd(chi_w(q), k) = 1
/// for every distinct characteristic polynomial chi_w of the group.
/// Requires k >= 2 and q a prime power >= 2 (k = 1 and q = 1 are rejected).
TheoremResult theorem_criterion(const weyl::WeylGroup& W, uint64_t q, int64_t k);

/// Element-order criterion (sufficient, not necessary): true iff
/// gcd(k, q^s - 1) = 1 for every element order s.  k = 1 is trivially true.
bool order_criterion(const weyl::WeylGroup& W, uint64_t q, int64_t k);

struct BruteForceOptions {
  uint64_t max_points = 10'000'000;  // cap on q^n
  int threads = 0;                   // 0 = hardware concurrency
};
struct BruteForceResult {
  bool is_permutation;
  uint64_t popcount;  // distinct images; equals q^n iff permutation
};

/// Exhaustive permutation test: evaluates the reduced map at every point of
/// F_q^n, marking images in an occupancy bitmap indexed by sum idx(v_i) q^i.
/// Point ranges run in parallel; the verdict is partition-independent.
BruteForceResult brute_force_is_permutation(const exppoly::PolyMap& P, const ffield::FieldSpec& F,
                                            const BruteForceOptions& opt = {});
BruteForceResult brute_force_is_permutation(const ffield::ReducedMap& M,
                                            const BruteForceOptions& opt = {});

/// True iff the reduced map agrees with coordinate-wise q-th powers on all of
/// F_q^n (the reduction of the degree-q map is the Frobenius).
bool map_equals_frobenius(const ffield::ReducedMap& M, const BruteForceOptions& opt = {});
bool frobenius_check(const rootsys::LieType& t, const ffield::FieldSpec& F,
                     const exppoly::GenerationLimits& lim = {}, const BruteForceOptions& opt = {});

struct FixedPointOptions {
  uint64_t max_solutions = 2'000'000;  // total torus solutions across W
  double dedup_tol = 1e-6;             // infinity-norm cluster radius
  double guard_band = 1e-5;            // distinct clusters closer -> hard error
};

/// One deduplicated fixed value of the degree-k map, with the provenance of
/// its first-found torus solution.
struct FixedPoint {
  std::vector<std::complex<double>> value;  // the invariant map at the solution
  size_t element_index;                     // w providing the first solution
  std::vector<mpq_class> torus;             // that solution, coordinates in [0,1)
};
struct FixedPointSet {
  rootsys::LieType type;
  int k;
  std::vector<FixedPoint> points;
};

/// Enumerates all torus points with (kI - A_w)x in Z^n over all w (A_w is the
/// inverse transpose of T_w: the action on torus coordinates), evaluates the
/// invariant map at each and deduplicates.  The result carries exactly k^n
/// points (enforced).  Throws on dedup ambiguity or when the solution count
/// exceeds the budget.  Requires k >= 2.
FixedPointSet fixed_points(const weyl::WeylGroup& W, int k, const FixedPointOptions& opt = {});
FixedPointSet fixed_points(const rootsys::LieType& t, int k, const FixedPointOptions& opt = {});

/// True iff every torus solution coordinate, in lowest terms, has denominator
/// dividing k^{order(w)} - 1 for its element w.
bool denominator_check(const weyl::WeylGroup& W, int k, const FixedPointOptions& opt = {});
bool denominator_check(const rootsys::LieType& t, int k, const FixedPointOptions& opt = {});

/// Constructive witness that some exponent k makes the map exceptional:
/// for every prime p = residue (mod modulus), gcd(k, p^s - 1) = 1 for all
/// element orders s, so the reduction permutes F_p^n for infinitely many p.
struct ExceptionalCertificate {
  rootsys::LieType type;
  int64_t k;                // the chosen exponent (= modulus, a prime)
  uint64_t modulus;         // the arithmetic-progression modulus
  uint64_t residue;         // a primitive root mod modulus
  std::vector<int> order_set;
  std::vector<uint64_t> verified_primes;
};

/// Picks the smallest prime ell with ell - 1 > max element order and the
/// smallest primitive root r mod ell, then re-verifies both criteria on the
/// first `num_primes` primes = r (mod ell).
ExceptionalCertificate search_exceptional(const weyl::WeylGroup& W, int num_primes = 5);
ExceptionalCertificate search_exceptional(const rootsys::LieType& t, int num_primes = 5);

/// Aggregated verdicts for one (type, k, q).  Construction enforces the two
/// structural laws: order_holds implies theorem_holds, and a present
/// brute-force verdict equals theorem_holds.
struct CriterionReport {
  rootsys::LieType type;
  int64_t k;
  uint64_t q;
  bool theorem_holds;
  bool order_holds;
  std::vector<CharpolyRow> rows;
  std::optional<int> failing_charpoly_id;
  std::optional<bool> brute_force;

  static CriterionReport make(rootsys::LieType type, int64_t k, uint64_t q, TheoremResult theorem,
                              bool order_holds, std::optional<bool> brute);
};

/// Runs theorem + order criteria (and optionally the exhaustive check) for
/// the type's Weyl group over F_q.
CriterionReport full_report(const rootsys::LieType& t, int64_t k, const ffield::FieldSpec& F,
                            bool with_brute_force, const exppoly::GenerationLimits& lim = {},
                            const BruteForceOptions& opt = {});

}  // namespace lieperm::excep
