#include "lieperm/excep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "lieperm/numtheory.hpp"
#include "lieperm/snf.hpp"

namespace lieperm::excep {

using rootsys::LieType;
using weyl::WeylGroup;

namespace {

mpz_class eval_charpoly(const std::vector<int64_t>& coeffs, uint64_t q) {
  mpz_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= static_cast<unsigned long>(q);
    acc += static_cast<long>(*it);
  }
  return acc;
}

void require_prime_power(uint64_t q, const char* who) {
  if (!numtheory::factor_prime_power(q))
    throw std::invalid_argument(std::string(who) + ": q = " + std::to_string(q) +
                                " is not a prime power");
}

}  // namespace

TheoremResult theorem_criterion(const WeylGroup& W, uint64_t q, int64_t k) {
  if (k < 2) throw std::invalid_argument("theorem_criterion: requires k >= 2");
  require_prime_power(q, "theorem_criterion");
  TheoremResult res{true, {}, std::nullopt};
  const auto& charpolys = W.charpoly_set();
  res.rows.reserve(charpolys.size());
  mpz_class kz(static_cast<long>(k));
  for (size_t id = 0; id < charpolys.size(); ++id) {
    mpz_class value = eval_charpoly(charpolys[id], q);
    mpz_class g = gcd(value, kz);
    if (g != 1 && res.holds) {
      res.holds = false;
      res.failing_charpoly_id = static_cast<int>(id);
    }
    res.rows.push_back(CharpolyRow{static_cast<int>(id), std::move(value), std::move(g)});
  }
  return res;
}

bool order_criterion(const WeylGroup& W, uint64_t q, int64_t k) {
  if (k < 1) throw std::invalid_argument("order_criterion: requires k >= 1");
  require_prime_power(q, "order_criterion");
  if (k == 1) return true;
  mpz_class kz(static_cast<long>(k));
  for (int s : W.order_set()) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(s));
    m -= 1;
    if (gcd(m, kz) != 1) return false;
  }
  return true;
}

namespace {

uint64_t checked_point_total(const ffield::FieldSpec& F, int n, uint64_t cap) {
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / F.q())
      throw BudgetError("enumeration cap exceeded: q^n > " + std::to_string(cap));
    total *= F.q();
  }
  if (total > cap)
    throw BudgetError("enumeration cap exceeded: q^n > " + std::to_string(cap));
  return total;
}

int resolve_threads(const BruteForceOptions& opt, uint64_t total) {
  int t = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  uint64_t chunks = total / 1024 + 1;
  if (static_cast<uint64_t>(t) > chunks) t = static_cast<int>(chunks);
  return t;
}

/// Iterates points of F_q^n with indices in [lo, hi), calling
/// fn(point_index, point_words) with the decoded coordinates.
template <typename Fn>
void walk_points(const ffield::FieldSpec& F, int n, uint64_t lo, uint64_t hi, Fn&& fn) {
  const int e = F.e();
  std::vector<uint32_t> point(static_cast<size_t>(n) * e);
  std::vector<uint64_t> digit(n);
  uint64_t rem = lo;
  for (int i = 0; i < n; ++i) {
    digit[i] = rem % F.q();
    rem /= F.q();
    F.from_index(digit[i], point.data() + static_cast<size_t>(i) * e);
  }
  for (uint64_t idx = lo; idx < hi; ++idx) {
    if (!fn(idx, point.data())) return;
    for (int i = 0; i < n; ++i) {
      if (++digit[i] < F.q()) {
        F.from_index(digit[i], point.data() + static_cast<size_t>(i) * e);
        break;
      }
      digit[i] = 0;
      std::fill_n(point.data() + static_cast<size_t>(i) * e, e, 0u);
    }
  }
}

uint64_t image_index(const ffield::FieldSpec& F, int n, const uint32_t* image) {
  uint64_t idx = 0;
  for (int i = n - 1; i >= 0; --i)
    idx = idx * F.q() + F.index_of(image + static_cast<size_t>(i) * F.e());
  return idx;
}

}  // namespace

BruteForceResult brute_force_is_permutation(const ffield::ReducedMap& M,
                                            const BruteForceOptions& opt) {
  const ffield::FieldSpec& F = M.field();
  const int n = M.rank();
  const uint64_t total = checked_point_total(F, n, opt.max_points);
  const int threads = resolve_threads(opt, total);
  const size_t words = static_cast<size_t>((total + 63) / 64);

  std::vector<std::vector<uint64_t>> bitmaps(threads, std::vector<uint64_t>(words, 0));
  std::atomic<bool> stop{false};

  auto worker = [&](int ti) {
    std::vector<uint64_t>& bm = bitmaps[ti];
    const uint64_t lo = total * ti / threads;
    const uint64_t hi = total * (ti + 1) / threads;
    ffield::ReducedMap::Scratch scratch = M.make_scratch();
    std::vector<uint32_t> image(static_cast<size_t>(n) * F.e());
    walk_points(F, n, lo, hi, [&](uint64_t, const uint32_t* point) {
      if (stop.load(std::memory_order_relaxed)) return false;
      M.evaluate_raw(point, image.data(), scratch);
      const uint64_t img = image_index(F, n, image.data());
      uint64_t& word = bm[img >> 6];
      const uint64_t bit = 1ull << (img & 63);
      if (word & bit) {  // collision inside this range: not a permutation
        stop.store(true, std::memory_order_relaxed);
        return false;
      }
      word |= bit;
      return true;
    });
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<uint64_t>& merged = bitmaps[0];
  for (int t = 1; t < threads; ++t)
    for (size_t w = 0; w < words; ++w) merged[w] |= bitmaps[t][w];
  uint64_t pop = 0;
  for (uint64_t w : merged) pop += static_cast<uint64_t>(__builtin_popcountll(w));
  return BruteForceResult{pop == total, pop};
}

BruteForceResult brute_force_is_permutation(const exppoly::PolyMap& P, const ffield::FieldSpec& F,
                                            const BruteForceOptions& opt) {
  return brute_force_is_permutation(ffield::ReducedMap(P, F), opt);
}

bool map_equals_frobenius(const ffield::ReducedMap& M, const BruteForceOptions& opt) {
  const ffield::FieldSpec& F = M.field();
  const int n = M.rank();
  const int e = F.e();
  const uint64_t total = checked_point_total(F, n, opt.max_points);
  ffield::ReducedMap::Scratch scratch = M.make_scratch();
  std::vector<uint32_t> image(static_cast<size_t>(n) * e), frob(e);
  bool equal = true;
  walk_points(F, n, 0, total,
              [&](uint64_t, const uint32_t* point) {
                M.evaluate_raw(point, image.data(), scratch);
                for (int i = 0; i < n; ++i) {
                  F.pow(point + static_cast<size_t>(i) * e, F.q(), frob.data());
                  for (int w = 0; w < e; ++w)
                    if (frob[w] != image[static_cast<size_t>(i) * e + w]) {
                      equal = false;
                      return false;
                    }
                }
                return true;
              });
  return equal;
}

bool frobenius_check(const LieType& t, const ffield::FieldSpec& F,
                     const exppoly::GenerationLimits& lim, const BruteForceOptions& opt) {
  if (F.q() > static_cast<uint64_t>(std::numeric_limits<int>::max()))
    throw std::invalid_argument("frobenius_check: q too large to use as a degree");
  exppoly::PolyMap P = exppoly::compute_P(t, static_cast<int>(F.q()), lim);
  return map_equals_frobenius(ffield::ReducedMap(P, F), opt);
}

namespace {

mpq_class frac_part(const mpq_class& v) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return v - mpq_class(fl);
}

/// Enumerates, for every group element, all torus points x with
/// (kI - A_w) x in Z^n; fn(element_index, x) sees each solution once.
template <typename Fn>
void enumerate_torus_solutions(const WeylGroup& W, int k, uint64_t max_solutions, Fn&& fn) {
  if (k < 2) throw std::invalid_argument("torus enumeration requires k >= 2");
  const int n = W.type().rank();
  uint64_t seen = 0;
  for (size_t widx = 0; widx < W.order(); ++widx) {
    const IMat torus_action = W.elements()[widx].transpose().inverse_unimodular();
    MpzMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (i == j ? k : 0) - static_cast<long>(torus_action.at(i, j));
    SmithResult snf = smith_normal_form(std::move(m));
    // prod(diag) = |det(kI - A_w)| = |chi_{A_w}(k)|; cheap cross-check.
    mpz_class prod = 1;
    for (const mpz_class& d : snf.diag) prod *= d;
    mpz_class chi = eval_charpoly(char_poly(torus_action), static_cast<uint64_t>(k));
    if (prod != abs(chi))
      throw std::logic_error("torus enumeration: solution count != |charpoly(k)|");
    if (prod > static_cast<unsigned long>(max_solutions - seen))
      throw BudgetError("torus solution budget exceeded (" + std::to_string(max_solutions) + ")");
    uint64_t count = prod.get_ui();
    seen += count;

    std::vector<uint64_t> d(n), mcur(n, 0);
    for (int i = 0; i < n; ++i) d[i] = snf.diag[i].get_ui();
    std::vector<mpq_class> x(n);
    for (uint64_t step = 0; step < count; ++step) {
      for (int j = 0; j < n; ++j) {
        mpq_class acc = 0;
        for (int i = 0; i < n; ++i) {
          if (mcur[i] == 0) continue;
          acc += mpq_class(snf.col_transform.at(j, i)) *
                 mpq_class(static_cast<unsigned long>(mcur[i]), static_cast<unsigned long>(d[i]));
        }
        acc.canonicalize();
        x[j] = frac_part(acc);
      }
      fn(widx, x);
      for (int i = 0; i < n; ++i) {
        if (++mcur[i] < d[i]) break;
        mcur[i] = 0;
      }
    }
  }
}

double cluster_distance(const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b) {
  double dist = 0;
  for (size_t i = 0; i < a.size(); ++i) dist = std::max(dist, std::abs(a[i] - b[i]));
  return dist;
}

}  // namespace

FixedPointSet fixed_points(const WeylGroup& W, int k, const FixedPointOptions& opt) {
  const LieType& t = W.type();
  const int n = t.rank();
  FixedPointSet out{t, k, {}};
  std::vector<double> xd(n);
  enumerate_torus_solutions(W, k, opt.max_solutions,
                            [&](size_t widx, const std::vector<mpq_class>& x) {
                              for (int i = 0; i < n; ++i) xd[i] = x[i].get_d();
                              auto phi = exppoly::evaluate_orbit_sums(t, xd);
                              for (const FixedPoint& fp : out.points)
                                if (cluster_distance(fp.value, phi) <= opt.dedup_tol) return;
                              out.points.push_back(FixedPoint{std::move(phi), widx, x});
                            });
  for (size_t a = 0; a < out.points.size(); ++a)
    for (size_t b = a + 1; b < out.points.size(); ++b) {
      double dist = cluster_distance(out.points[a].value, out.points[b].value);
      if (dist < opt.guard_band)
        throw std::runtime_error(
            "fixed_points: dedup ambiguity, distinct clusters at distance " +
            std::to_string(dist) + " — tolerance review required");
    }
  uint64_t expect = 1;
  for (int i = 0; i < n; ++i) expect *= static_cast<uint64_t>(k);
  if (out.points.size() != expect)
    throw std::logic_error("fixed_points: found " + std::to_string(out.points.size()) +
                           " distinct values, expected k^n = " + std::to_string(expect));
  return out;
}

FixedPointSet fixed_points(const LieType& t, int k, const FixedPointOptions& opt) {
  return fixed_points(WeylGroup::generate(t), k, opt);
}

bool denominator_check(const WeylGroup& W, int k, const FixedPointOptions& opt) {
  bool ok = true;
  enumerate_torus_solutions(W, k, opt.max_solutions,
                            [&](size_t widx, const std::vector<mpq_class>& x) {
                              if (!ok) return;
                              mpz_class bound;
                              mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(k),
                                            static_cast<unsigned long>(W.element_order(widx)));
                              bound -= 1;
                              for (const mpq_class& c : x)
                                if (bound % c.get_den() != 0) {
                                  ok = false;
                                  return;
                                }
                            });
  return ok;
}

bool denominator_check(const LieType& t, int k, const FixedPointOptions& opt) {
  return denominator_check(WeylGroup::generate(t), k, opt);
}

ExceptionalCertificate search_exceptional(const WeylGroup& W, int num_primes) {
  const std::vector<int>& orders = W.order_set();
  const int smax = orders.back();
  uint64_t ell = static_cast<uint64_t>(smax) + 2;
  while (!numtheory::is_prime(ell)) ++ell;
  const uint64_t root = numtheory::smallest_primitive_root(ell);
  ExceptionalCertificate cert{W.type(),           static_cast<int64_t>(ell), ell, root,
                              orders,             {}};
  cert.verified_primes = numtheory::primes_in_class(root, ell, num_primes);
  for (uint64_t p : cert.verified_primes) {
    if (!order_criterion(W, p, cert.k) || !theorem_criterion(W, p, cert.k).holds)
      throw std::logic_error("search_exceptional: certificate failed re-verification at p = " +
                             std::to_string(p));
  }
  return cert;
}

ExceptionalCertificate search_exceptional(const LieType& t, int num_primes) {
  return search_exceptional(WeylGroup::generate(t), num_primes);
}

CriterionReport CriterionReport::make(LieType type, int64_t k, uint64_t q, TheoremResult theorem,
                                      bool order_holds, std::optional<bool> brute) {
  if (order_holds && !theorem.holds)
    throw std::logic_error("CriterionReport: order criterion held but matrix criterion failed");
  if (brute.has_value() && *brute != theorem.holds)
    throw std::logic_error("CriterionReport: exhaustive verdict contradicts the matrix criterion");
  return CriterionReport{std::move(type), k,
                         q,               theorem.holds,
                         order_holds,     std::move(theorem.rows),
                         theorem.failing_charpoly_id, brute};
}

CriterionReport full_report(const LieType& t, int64_t k, const ffield::FieldSpec& F,
                            bool with_brute_force, const exppoly::GenerationLimits& lim,
                            const BruteForceOptions& opt) {
  WeylGroup W = WeylGroup::generate(t);
  TheoremResult theorem = theorem_criterion(W, F.q(), k);
  bool order_holds = order_criterion(W, F.q(), k);
  std::optional<bool> brute;
  if (with_brute_force) {
    if (k > std::numeric_limits<int>::max())
      throw std::invalid_argument("full_report: k too large for map generation");
    exppoly::PolyMap P = exppoly::compute_P(t, static_cast<int>(k), lim);
    brute = brute_force_is_permutation(P, F, opt).is_permutation;
  }
  return CriterionReport::make(t, k, F.q(), std::move(theorem), order_holds, brute);
}

}  // namespace lieperm::excep
