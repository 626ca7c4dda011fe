#include "lieperm/chevalley.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace lieperm::exppoly {
namespace {

using rootsys::LieType;

struct OverflowSignal {};

inline int64_t chk_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline int64_t chk_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline int64_t chk_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}

inline void add_to(int64_t& t, int64_t x) { t = chk_add(t, x); }
inline void add_to(mpz_class& t, const mpz_class& x) { t += x; }
inline void add_to(mpq_class& t, const mpq_class& x) { t += x; }
inline void sub_mul(int64_t& t, int64_t c, int64_t m) { t = chk_sub(t, chk_mul(c, m)); }
inline void sub_mul(mpz_class& t, const mpz_class& c, const mpz_class& m) { t -= c * m; }
inline void sub_mul(mpq_class& t, const mpq_class& c, const mpq_class& m) { t -= c * m; }

/// The combinatorial skeleton of one reduction problem: all dominant weights
/// lying below at least one of the given ceilings in the dominance order,
/// sorted by descending (height, lex), plus per-generator translation tables
///   table(i)[v * |orbit_i| + b] = position of dominant_rep(weight(v) - orbit_i[b]),
/// or -1 when that weight falls outside the slice.
class ReductionFrame {
public:
  ReductionFrame(const LieType& t, const std::vector<Weight>& ceilings, size_t budget)
      : t_(t), n_(t.rank()) {
    for (int i = 0; i < n_; ++i) {
      Weight w(n_);
      w[i] = 1;
      orbits_[i] = rootsys::orbit_of(t_, w);
      fund_height_[i] = rootsys::scaled_height(t_, w);
    }
    int64_t hmax = 0;
    for (const Weight& c : ceilings) hmax = std::max(hmax, rootsys::scaled_height(t_, c));
    Weight cur(n_);
    scan(0, cur, hmax, ceilings, budget);
    std::sort(weights_.begin(), weights_.end(), [&](const Weight& a, const Weight& b) {
      return rootsys::cmp_height_lex(t_, a, b) > 0;
    });
    pos_.reserve(weights_.size() * 2);
    for (size_t i = 0; i < weights_.size(); ++i) pos_[weights_[i]] = static_cast<int32_t>(i);
  }

  const LieType& type() const { return t_; }
  size_t count() const { return weights_.size(); }
  const Weight& weight(size_t i) const { return weights_[i]; }
  int32_t position(const Weight& w) const {
    auto it = pos_.find(w);
    return it == pos_.end() ? -1 : it->second;
  }
  size_t orbit_size(int i) const { return orbits_[i].size(); }

  /// Generator to peel off a monomial exponent: smallest orbit (cheapest
  /// table row), ties broken toward the larger index.
  int pick_generator(const IVec& a) const {
    int best = -1;
    for (int i = 0; i < n_; ++i) {
      if (a[i] <= 0) continue;
      if (best < 0 || orbits_[i].size() < orbits_[best].size() ||
          (orbits_[i].size() == orbits_[best].size() && i > best))
        best = i;
    }
    return best;
  }

  const std::vector<int32_t>& table(int i) {
    std::vector<int32_t>& tab = tables_[i];
    if (!tab.empty() || weights_.empty()) return tab;
    const auto& orbit = orbits_[i];
    tab.resize(weights_.size() * orbit.size());
    size_t out = 0;
    for (const Weight& v : weights_)
      for (const Weight& b : orbit)
        tab[out++] = position(rootsys::dominant_representative(t_, v - b));
    return tab;
  }

private:
  void scan(int i, Weight& cur, int64_t hleft, const std::vector<Weight>& ceilings,
            size_t budget) {
    if (i == n_) {
      for (const Weight& c : ceilings) {
        if (rootsys::dominance_leq(t_, cur, c)) {
          if (weights_.size() >= budget)
            throw BudgetError("dominant weight budget exceeded (" + std::to_string(budget) + ")");
          weights_.push_back(cur);
          return;
        }
      }
      return;
    }
    for (int64_t v = 0; v * fund_height_[i] <= hleft; ++v) {
      cur[i] = v;
      scan(i + 1, cur, hleft - v * fund_height_[i], ceilings, budget);
    }
    cur[i] = 0;
  }

  LieType t_;
  int n_;
  std::array<std::vector<Weight>, kMaxRank> orbits_;
  std::array<int64_t, kMaxRank> fund_height_{};
  std::vector<Weight> weights_;
  std::unordered_map<Weight, int32_t, IVecHash> pos_;
  std::array<std::vector<int32_t>, kMaxRank> tables_;
};

/// Greedy reduction over a fixed frame with memoized monomial expansions.
/// Coefficient type C is int64_t (overflow-checked), mpz_class or mpq_class.
template <typename C>
class Reducer {
public:
  explicit Reducer(ReductionFrame& fr) : fr_(fr) {}

  /// input: dominant weight -> coefficient.  Returns the polynomial terms.
  std::vector<std::pair<IVec, C>> reduce(const std::vector<std::pair<Weight, C>>& input) {
    const size_t nw = fr_.count();
    std::vector<C> f(nw, C(0));
    for (const auto& [w, c] : input) {
      int32_t p = fr_.position(w);
      if (p < 0) throw std::logic_error("reduce: input weight outside the dominant slice");
      add_to(f[p], c);
    }
    std::vector<std::pair<IVec, C>> out;
    for (size_t idx = 0; idx < nw; ++idx) {
      if (f[idx] == 0) continue;
      const Weight& nu = fr_.weight(idx);
      C c = f[idx];
      const std::vector<C>& mono = expand(nu);
      if (mono[idx] != 1)
        throw std::logic_error("reduce: monomial leading coefficient != 1 at " + nu.to_string());
      for (size_t t = idx; t < nw; ++t)
        if (mono[t] != 0) sub_mul(f[t], c, mono[t]);
      out.emplace_back(nu, std::move(c));
    }
    return out;
  }

private:
  /// Coefficients of prod_i phi_i^{a_i} on the frame's dominant slice.
  const std::vector<C>& expand(const IVec& a) {
    auto hit = memo_.find(a);
    if (hit != memo_.end()) return hit->second;
    std::vector<C> vec(fr_.count(), C(0));
    if (a.is_zero()) {
      int32_t z = fr_.position(Weight(a.rank()));
      if (z < 0) throw std::logic_error("reduce: zero weight missing from slice");
      vec[z] = 1;
    } else {
      const int i = fr_.pick_generator(a);
      IVec prev = a;
      prev[i] -= 1;
      const std::vector<C>& pv = expand(prev);
      const std::vector<int32_t>& tab = fr_.table(i);
      const size_t os = fr_.orbit_size(i);
      for (size_t v = 0; v < vec.size(); ++v) {
        const int32_t* row = tab.data() + v * os;
        C acc(0);
        for (size_t b = 0; b < os; ++b)
          if (row[b] >= 0) add_to(acc, pv[row[b]]);
        vec[v] = std::move(acc);
      }
    }
    return memo_.emplace(a, std::move(vec)).first->second;
  }

  ReductionFrame& fr_;
  std::unordered_map<IVec, std::vector<C>, IVecHash> memo_;
};

template <typename C>
void fill_poly(MultiPoly<C>& poly, const std::vector<std::pair<IVec, C>>& terms) {
  for (const auto& [e, c] : terms) poly.add_term(e, c);
}

}  // namespace

PolyQ express_in_fundamentals(const WeightInvariant& f, const GenerationLimits& lim) {
  const LieType& t = f.type();
  PolyQ poly(t.rank());
  if (f.terms().empty()) return poly;
  InvarianceCheck chk = check_invariance(f);
  if (!chk.invariant)
    throw std::invalid_argument("express_in_fundamentals: not Weyl-invariant on the orbit of " +
                                chk.offending_orbit.to_string());
  // Collect the dominant support with its coefficients (one entry per orbit).
  std::vector<std::pair<Weight, mpq_class>> input;
  std::vector<Weight> ceilings;
  for (const auto& [w, c] : f.terms()) {
    if (!rootsys::is_dominant(w)) continue;
    input.emplace_back(w, c);
    ceilings.push_back(w);
  }
  ReductionFrame frame(t, ceilings, lim.max_dominant_weights);
  Reducer<mpq_class> red(frame);
  fill_poly(poly, red.reduce(input));
  return poly;
}

PolyMap compute_P(const rootsys::LieType& t, int k, const GenerationLimits& lim) {
  if (k < 1) throw std::invalid_argument("compute_P: k must be >= 1");
  const int n = t.rank();
  std::vector<Weight> ceilings;
  for (int j = 0; j < n; ++j) {
    Weight w(n);
    w[j] = k;
    ceilings.push_back(w);
  }
  PolyMap map{t, k, {}};
  map.components.reserve(n);
  // One shared frame and memo for all components; int64 first, exact fallback.
  ReductionFrame frame(t, ceilings, lim.max_dominant_weights);
  try {
    Reducer<int64_t> red(frame);
    for (int j = 0; j < n; ++j) {
      PolyZ poly(n);
      for (const auto& [e, c] : red.reduce({{ceilings[j], 1}})) poly.add_term(e, mpz_class(c));
      map.components.push_back(std::move(poly));
    }
  } catch (const OverflowSignal&) {
    map.components.clear();
    Reducer<mpz_class> red(frame);
    for (int j = 0; j < n; ++j) {
      PolyZ poly(n);
      fill_poly(poly, red.reduce({{ceilings[j], mpz_class(1)}}));
      map.components.push_back(std::move(poly));
    }
  }
  return map;
}

}  // namespace lieperm::exppoly
