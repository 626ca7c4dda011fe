#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "lieperm/rootsys.hpp"

namespace lieperm::exppoly {

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically (ascending).  This is the canonical term
/// order used by the serializer.
struct GradedLexLess {
  bool operator()(const IVec& a, const IVec& b) const {
    int64_t sa = a.sum(), sb = b.sum();
    if (sa != sb) return sa < sb;
    return a.cmp_lex(b) < 0;
  }
};

/// Sparse polynomial in n = rank variables with exact coefficients.
template <typename C>
class MultiPoly {
public:
  using TermMap = std::map<IVec, C, GradedLexLess>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  C coeff(const IVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }
  void add_term(const IVec& e, const C& c) {
    if (e.rank() != nvars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    for (int i = 0; i < nvars_; ++i)
      if (e[i] < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  int64_t total_degree() const {
    int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.sum());
    return d;
  }

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

private:
  int nvars_;
  TermMap terms_;
};

using PolyZ = MultiPoly<mpz_class>;
using PolyQ = MultiPoly<mpq_class>;

template <typename C>
MultiPoly<C> multiply(const MultiPoly<C>& a, const MultiPoly<C>& b) {
  MultiPoly<C> out(a.nvars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  return out;
}

/// Polynomial self-map of C^n attached to a Lie type; component j expresses
/// the multiplied-argument invariant of the j-th fundamental orbit sum in
/// terms of the n basic orbit sums.
struct PolyMap {
  rootsys::LieType type;
  int k = 1;
  std::vector<PolyZ> components;

  int rank() const { return type.rank(); }
};

/// compose(p, q)(X) = p(q(X)).  Both maps must have the same type; the
/// resulting k is p.k * q.k (matching the semigroup law for canonical maps).
PolyMap compose(const PolyMap& p, const PolyMap& q);

/// Evaluates all components at a complex point.
std::vector<std::complex<double>> evaluate(const PolyMap& p,
                                           std::span<const std::complex<double>> z);

/// The basic invariant map: component j is the distinct-orbit exponential sum
/// of the j-th fundamental weight, evaluated at real torus coordinates x.
std::vector<std::complex<double>> evaluate_orbit_sums(const rootsys::LieType& t,
                                                      std::span<const double> x);

/// Max componentwise |Φ_j(k·x) − P_j(Φ(x))| at torus point x, where Φ is the
/// orbit-sum map of p.type and k = p.k.  Evaluated in 256-bit arithmetic so
/// the result measures the map itself rather than double-precision roundoff
/// (high-rank components cancel through intermediate terms ~1e12, which floors
/// a double evaluation near 1e-2).
double functional_equation_error(const PolyMap& p, std::span<const double> x);

}  // namespace lieperm::exppoly
