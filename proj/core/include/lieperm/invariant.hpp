#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <unordered_map>

#include "lieperm/rootsys.hpp"

namespace lieperm::exppoly {

/// A finite Z-linear (here: Q-linear) combination of formal exponentials
/// e^{2 pi i <lambda, x>}, stored as weight -> coefficient.  The operations
/// that consume these assume (and check) invariance under the Weyl group.
class WeightInvariant {
public:
  explicit WeightInvariant(rootsys::LieType t) : type_(std::move(t)) {}

  const rootsys::LieType& type() const { return type_; }
  const std::unordered_map<Weight, mpq_class, IVecHash>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  mpq_class coeff(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }
  void set_coeff(const Weight& w, mpq_class c) {
    if (w.rank() != type_.rank()) throw std::invalid_argument("WeightInvariant: rank mismatch");
    if (c == 0)
      terms_.erase(w);
    else
      terms_[w] = std::move(c);
  }
  void add_coeff(const Weight& w, const mpq_class& c) { set_coeff(w, coeff(w) + c); }

  bool operator==(const WeightInvariant& o) const {
    return type_ == o.type_ && terms_ == o.terms_;
  }

private:
  rootsys::LieType type_;
  std::unordered_map<Weight, mpq_class, IVecHash> terms_;
};

/// Sum of e^{2 pi i <mu, x>} over the *distinct* orbit W.lambda
/// (each weight exactly once, coefficient 1).
WeightInvariant orbit_sum(const rootsys::LieType& t, const Weight& lambda);

WeightInvariant add(const WeightInvariant& a, const WeightInvariant& b);

/// Product: coefficient of nu is sum over lambda + mu = nu of f(lambda)g(mu).
WeightInvariant multiply(const WeightInvariant& a, const WeightInvariant& b);

/// Checks Weyl invariance: coefficients constant on each orbit (absent = 0).
/// On failure reports the dominant representative of an offending orbit.
struct InvarianceCheck {
  bool invariant = true;
  Weight offending_orbit;
};
InvarianceCheck check_invariance(const WeightInvariant& f);

/// Numeric evaluation at a real torus point (coordinates dual to the
/// fundamental weights): sum of c_lambda * e^{2 pi i <lambda, x>}.
std::complex<double> evaluate(const WeightInvariant& f, std::span<const double> x);

}  // namespace lieperm::exppoly
