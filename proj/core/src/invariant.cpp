#include "lieperm/invariant.hpp"

#include <cmath>
#include <numbers>

namespace lieperm::exppoly {

using rootsys::LieType;

WeightInvariant orbit_sum(const LieType& t, const Weight& lambda) {
  WeightInvariant f(t);
  for (const Weight& w : rootsys::orbit_of(t, lambda)) f.set_coeff(w, 1);
  return f;
}

static void require_same_type(const WeightInvariant& a, const WeightInvariant& b) {
  if (!(a.type() == b.type()))
    throw std::invalid_argument("WeightInvariant: operands have different types");
}

WeightInvariant add(const WeightInvariant& a, const WeightInvariant& b) {
  require_same_type(a, b);
  WeightInvariant out = a;
  for (const auto& [w, c] : b.terms()) out.add_coeff(w, c);
  return out;
}

WeightInvariant multiply(const WeightInvariant& a, const WeightInvariant& b) {
  require_same_type(a, b);
  WeightInvariant out(a.type());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_coeff(wa + wb, ca * cb);
  return out;
}

InvarianceCheck check_invariance(const WeightInvariant& f) {
  const LieType& t = f.type();
  std::unordered_map<Weight, char, IVecHash> checked;
  for (const auto& [w, c] : f.terms()) {
    Weight dom = rootsys::dominant_representative(t, w);
    if (!checked.emplace(dom, 1).second) continue;
    const mpq_class& ref = c;
    for (const Weight& m : rootsys::orbit_of(t, dom)) {
      if (f.coeff(m) != ref) return {false, dom};
    }
  }
  return {true, Weight(t.rank())};
}

std::complex<double> evaluate(const WeightInvariant& f, std::span<const double> x) {
  if (static_cast<int>(x.size()) != f.type().rank())
    throw std::invalid_argument("evaluate: point dimension != rank");
  std::complex<double> acc = 0.0;
  for (const auto& [w, c] : f.terms()) {
    double phase = 0.0;
    for (int i = 0; i < w.rank(); ++i) phase += static_cast<double>(w[i]) * x[i];
    phase *= 2.0 * std::numbers::pi;
    acc += c.get_d() * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

}  // namespace lieperm::exppoly
