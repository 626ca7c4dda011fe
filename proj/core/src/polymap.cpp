#include "lieperm/polymap.hpp"

#include <cmath>
#include <numbers>

namespace lieperm::exppoly {

PolyMap compose(const PolyMap& p, const PolyMap& q) {
  if (!(p.type == q.type)) throw std::invalid_argument("compose: type mismatch");
  const int n = p.rank();
  PolyMap out{p.type, p.k * q.k, {}};
  out.components.reserve(n);
  // Power cache: powers[i][d] = q.components[i]^d.
  std::vector<std::vector<PolyZ>> powers(n);
  PolyZ one(n);
  one.add_term(IVec(n), 1);
  for (int i = 0; i < n; ++i) powers[i].push_back(one);
  auto power = [&](int i, int64_t d) -> const PolyZ& {
    auto& ladder = powers[i];
    while (static_cast<int64_t>(ladder.size()) <= d)
      ladder.push_back(multiply(ladder.back(), q.components[i]));
    return ladder[d];
  };
  for (const PolyZ& comp : p.components) {
    PolyZ acc(n);
    for (const auto& [e, c] : comp.terms()) {
      PolyZ term(n);
      term.add_term(IVec(n), c);
      for (int i = 0; i < n; ++i)
        if (e[i] > 0) term = multiply(term, power(i, e[i]));
      for (const auto& [te, tc] : term.terms()) acc.add_term(te, tc);
    }
    out.components.push_back(std::move(acc));
  }
  return out;
}

std::vector<std::complex<double>> evaluate(const PolyMap& p,
                                           std::span<const std::complex<double>> z) {
  const int n = p.rank();
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("evaluate: point dimension != rank");
  // Shared power cache across components.
  std::vector<std::vector<std::complex<double>>> powers(n);
  for (int i = 0; i < n; ++i) powers[i].push_back(1.0);
  auto power = [&](int i, int64_t d) {
    auto& ladder = powers[i];
    while (static_cast<int64_t>(ladder.size()) <= d) ladder.push_back(ladder.back() * z[i]);
    return ladder[d];
  };
  std::vector<std::complex<double>> out;
  out.reserve(p.components.size());
  for (const PolyZ& comp : p.components) {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : comp.terms()) {
      std::complex<double> term = c.get_d();
      for (int i = 0; i < n; ++i)
        if (e[i] > 0) term *= power(i, e[i]);
      acc += term;
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<std::complex<double>> evaluate_orbit_sums(const rootsys::LieType& t,
                                                      std::span<const double> x) {
  const int n = t.rank();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("evaluate_orbit_sums: point dimension != rank");
  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    Weight omega(n);
    omega[j] = 1;
    std::complex<double> acc = 0.0;
    for (const Weight& w : rootsys::orbit_of(t, omega)) {
      double phase = 0.0;
      for (int i = 0; i < n; ++i) phase += static_cast<double>(w[i]) * x[i];
      phase *= 2.0 * std::numbers::pi;
      acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace lieperm::exppoly
