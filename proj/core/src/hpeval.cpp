#include <mpfr.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <vector>

#include "lieperm/polymap.hpp"

namespace lieperm::exppoly {
namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<70>>;

struct Cplx {
  Real re{0}, im{0};
};

Cplx mul(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Real to_real(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

/// Orbit sums of all fundamental weights at torus point x, scaled by `mult`.
std::vector<Cplx> orbit_sums(const rootsys::LieType& t, std::span<const double> x, int mult) {
  const int n = t.rank();
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Cplx> out(n);
  for (int j = 0; j < n; ++j) {
    Weight omega(n);
    omega[j] = 1;
    for (const Weight& w : rootsys::orbit_of(t, omega)) {
      Real angle = 0;
      for (int i = 0; i < n; ++i) angle += w[i] * Real(x[i]);
      angle *= mult * two_pi;
      out[j].re += cos(angle);
      out[j].im += sin(angle);
    }
  }
  return out;
}

Cplx eval_poly(const PolyZ& poly, const std::vector<Cplx>& z) {
  const int n = poly.nvars();
  std::vector<std::vector<Cplx>> pows(n);
  for (int i = 0; i < n; ++i) {
    pows[i].push_back({Real(1), Real(0)});
    pows[i].push_back(z[i]);
  }
  Cplx acc;
  for (const auto& [e, c] : poly.terms()) {
    Cplx term{to_real(c), Real(0)};
    for (int i = 0; i < n; ++i) {
      while (static_cast<int64_t>(pows[i].size()) <= e[i])
        pows[i].push_back(mul(pows[i].back(), z[i]));
      term = mul(term, pows[i][e[i]]);
    }
    acc.re += term.re;
    acc.im += term.im;
  }
  return acc;
}

}  // namespace

double functional_equation_error(const PolyMap& p, std::span<const double> x) {
  const int n = p.rank();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("functional_equation_error: point arity mismatch");
  std::vector<Cplx> phi = orbit_sums(p.type, x, 1);
  std::vector<Cplx> phi_k = orbit_sums(p.type, x, p.k);
  Real worst = 0;
  for (int j = 0; j < n; ++j) {
    Cplx got = eval_poly(p.components[j], phi);
    Real dr = got.re - phi_k[j].re, di = got.im - phi_k[j].im;
    Real err = sqrt(dr * dr + di * di);
    if (err > worst) worst = err;
  }
  return worst.convert_to<double>();
}

}  // namespace lieperm::exppoly
