#include "lieperm/ffield.hpp"

#include <algorithm>
#include <stdexcept>

#include "lieperm/numtheory.hpp"

namespace lieperm::ffield {

namespace {

// Dense F_p[x] helpers used only for modulus construction (not hot).
using Poly = std::vector<uint32_t>;  // low degree first, no trailing zeros

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// r = a mod f (f monic-ish: leading coefficient must be invertible; here we
// only divide by monic f or normalize first).
Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
  // normalize divisor to monic
  Poly g = f;
  trim(g);
  uint64_t lead = g.back();
  uint64_t lead_inv = numtheory::pow_mod(lead, p - 2, p);
  while (true) {
    trim(a);
    if (degree(a) < degree(g)) return a;
    uint64_t c = a.back() * lead_inv % p;
    int shift = degree(a) - degree(g);
    for (int i = 0; i <= degree(g); ++i) {
      uint64_t sub = c * g[i] % p;
      a[i + shift] = static_cast<uint32_t>((a[i + shift] + p - sub) % p);
    }
  }
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(prod), f, p);
}

Poly poly_pow_mod(Poly base, uint64_t n, const Poly& f, uint64_t p) {
  Poly acc{1};
  while (n) {
    if (n & 1) acc = poly_mul_mod(acc, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    n >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// f monic of degree e >= 1 (coefficient vector includes the leading 1).
/// Irreducible iff gcd(f, x^{p^i} - x) = const for all 1 <= i <= e/2.
bool is_irreducible(const Poly& f, uint64_t p) {
  const int e = degree(f);
  if (e == 1) return true;
  Poly xp{0, 1};  // running x^{p^i} mod f
  for (int i = 1; i <= e / 2; ++i) {
    xp = poly_pow_mod(std::move(xp), p, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);  // x^{p^i} - x
    trim(diff);
    Poly g = poly_gcd(f, std::move(diff), p);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::make(uint64_t p, int e) {
  if (p >= (1ull << 31) || !numtheory::is_prime(p))
    throw std::invalid_argument("make_field: p must be prime (and < 2^31)");
  if (e < 1 || e > kMaxDegree) throw std::invalid_argument("make_field: degree out of range");
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > (1ull << 62) / p) throw std::invalid_argument("make_field: q = p^e too large");
    q *= p;
  }
  FieldSpec F;
  F.p_ = p;
  F.e_ = e;
  F.q_ = q;
  // Scan candidate moduli x^e + sum c_i x^i by ascending packed value of
  // (c_0,...,c_{e-1}); the first irreducible wins.
  for (uint64_t packed = 0; packed < q; ++packed) {
    Poly f(e + 1, 0);
    uint64_t rest = packed;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<uint32_t>(rest % p);
      rest /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) {
      F.mod_.assign(f.begin(), f.begin() + e);
      return F;
    }
  }
  throw std::logic_error("make_field: no irreducible modulus found");  // unreachable
}

FieldSpec FieldSpec::from_order(uint64_t q) {
  auto pp = numtheory::factor_prime_power(q);
  if (!pp) throw std::invalid_argument("from_order: " + std::to_string(q) + " is not a prime power");
  return make(pp->p, pp->e);
}

void FieldSpec::add(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  for (int i = 0; i < e_; ++i) {
    uint64_t s = uint64_t(a[i]) + b[i];
    out[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
}

void FieldSpec::sub(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  for (int i = 0; i < e_; ++i) {
    uint64_t s = uint64_t(a[i]) + p_ - b[i];
    out[i] = static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
}

void FieldSpec::scalar_mul(uint32_t s, const uint32_t* a, uint32_t* out) const {
  for (int i = 0; i < e_; ++i) out[i] = static_cast<uint32_t>(uint64_t(s) * a[i] % p_);
}

void FieldSpec::mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
  std::array<uint64_t, 2 * kMaxDegree> acc{};
  for (int i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e_; ++j) acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j] % p_) % p_;
  }
  // Reduce by the monic modulus: x^e = -sum mod_[j] x^j.
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    uint64_t c = acc[d];
    if (c == 0) continue;
    acc[d] = 0;
    for (int j = 0; j < e_; ++j) acc[d - e_ + j] = (acc[d - e_ + j] + (p_ - mod_[j]) * c) % p_;
  }
  for (int i = 0; i < e_; ++i) out[i] = static_cast<uint32_t>(acc[i]);
}

void FieldSpec::pow(const uint32_t* a, uint64_t n, uint32_t* out) const {
  std::array<uint32_t, kMaxDegree> base, acc{};
  std::copy(a, a + e_, base.begin());
  acc[0] = 1;
  while (n) {
    if (n & 1) mul(acc.data(), base.data(), acc.data());
    n >>= 1;
    if (n) mul(base.data(), base.data(), base.data());
  }
  std::copy(acc.begin(), acc.begin() + e_, out);
}

bool FieldSpec::is_zero(const uint32_t* a) const {
  for (int i = 0; i < e_; ++i)
    if (a[i]) return false;
  return true;
}

void FieldSpec::inv(const uint32_t* a, uint32_t* out) const {
  if (is_zero(a)) throw std::domain_error("Fq inv: division by zero");
  // Extended Euclid over F_p[x] against the full monic modulus.
  Poly r0(mod_.begin(), mod_.end());
  r0.push_back(1);
  Poly r1(a, a + e_);
  trim(r1);
  Poly s0{}, s1{1};  // s tracks the coefficient of `a`
  while (degree(r1) > 0) {
    // divide r0 by r1
    uint64_t lead_inv = numtheory::pow_mod(r1.back(), p_ - 2, p_);
    Poly rem = r0;
    Poly quot(std::max<int>(degree(r0) - degree(r1) + 1, 0), 0);
    while (degree(rem) >= degree(r1)) {
      uint64_t c = rem.back() * lead_inv % p_;
      int shift = degree(rem) - degree(r1);
      quot[shift] = static_cast<uint32_t>(c);
      for (int i = 0; i <= degree(r1); ++i)
        rem[i + shift] = static_cast<uint32_t>((rem[i + shift] + p_ - c * r1[i] % p_) % p_);
      trim(rem);
      if (rem.empty()) break;
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - quot*s1)
    Poly qs(quot.size() + s1.size(), 0);
    if (!quot.empty() && !s1.empty()) {
      qs.assign(quot.size() + s1.size() - 1, 0);
      for (size_t i = 0; i < quot.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j)
          qs[i + j] = static_cast<uint32_t>((qs[i + j] + uint64_t(quot[i]) * s1[j]) % p_);
    } else {
      qs.clear();
    }
    Poly snew(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < snew.size(); ++i) {
      uint64_t lhs = i < s0.size() ? s0[i] : 0;
      uint64_t rhs = i < qs.size() ? qs[i] : 0;
      snew[i] = static_cast<uint32_t>((lhs + p_ - rhs) % p_);
    }
    trim(snew);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (r1.empty()) throw std::domain_error("Fq inv: input not invertible");  // gcd jumped past const
  // r1 is a nonzero constant c: inverse = s1 / c.
  uint64_t cinv = numtheory::pow_mod(r1[0], p_ - 2, p_);
  std::fill(out, out + e_, 0);
  for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(e_); ++i)
    out[i] = static_cast<uint32_t>(s1[i] * cinv % p_);
}

uint64_t FieldSpec::index_of(const uint32_t* a) const {
  uint64_t idx = 0;
  for (int i = e_ - 1; i >= 0; --i) idx = idx * p_ + a[i];
  return idx;
}

void FieldSpec::from_index(uint64_t idx, uint32_t* out) const {
  for (int i = 0; i < e_; ++i) {
    out[i] = static_cast<uint32_t>(idx % p_);
    idx /= p_;
  }
}

Fq FieldSpec::one() const {
  Fq a = zero();
  a.c[0] = 1;
  return a;
}

Fq FieldSpec::element(uint64_t index) const {
  if (index >= q_) throw std::out_of_range("FieldSpec::element: index out of range");
  Fq a = zero();
  from_index(index, a.c.data());
  return a;
}

uint64_t FieldSpec::index(const Fq& a) const { return index_of(check(a)); }

Fq FieldSpec::from_integer(const mpz_class& v) const {
  mpz_class r = v % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  Fq a = zero();
  a.c[0] = static_cast<uint32_t>(r.get_ui());
  return a;
}

const uint32_t* FieldSpec::check(const Fq& a) const {
  if (static_cast<int>(a.c.size()) != e_)
    throw std::invalid_argument("Fq element does not belong to this field");
  for (uint32_t x : a.c)
    if (x >= p_) throw std::invalid_argument("Fq element not in canonical form");
  return a.c.data();
}

Fq FieldSpec::add(const Fq& a, const Fq& b) const {
  Fq out = zero();
  add(check(a), check(b), out.c.data());
  return out;
}
Fq FieldSpec::sub(const Fq& a, const Fq& b) const {
  Fq out = zero();
  sub(check(a), check(b), out.c.data());
  return out;
}
Fq FieldSpec::mul(const Fq& a, const Fq& b) const {
  Fq out = zero();
  mul(check(a), check(b), out.c.data());
  return out;
}
Fq FieldSpec::pow(const Fq& a, uint64_t n) const {
  Fq out = zero();
  pow(check(a), n, out.c.data());
  return out;
}
Fq FieldSpec::inv(const Fq& a) const {
  Fq out = zero();
  inv(check(a), out.c.data());
  return out;
}

ReducedMap::ReducedMap(const exppoly::PolyMap& P, FieldSpec F)
    : F_(std::move(F)), type_(P.type), n_(P.rank()) {
  comps_.resize(n_);
  for (int j = 0; j < n_; ++j) {
    for (const auto& [e, c] : P.components[j].terms()) {
      mpz_class r = c % static_cast<unsigned long>(F_.p());
      if (r < 0) r += static_cast<unsigned long>(F_.p());
      if (r == 0) continue;
      Term t{};
      for (int i = 0; i < n_; ++i) {
        t.exp[i] = static_cast<int32_t>(e[i]);
        max_exp_[i] = std::max(max_exp_[i], t.exp[i]);
      }
      t.coeff = static_cast<uint32_t>(r.get_ui());
      comps_[j].push_back(t);
    }
  }
}

ReducedMap::Scratch ReducedMap::make_scratch() const {
  Scratch s;
  size_t total = 0;
  for (int i = 0; i < n_; ++i) total += static_cast<size_t>(max_exp_[i] + 1) * F_.e();
  s.pows.resize(total);
  return s;
}

void ReducedMap::evaluate_raw(const uint32_t* point, uint32_t* out, Scratch& s) const {
  const int e = F_.e();
  // Power tables: pows[off_i + d*e ...] = point_i^d.
  size_t off = 0;
  std::array<size_t, kMaxRank> offs{};
  for (int i = 0; i < n_; ++i) {
    offs[i] = off;
    uint32_t* base = s.pows.data() + off;
    std::fill(base, base + e, 0);
    base[0] = 1;
    for (int32_t d = 1; d <= max_exp_[i]; ++d)
      F_.mul(base + static_cast<size_t>(d - 1) * e, point + static_cast<size_t>(i) * e,
             base + static_cast<size_t>(d) * e);
    off += static_cast<size_t>(max_exp_[i] + 1) * e;
  }
  for (int j = 0; j < n_; ++j) {
    uint32_t* acc = out + static_cast<size_t>(j) * e;
    std::fill(acc, acc + e, 0);
    for (const Term& t : comps_[j]) {
      uint32_t* tmp = s.tmp.data();
      std::fill(tmp, tmp + e, 0);
      tmp[0] = t.coeff;
      for (int i = 0; i < n_; ++i)
        if (t.exp[i] > 0)
          F_.mul(tmp, s.pows.data() + offs[i] + static_cast<size_t>(t.exp[i]) * e, tmp);
      F_.add(acc, tmp, acc);
    }
  }
}

std::vector<Fq> ReducedMap::evaluate(const std::vector<Fq>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("ReducedMap::evaluate: point arity mismatch");
  const int e = F_.e();
  std::vector<uint32_t> point(static_cast<size_t>(n_) * e), image(static_cast<size_t>(n_) * e);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(v[i].c.size()) != e)
      throw std::invalid_argument("ReducedMap::evaluate: field mismatch");
    std::copy(v[i].c.begin(), v[i].c.end(), point.begin() + static_cast<size_t>(i) * e);
  }
  Scratch s = make_scratch();
  evaluate_raw(point.data(), image.data(), s);
  std::vector<Fq> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].c.assign(image.begin() + static_cast<size_t>(i) * e,
                    image.begin() + static_cast<size_t>(i + 1) * e);
  return out;
}

}  // namespace lieperm::ffield
