#include "lieperm/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieperm {

namespace {

// Polynomial over Z, low degree first, for char_poly.
using Poly = std::vector<int64_t>;

int64_t ring_mul(int64_t a, int64_t b) { return a * b; }
int64_t ring_add(int64_t a, int64_t b) { return a + b; }
int64_t ring_neg(int64_t a) { return -a; }

Poly ring_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly ring_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly ring_neg(Poly a) {
  for (auto& c : a) c = -c;
  return a;
}

// Determinant of an n x n matrix with entries in Z or Z[x]: expansion along
// columns left to right, memoized on the set of rows still in play.
template <typename T, typename Entry>
T det_memo(int n, const Entry& entry, const T& zero, const T& one) {
  const unsigned full = (1u << n) - 1;
  std::vector<T> memo(static_cast<size_t>(1) << n, zero);
  std::vector<bool> have(static_cast<size_t>(1) << n, false);
  memo[0] = one;
  have[0] = true;

  auto rec = [&](auto&& self, unsigned rows_mask) -> const T& {
    if (have[rows_mask]) return memo[rows_mask];
    const int col = n - __builtin_popcount(rows_mask);
    T acc = zero;
    int sign = 1;
    for (int r = 0; r < n; ++r) {
      if (!(rows_mask & (1u << r))) continue;
      T term = ring_mul(entry(r, col), self(self, rows_mask & ~(1u << r)));
      if (sign < 0) term = ring_neg(std::move(term));
      acc = ring_add(acc, term);
      sign = -sign;
    }
    memo[rows_mask] = std::move(acc);
    have[rows_mask] = true;
    return memo[rows_mask];
  };
  return rec(rec, full);
}

}  // namespace

int64_t IMat::det() const {
  if (n_ == 0) return 1;
  auto entry = [this](int i, int j) { return at(i, j); };
  return det_memo<int64_t>(n_, entry, 0, 1);
}

IMat IMat::adjugate() const {
  // adj(M)[j][i] = (-1)^{i+j} * minor(i,j), so adj(M) * M = det(M) * I.
  IMat r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      auto entry = [this, i, j](int r_, int c_) {
        const int rr = r_ >= i ? r_ + 1 : r_;
        const int cc = c_ >= j ? c_ + 1 : c_;
        return at(rr, cc);
      };
      const int64_t minor = n_ == 1 ? 1 : det_memo<int64_t>(n_ - 1, entry, 0, 1);
      r.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return r;
}

IMat IMat::inverse_unimodular() const {
  const int64_t d = det();
  if (d != 1 && d != -1) throw std::invalid_argument("inverse_unimodular: det not +-1");
  IMat adj = adjugate();
  if (d == -1) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) adj.at(i, j) = -adj.at(i, j);
  }
  return adj;
}

std::vector<int64_t> char_poly(const IMat& m) {
  const int n = m.n();
  if (n == 0) return {1};
  auto entry = [&m](int i, int j) -> Poly {
    if (i == j) return Poly{-m.at(i, j), 1};  // x - m_ii
    return Poly{-m.at(i, j)};
  };
  Poly p = det_memo<Poly>(n, entry, Poly{}, Poly{1});
  p.resize(n + 1, 0);
  return p;
}

}  // namespace lieperm
