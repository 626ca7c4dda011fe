#pragma once

#include <cstdint>
#include <vector>

#include "lieperm/common.hpp"

namespace lieperm {

/// Dense square integer matrix of dimension <= kMaxRank with exact int64
/// arithmetic.  Column convention throughout: the matrix acts on column
/// coordinate vectors, i.e. column j is the image of the j-th basis vector.
class IMat {
public:
  IMat() = default;
  explicit IMat(int n) : n_(n) {
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("IMat: bad dimension");
  }
  static IMat identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int n() const { return n_; }
  int64_t at(int i, int j) const { return a_[i * kMaxRank + j]; }
  int64_t& at(int i, int j) { return a_[i * kMaxRank + j]; }

  bool operator==(const IMat&) const = default;

  IMat operator*(const IMat& o) const {
    IMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const int64_t aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r(n_);
    for (int i = 0; i < n_; ++i) {
      int64_t s = 0;
      for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  IMat transpose() const {
    IMat r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  IVec column(int j) const {
    IVec c(n_);
    for (int i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
  }

  /// Lexicographic comparison of the flattened entries (row-major).
  int cmp_lex(const IMat& o) const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (at(i, j) != o.at(i, j)) return at(i, j) < o.at(i, j) ? -1 : 1;
      }
    return 0;
  }

  /// Exact determinant by cofactor expansion with subset memoization.
  int64_t det() const;

  /// Adjugate: adj(M) * M = det(M) * I, exact.
  IMat adjugate() const;

  /// Inverse of a matrix with det = +-1 (throws otherwise).
  IMat inverse_unimodular() const;

private:
  int n_ = 0;
  std::array<int64_t, kMaxRank * kMaxRank> a_{};
};

struct IMatHash {
  size_t operator()(const IMat& m) const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(m.n()));
    for (int i = 0; i < m.n(); ++i)
      for (int j = 0; j < m.n(); ++j) mix(static_cast<uint64_t>(m.at(i, j)));
    return static_cast<size_t>(h);
  }
};

/// Characteristic polynomial det(x*I - M), coefficients low degree first,
/// monic of degree n.  Exact integer arithmetic (Laplace expansion over Z[x]
/// with memoization on row subsets; fine for n <= kMaxRank).
std::vector<int64_t> char_poly(const IMat& m);

}  // namespace lieperm
