#pragma once

#include <gmpxx.h>

#include <vector>

#include "lieperm/intmat.hpp"

namespace lieperm {

/// Dense square matrix with arbitrary-precision integer entries.
class MpzMat {
public:
  explicit MpzMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static MpzMat identity(int n) {
    MpzMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static MpzMat from(const IMat& s) {
    MpzMat m(s.n());
    for (int i = 0; i < s.n(); ++i)
      for (int j = 0; j < s.n(); ++j) m.at(i, j) = static_cast<long>(s.at(i, j));
    return m;
  }

  int size() const { return n_; }
  mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
  int n_;
  std::vector<mpz_class> a_;
};

/// Smith normal form of a nonsingular integer matrix M: unimodular U, V with
/// M = U * diag * V, diag_i > 0 and diag_i | diag_{i+1}.
///
/// col_transform is V^{-1}; it parametrizes the solutions of M x ∈ Z^n:
///   { col_transform * y  (mod Z^n) : y_i = m_i / diag_i, 0 <= m_i < diag_i },
/// exactly prod(diag) = |det M| distinct cosets.  Throws on singular input.
struct SmithResult {
  std::vector<mpz_class> diag;
  MpzMat col_transform;
};
SmithResult smith_normal_form(MpzMat m);

}  // namespace lieperm
