#include "lieperm/snf.hpp"

#include <stdexcept>

namespace lieperm {

namespace {

// Column operations mirror onto X (the accumulated right transform); row
// operations need no mirror since only V^{-1} is reported.
struct Worker {
  MpzMat& d;
  MpzMat& x;
  int n;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < n; ++j) std::swap(d.at(a, j), d.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) {
      std::swap(d.at(i, a), d.at(i, b));
      std::swap(x.at(i, a), x.at(i, b));
    }
  }
  void row_sub(int dst, int src, const mpz_class& q) {  // row dst -= q * row src
    if (q == 0) return;
    for (int j = 0; j < n; ++j) d.at(dst, j) -= q * d.at(src, j);
  }
  void col_sub(int dst, int src, const mpz_class& q) {  // col dst -= q * col src
    if (q == 0) return;
    for (int i = 0; i < n; ++i) {
      d.at(i, dst) -= q * d.at(i, src);
      x.at(i, dst) -= q * x.at(i, src);
    }
  }
  void negate_row(int r) {
    for (int j = 0; j < n; ++j) d.at(r, j) = -d.at(r, j);
  }

  // Clears row and column t, leaving a positive pivot at (t, t).
  void reduce_pivot(int t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw std::invalid_argument("smith_normal_form: singular matrix");
      swap_rows(t, pi);
      swap_cols(t, pj);
      if (d.at(t, t) < 0) negate_row(t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        mpz_class q = d.at(i, t) / d.at(t, t);  // truncated; remainder shrinks
        row_sub(i, t, q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        mpz_class q = d.at(t, j) / d.at(t, t);
        col_sub(j, t, q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (clean) return;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(MpzMat m) {
  const int n = m.size();
  MpzMat x = MpzMat::identity(n);
  Worker w{m, x, n};
  for (int t = 0; t < n; ++t) w.reduce_pivot(t);
  // Enforce the divisibility chain d_t | d_{t+1}: fold offender back into the
  // block and rediagonalize; each pass strictly increases gcd-alignment.
  bool chained = false;
  while (!chained) {
    chained = true;
    for (int t = 0; t + 1 < n; ++t) {
      if (m.at(t + 1, t + 1) % m.at(t, t) == 0) continue;
      chained = false;
      // col t += col t+1 puts d_{t+1} into the block; re-run the pivots.
      w.col_sub(t, t + 1, mpz_class(-1));
      for (int s = t; s < n; ++s) w.reduce_pivot(s);
    }
  }
  SmithResult out{std::vector<mpz_class>(), std::move(x)};
  out.diag.reserve(n);
  for (int t = 0; t < n; ++t) out.diag.push_back(m.at(t, t));
  return out;
}

}  // namespace lieperm
