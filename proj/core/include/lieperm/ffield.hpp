#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lieperm/polymap.hpp"

namespace lieperm::ffield {

/// Largest supported extension degree.
inline constexpr int kMaxDegree = 16;

/// An element of F_q in the polynomial basis: e residues mod p, low degree
/// first, always fully reduced.
struct Fq {
  std::vector<uint32_t> c;
  bool operator==(const Fq&) const = default;
};

/// F_q = F_p[x]/(modulus), q = p^e.  The modulus is pinned deterministically:
/// the monic irreducible of degree e whose coefficient vector (c_0,...,c_{e-1})
/// has the smallest packed value sum(c_i p^i); e = 1 uses the trivial modulus.
/// Immutable; arithmetic is pure and safe to share across threads.
class FieldSpec {
public:
  /// p prime (p < 2^31), 1 <= e <= kMaxDegree, p^e < 2^62.
  static FieldSpec make(uint64_t p, int e);
  /// Parses a prime power: from_order(9) = make(3, 2).
  static FieldSpec from_order(uint64_t q);

  uint64_t p() const { return p_; }
  int e() const { return e_; }
  uint64_t q() const { return q_; }
  /// Coefficients c_0..c_{e-1} of the monic modulus x^e + sum c_i x^i.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_ && e_ == o.e_; }

  // Allocation-free kernels on length-e coefficient spans (out may alias).
  void add(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
  void sub(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
  void mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
  void scalar_mul(uint32_t s, const uint32_t* a, uint32_t* out) const;
  void pow(const uint32_t* a, uint64_t n, uint32_t* out) const;
  /// Extended Euclid in F_p[x]; throws std::domain_error on zero input.
  void inv(const uint32_t* a, uint32_t* out) const;
  bool is_zero(const uint32_t* a) const;

  /// Dense element index: sum c_i p^i in [0, q).
  uint64_t index_of(const uint32_t* a) const;
  void from_index(uint64_t idx, uint32_t* out) const;

  // Fq conveniences (validated arity, allocating).
  Fq zero() const { return Fq{std::vector<uint32_t>(e_, 0)}; }
  Fq one() const;
  Fq element(uint64_t index) const;
  uint64_t index(const Fq& a) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_integer(const mpz_class& v) const;
  Fq add(const Fq& a, const Fq& b) const;
  Fq sub(const Fq& a, const Fq& b) const;
  Fq mul(const Fq& a, const Fq& b) const;
  Fq pow(const Fq& a, uint64_t n) const;
  Fq inv(const Fq& a) const;

private:
  FieldSpec() = default;
  const uint32_t* check(const Fq& a) const;

  uint64_t p_ = 0;
  uint64_t q_ = 0;
  int e_ = 0;
  std::vector<uint32_t> mod_;
};

/// A PolyMap with coefficients reduced into the prime subfield and terms in
/// dense evaluation-ready form; zero terms dropped.
class ReducedMap {
public:
  ReducedMap(const exppoly::PolyMap& P, FieldSpec F);

  const FieldSpec& field() const { return F_; }
  const rootsys::LieType& type() const { return type_; }
  int rank() const { return n_; }
  /// Surviving terms of component j after reduction.
  size_t term_count(int j) const { return comps_[j].size(); }

  /// Per-thread evaluation workspace.
  struct Scratch {
    std::vector<uint32_t> pows;
    std::array<uint32_t, kMaxDegree> tmp;
  };
  Scratch make_scratch() const;

  /// point and out are rank * e words, component-major; no allocation.
  void evaluate_raw(const uint32_t* point, uint32_t* out, Scratch& s) const;

  std::vector<Fq> evaluate(const std::vector<Fq>& v) const;

private:
  struct Term {
    std::array<int32_t, kMaxRank> exp;
    uint32_t coeff;  // scalar in F_p
  };
  FieldSpec F_;
  rootsys::LieType type_;
  int n_;
  std::vector<std::vector<Term>> comps_;
  std::array<int32_t, kMaxRank> max_exp_{};
};

}  // namespace lieperm::ffield
