#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace lieperm {

/// Hard cap on the rank of any supported root system.
inline constexpr int kMaxRank = 8;

/// Raised when a computation exceeds a configured resource budget
/// (enumeration caps, dominant-weight budgets, |W| caps).
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Small integer vector of fixed capacity kMaxRank.  Used for weights in
/// fundamental-weight coordinates and for monomial exponent vectors.
class IVec {
public:
  IVec() = default;
  explicit IVec(int rank) : rank_(rank) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("IVec: bad rank");
  }
  static IVec of(std::initializer_list<int> v) {
    IVec w(static_cast<int>(v.size()));
    int i = 0;
    for (int x : v) w.c_[i++] = x;
    return w;
  }

  int rank() const { return rank_; }
  int64_t operator[](int i) const { return c_[i]; }
  int64_t& operator[](int i) { return c_[i]; }

  bool operator==(const IVec&) const = default;

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  IVec& operator+=(const IVec& o) {
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  IVec& operator-=(const IVec& o) {
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend IVec operator+(IVec a, const IVec& b) { return a += b; }
  friend IVec operator-(IVec a, const IVec& b) { return a -= b; }
  friend IVec operator*(int64_t s, IVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= s;
    return a;
  }

  /// Lexicographic comparison (first coordinate most significant).
  int cmp_lex(const IVec& o) const {
    for (int i = 0; i < rank_; ++i) {
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
  }

  int64_t sum() const {
    int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += c_[i];
    return s;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

private:
  int rank_ = 0;
  std::array<int64_t, kMaxRank> c_{};
};

using Weight = IVec;

struct IVecHash {
  size_t operator()(const IVec& v) const {
    // FNV-1a over the coordinates.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(v.rank()));
    for (int i = 0; i < v.rank(); ++i) mix(static_cast<uint64_t>(v[i]));
    return static_cast<size_t>(h);
  }
};

}  // namespace lieperm
