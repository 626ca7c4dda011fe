#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lieperm/common.hpp"
#include "lieperm/intmat.hpp"

namespace lieperm::rootsys {

enum class Family { A, B, C, D, G2, F4 };

std::string family_name(Family f);

/// A simple complex Lie algebra type (family + rank), validated on
/// construction.  Immutable; cheap to copy (shares precomputed tables).
///
/// Rank ranges: A >= 1, B and C >= 2, D >= 3; G2 and F4 have fixed rank.
/// `max_rank` bounds the classical families (default 6, hard cap kMaxRank).
class LieType {
public:
  static LieType make(Family f, int rank, int max_rank = 6);
  /// Parse "A1".."A6", "B2".."B6", "C2".."C6", "D3".."D6", "G2", "F4".
  static LieType parse(std::string_view name, int max_rank = 6);
  /// All types supported at the default rank bound, in a fixed order.
  static std::vector<LieType> all_supported();

  Family family() const;
  int rank() const;
  std::string name() const;

  bool operator==(const LieType& o) const { return data_ == o.data_; }

  /// Cartan matrix: column j is the j-th simple root written in the
  /// fundamental-weight basis; C[i][j] = <alpha_j, alpha_i^vee>.
  const IMat& cartan() const;
  /// Adjugate of the Cartan matrix (= det(C) * C^{-1}), all entries >= 0.
  const IMat& cartan_adjugate() const;
  int64_t cartan_det() const;

  struct Data;  // opaque shared table

private:
  explicit LieType(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
  friend struct LieTypeAccess;
};

/// The i-th simple root in fundamental-weight coordinates (0-based i);
/// equals column i of the Cartan matrix.
Weight simple_root_in_weight_basis(const LieType& t, int i);

/// Simple reflection s_i applied to a weight: lambda - lambda_i * alpha_i.
Weight apply_simple_reflection(const LieType& t, int i, Weight lambda);

bool is_dominant(const Weight& w);

/// Dominance order: mu <= lambda iff lambda - mu is a nonnegative rational
/// combination of simple roots.  Exact integer test via the adjugate.
bool dominance_leq(const LieType& t, const Weight& mu, const Weight& lambda);

/// det(C) times the sum of the simple-root coordinates of lambda.  Positive
/// scaling of the height, so it orders weights identically.
int64_t scaled_height(const LieType& t, const Weight& lambda);

/// Total order refining dominance: by scaled height, then lexicographically.
/// Returns <0, 0, >0 like a comparator ("larger" = closer to dominant top).
int cmp_height_lex(const LieType& t, const Weight& a, const Weight& b);

/// The unique dominant weight in the Weyl orbit of lambda.
Weight dominant_representative(const LieType& t, Weight lambda);

/// Full Weyl orbit of lambda (deterministic order: BFS from the dominant
/// representative, layers sorted lexicographically).
std::vector<Weight> orbit_of(const LieType& t, const Weight& lambda);

}  // namespace lieperm::rootsys
