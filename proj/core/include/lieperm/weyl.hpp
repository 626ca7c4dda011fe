#pragma once

#include <cstdint>
#include <vector>

#include "lieperm/intmat.hpp"
#include "lieperm/rootsys.hpp"

namespace lieperm::weyl {

/// Matrix of the simple reflection s_i on fundamental-weight coordinates
/// (column convention: columns are images of the basis weights).
IMat simple_reflection(const rootsys::LieType& t, int i);

/// Order of the Weyl group from the classical closed forms:
/// A_n: (n+1)!, B_n/C_n: 2^n n!, D_n: 2^{n-1} n!, G2: 12, F4: 1152.
uint64_t expected_order(const rootsys::LieType& t);

/// The full Weyl group as integer matrices acting on fundamental-weight
/// coordinates.  Element order is deterministic: breadth-first closure of the
/// simple reflections, each layer sorted lexicographically by matrix entries.
/// Immutable after generation; safe to share across threads.
class WeylGroup {
public:
  /// Generates the group; refuses types whose order exceeds `max_order`.
  static WeylGroup generate(const rootsys::LieType& t, uint64_t max_order = 2'000'000);

  const rootsys::LieType& type() const { return type_; }
  size_t order() const { return elements_.size(); }
  const std::vector<IMat>& elements() const { return elements_; }

  /// Multiplicative order of element idx (identity has order 1).
  int element_order(size_t idx) const { return orders_[idx]; }
  /// Sorted distinct element orders.
  const std::vector<int>& order_set() const { return order_set_; }

  /// Deduplicated characteristic polynomials (coefficients low degree first),
  /// in first-seen order over the element list.
  const std::vector<std::vector<int64_t>>& charpoly_set() const { return charpolys_; }
  /// Index into charpoly_set() for element idx.
  int charpoly_id(size_t idx) const { return charpoly_ids_[idx]; }

private:
  explicit WeylGroup(rootsys::LieType t) : type_(std::move(t)) {}
  rootsys::LieType type_;
  std::vector<IMat> elements_;
  std::vector<int> orders_;
  std::vector<int> order_set_;
  std::vector<std::vector<int64_t>> charpolys_;
  std::vector<int> charpoly_ids_;
};

/// Weyl orbit of a weight; same set as {w(lambda) : w in group}, computed by
/// reflection BFS.  |orbit| * |stabilizer| = |W|.
std::vector<Weight> orbit(const WeylGroup& g, const Weight& lambda);

}  // namespace lieperm::weyl
