#include "lieperm/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace lieperm::weyl {

using rootsys::LieType;

IMat simple_reflection(const LieType& t, int i) {
  const int n = t.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("simple_reflection: index out of range");
  // s_i(lambda) = lambda - lambda_i * alpha_i, so the matrix is
  // I - alpha_i * e_i^T with alpha_i = column i of the Cartan matrix.
  IMat m = IMat::identity(n);
  const Weight alpha = rootsys::simple_root_in_weight_basis(t, i);
  for (int r = 0; r < n; ++r) m.at(r, i) -= alpha[r];
  return m;
}

uint64_t expected_order(const LieType& t) {
  const int n = t.rank();
  auto fact = [](int m) {
    uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<uint64_t>(i);
    return f;
  };
  switch (t.family()) {
    case rootsys::Family::A: return fact(n + 1);
    case rootsys::Family::B:
    case rootsys::Family::C: return (uint64_t{1} << n) * fact(n);
    case rootsys::Family::D: return (uint64_t{1} << (n - 1)) * fact(n);
    case rootsys::Family::G2: return 12;
    case rootsys::Family::F4: return 1152;
  }
  throw std::logic_error("expected_order: unknown family");
}

WeylGroup WeylGroup::generate(const LieType& t, uint64_t max_order) {
  const uint64_t target = expected_order(t);
  if (target > max_order)
    throw BudgetError("WeylGroup::generate: |W| = " + std::to_string(target) +
                      " exceeds cap " + std::to_string(max_order));

  const int n = t.rank();
  std::vector<IMat> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(simple_reflection(t, i));

  WeylGroup g(t);
  g.elements_.reserve(target);
  g.elements_.push_back(IMat::identity(n));
  std::unordered_set<IMat, IMatHash> seen{g.elements_.front()};

  std::vector<IMat> layer{g.elements_.front()};
  while (!layer.empty()) {
    std::vector<IMat> next;
    for (const IMat& w : layer) {
      for (const IMat& s : gens) {
        IMat v = w * s;
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const IMat& a, const IMat& b) { return a.cmp_lex(b) < 0; });
    g.elements_.insert(g.elements_.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  if (g.elements_.size() != target)
    throw std::logic_error("WeylGroup::generate: closure size " +
                           std::to_string(g.elements_.size()) + " != expected " +
                           std::to_string(target));

  // Element orders by repeated multiplication; these groups stay <= 30.
  const IMat id = IMat::identity(n);
  g.orders_.reserve(g.elements_.size());
  for (const IMat& w : g.elements_) {
    IMat p = w;
    int ord = 1;
    while (!(p == id)) {
      p = p * w;
      if (++ord > 30) throw std::logic_error("element order exceeds bound 30");
    }
    g.orders_.push_back(ord);
  }
  g.order_set_.assign(g.orders_.begin(), g.orders_.end());
  std::sort(g.order_set_.begin(), g.order_set_.end());
  g.order_set_.erase(std::unique(g.order_set_.begin(), g.order_set_.end()),
                     g.order_set_.end());

  // Characteristic polynomials, deduplicated in first-seen order.
  std::map<std::vector<int64_t>, int> ids;
  g.charpoly_ids_.reserve(g.elements_.size());
  for (const IMat& w : g.elements_) {
    auto cp = char_poly(w);
    auto [it, fresh] = ids.try_emplace(cp, static_cast<int>(g.charpolys_.size()));
    if (fresh) g.charpolys_.push_back(cp);
    g.charpoly_ids_.push_back(it->second);
  }
  return g;
}

std::vector<Weight> orbit(const WeylGroup& g, const Weight& lambda) {
  return rootsys::orbit_of(g.type(), lambda);
}

}  // namespace lieperm::weyl
