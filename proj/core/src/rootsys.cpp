#include "lieperm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <unordered_set>

namespace lieperm::rootsys {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
  }
  return "?";
}

struct LieType::Data {
  Family family;
  int rank;
  std::string name;
  IMat cartan;
  IMat adjugate;
  int64_t det;
  std::array<IVec, kMaxRank> simple_roots;  // columns of cartan
  IVec height_row;                          // 1^T * adjugate
};

namespace {

// Bourbaki numbering.  A/B/C: chain 1-2-...-n; the short root of B_n and the
// long root of C_n sit at node n.  D: fork at node n-2.  Entries follow the
// column convention C[i][j] = <alpha_j, alpha_i^vee>.
IMat build_cartan(Family f, int n) {
  IMat c(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto link = [&c](int i, int j, int64_t cij, int64_t cji) {
    c.at(i, j) = cij;
    c.at(j, i) = cji;
  };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
      link(n - 2, n - 1, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 2, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    case Family::G2:
      link(0, 1, -3, -1);  // alpha_1 short
      break;
    case Family::F4:
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);  // alpha_3, alpha_4 short
      link(2, 3, -1, -1);
      break;
  }
  return c;
}

std::string type_name(Family f, int rank) {
  switch (f) {
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    default: return family_name(f) + std::to_string(rank);
  }
}

// Shared per-(family, rank) data.  Built once, immutable afterwards.
std::shared_ptr<const LieType::Data> get_data(Family f, int rank) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::shared_ptr<const LieType::Data>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({f, rank});
  if (it != cache.end()) return it->second;

  auto d = std::make_shared<LieType::Data>();
  d->family = f;
  d->rank = rank;
  d->name = type_name(f, rank);
  d->cartan = build_cartan(f, rank);
  d->adjugate = d->cartan.adjugate();
  d->det = d->cartan.det();
  for (int j = 0; j < rank; ++j) d->simple_roots[j] = d->cartan.column(j);
  d->height_row = IVec(rank);
  for (int j = 0; j < rank; ++j) {
    int64_t s = 0;
    for (int i = 0; i < rank; ++i) s += d->adjugate.at(i, j);
    d->height_row[j] = s;
  }
  cache[{f, rank}] = d;
  return d;
}

}  // namespace

struct LieTypeAccess {
  static const LieType::Data& data(const LieType& t) { return *t.data_; }
  static LieType wrap(std::shared_ptr<const LieType::Data> d) { return LieType(std::move(d)); }
};

LieType LieType::make(Family f, int rank, int max_rank) {
  if (max_rank < 1 || max_rank > kMaxRank)
    throw std::invalid_argument("LieType: max_rank out of range");
  int lo = 1;
  switch (f) {
    case Family::A: lo = 1; break;
    case Family::B: lo = 2; break;
    case Family::C: lo = 2; break;
    case Family::D: lo = 3; break;
    case Family::G2:
      if (rank != 2) throw std::invalid_argument("LieType: G2 has rank 2");
      lo = 2;
      max_rank = std::max(max_rank, 2);
      break;
    case Family::F4:
      if (rank != 4) throw std::invalid_argument("LieType: F4 has rank 4");
      lo = 4;
      max_rank = std::max(max_rank, 4);
      break;
  }
  if (rank < lo || rank > max_rank)
    throw std::invalid_argument("LieType: rank " + std::to_string(rank) +
                                " out of range for family " + family_name(f));
  return LieTypeAccess::wrap(get_data(f, rank));
}

LieType LieType::parse(std::string_view name, int max_rank) {
  if (name == "G2") return make(Family::G2, 2, max_rank);
  if (name == "F4") return make(Family::F4, 4, max_rank);
  if (name.size() >= 2) {
    Family f;
    switch (name[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'C': f = Family::C; break;
      case 'D': f = Family::D; break;
      default: throw std::invalid_argument("unsupported type: " + std::string(name));
    }
    int rank = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw std::invalid_argument("unsupported type: " + std::string(name));
      rank = rank * 10 + (name[i] - '0');
      if (rank > 1000) break;
    }
    return make(f, rank, max_rank);
  }
  throw std::invalid_argument("unsupported type: " + std::string(name));
}

std::vector<LieType> LieType::all_supported() {
  std::vector<LieType> out;
  for (int r = 1; r <= 6; ++r) out.push_back(make(Family::A, r));
  for (int r = 2; r <= 6; ++r) out.push_back(make(Family::B, r));
  for (int r = 2; r <= 6; ++r) out.push_back(make(Family::C, r));
  for (int r = 3; r <= 6; ++r) out.push_back(make(Family::D, r));
  out.push_back(make(Family::G2, 2));
  out.push_back(make(Family::F4, 4));
  return out;
}

Family LieType::family() const { return data_->family; }
int LieType::rank() const { return data_->rank; }
std::string LieType::name() const { return data_->name; }
const IMat& LieType::cartan() const { return data_->cartan; }
const IMat& LieType::cartan_adjugate() const { return data_->adjugate; }
int64_t LieType::cartan_det() const { return data_->det; }

Weight simple_root_in_weight_basis(const LieType& t, int i) {
  if (i < 0 || i >= t.rank()) throw std::invalid_argument("simple root index out of range");
  return LieTypeAccess::data(t).simple_roots[i];
}

Weight apply_simple_reflection(const LieType& t, int i, Weight lambda) {
  if (i < 0 || i >= t.rank()) throw std::invalid_argument("reflection index out of range");
  const IVec& alpha = LieTypeAccess::data(t).simple_roots[i];
  const int64_t li = lambda[i];
  if (li == 0) return lambda;
  for (int j = 0; j < t.rank(); ++j) lambda[j] -= li * alpha[j];
  return lambda;
}

bool is_dominant(const Weight& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (w[i] < 0) return false;
  return true;
}

bool dominance_leq(const LieType& t, const Weight& mu, const Weight& lambda) {
  // lambda - mu = sum c_i alpha_i with c = C^{-1} (lambda - mu);
  // det(C) > 0, so testing adj(C) * (lambda - mu) >= 0 is exact.
  const IMat& adj = t.cartan_adjugate();
  const Weight d = lambda - mu;
  for (int i = 0; i < t.rank(); ++i) {
    int64_t s = 0;
    for (int j = 0; j < t.rank(); ++j) s += adj.at(i, j) * d[j];
    if (s < 0) return false;
  }
  return true;
}

int64_t scaled_height(const LieType& t, const Weight& lambda) {
  const IVec& h = LieTypeAccess::data(t).height_row;
  int64_t s = 0;
  for (int j = 0; j < t.rank(); ++j) s += h[j] * lambda[j];
  return s;
}

int cmp_height_lex(const LieType& t, const Weight& a, const Weight& b) {
  const int64_t ha = scaled_height(t, a), hb = scaled_height(t, b);
  if (ha != hb) return ha < hb ? -1 : 1;
  return a.cmp_lex(b);
}

Weight dominant_representative(const LieType& t, Weight lambda) {
  const int n = t.rank();
  const auto& data = LieTypeAccess::data(t);
  // Each step fixes the first negative coordinate; the scaled height rises by
  // -lambda_i * det(C) > 0 per step, and at most len(w_0) steps are needed.
  for (int guard = 0; guard < 512; ++guard) {
    int i = 0;
    for (; i < n; ++i)
      if (lambda[i] < 0) break;
    if (i == n) return lambda;
    const int64_t li = lambda[i];
    const IVec& alpha = data.simple_roots[i];
    for (int j = 0; j < n; ++j) lambda[j] -= li * alpha[j];
  }
  throw std::logic_error("dominant_representative: did not converge");
}

std::vector<Weight> orbit_of(const LieType& t, const Weight& lambda) {
  if (lambda.rank() != t.rank()) throw std::invalid_argument("orbit_of: rank mismatch");
  const int n = t.rank();
  Weight top = dominant_representative(t, lambda);
  std::vector<Weight> result{top};
  std::unordered_set<Weight, IVecHash> seen{top};
  std::vector<Weight> layer{top};
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : layer) {
      for (int i = 0; i < n; ++i) {
        Weight v = apply_simple_reflection(t, i, w);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end(), [](const Weight& a, const Weight& b) {
      return a.cmp_lex(b) < 0;
    });
    result.insert(result.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return result;
}

}  // namespace lieperm::rootsys
