#include "lieperm/polymap_io.hpp"

#include <json.hpp>

#include <limits>

#include "lieperm/weyl.hpp"

namespace lieperm::exppoly {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> variable_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

ordered_json header_json(const PolyMap& p) {
  ordered_json j;
  j["type"] = p.type.name();
  j["k"] = p.k;
  return j;
}

template <typename C, typename CoeffToString>
ordered_json components_json(const std::vector<MultiPoly<C>>& comps, CoeffToString&& coeff_str) {
  ordered_json out = ordered_json::array();
  for (const auto& comp : comps) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : comp.terms()) {
      ordered_json term;
      ordered_json exp = ordered_json::array();
      for (int i = 0; i < e.rank(); ++i) exp.push_back(e[i]);
      term["exp"] = std::move(exp);
      term["coeff"] = coeff_str(c);
      terms.push_back(std::move(term));
    }
    out.push_back(std::move(terms));
  }
  return out;
}

bool valid_integer_literal(const std::string& s) {
  size_t i = s.size() && s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  if (s[i] == '0') return false;  // zero coefficients are never serialized
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

[[noreturn]] void fail(const std::string& msg) { throw ParseError("PolyMap parse: " + msg); }

}  // namespace

std::string serialize(const PolyMap& p) {
  ordered_json j = header_json(p);
  j["variables"] = variable_names(p.rank());
  j["components"] = components_json(p.components, [](const mpz_class& c) { return c.get_str(); });
  return j.dump(1) + "\n";
}

PolyMap deserialize(std::string_view bytes, int max_rank) {
  ordered_json j;
  try {
    j = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("PolyMap parse: ") + e.what(), e.byte);
  }
  if (!j.is_object()) fail("top level is not an object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "type" && key != "k" && key != "variables" && key != "components")
      fail("unexpected field '" + key + "' (non-canonical input)");
  }
  for (const char* key : {"type", "k", "variables", "components"})
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'");

  if (!j["type"].is_string()) fail("'type' must be a string");
  PolyMap p{rootsys::LieType::parse("A1"), 1, {}};
  try {
    p.type = rootsys::LieType::parse(j["type"].get<std::string>(), max_rank);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  const int n = p.type.rank();

  if (!j["k"].is_number_integer()) fail("'k' must be an integer");
  int64_t k = j["k"].get<int64_t>();
  if (k < 1 || k > std::numeric_limits<int>::max()) fail("'k' out of range");
  p.k = static_cast<int>(k);

  const auto names = variable_names(n);
  if (!j["variables"].is_array() || j["variables"].size() != static_cast<size_t>(n))
    fail("'variables' must list exactly rank-many names");
  for (int i = 0; i < n; ++i)
    if (!j["variables"][i].is_string() || j["variables"][i].get<std::string>() != names[i])
      fail("'variables' must be [\"X1\",...] in order");

  if (!j["components"].is_array() || j["components"].size() != static_cast<size_t>(n))
    fail("'components' must hold exactly rank-many term lists");
  GradedLexLess less;
  for (int ci = 0; ci < n; ++ci) {
    const auto& terms = j["components"][ci];
    if (!terms.is_array()) fail("component " + std::to_string(ci + 1) + " is not an array");
    PolyZ poly(n);
    bool have_prev = false;
    IVec prev;
    for (const auto& term : terms) {
      if (!term.is_object() || term.size() != 2 || !term.contains("exp") ||
          !term.contains("coeff"))
        fail("terms must be objects with exactly 'exp' and 'coeff'");
      const auto& je = term["exp"];
      if (!je.is_array() || je.size() != static_cast<size_t>(n))
        fail("'exp' must be an array of rank-many integers");
      IVec e(n);
      for (int i = 0; i < n; ++i) {
        if (!je[i].is_number_integer()) fail("'exp' entries must be integers");
        int64_t v = je[i].get<int64_t>();
        if (v < 0 || v > 1'000'000) fail("'exp' entry out of range");
        e[i] = v;
      }
      if (!term["coeff"].is_string()) fail("'coeff' must be a decimal string");
      std::string cs = term["coeff"].get<std::string>();
      if (!valid_integer_literal(cs))
        fail("'coeff' is not a canonical nonzero decimal integer: \"" + cs + "\"");
      if (have_prev && !less(prev, e)) fail("terms not in graded-lex order at exp " + e.to_string());
      prev = e;
      have_prev = true;
      poly.add_term(e, mpz_class(cs, 10));
    }
    p.components.push_back(std::move(poly));
  }
  return p;
}

std::string serialize_full_sum_variant(const PolyMap& p) {
  const int n = p.rank();
  // Stabilizer sizes of the fundamental weights: |W| / |orbit|.
  std::vector<mpz_class> stab(n);
  uint64_t total = weyl::expected_order(p.type);
  for (int j = 0; j < n; ++j) {
    Weight w(n);
    w[j] = 1;
    stab[j] = mpz_class(static_cast<unsigned long>(total)) /
              static_cast<unsigned long>(rootsys::orbit_of(p.type, w).size());
  }
  // Conjugated map: component j picks up stab[j], each variable i is divided
  // by stab[i] to the power of its exponent.
  std::vector<PolyQ> comps;
  comps.reserve(n);
  for (int j = 0; j < n; ++j) {
    PolyQ out(n);
    for (const auto& [e, c] : p.components[j].terms()) {
      mpq_class q(c * stab[j]);
      for (int i = 0; i < n; ++i)
        for (int64_t rep = 0; rep < e[i]; ++rep) q /= stab[i];
      q.canonicalize();
      out.add_term(e, q);
    }
    comps.push_back(std::move(out));
  }
  ordered_json j = header_json(p);
  j["variant"] = "full-sum";
  j["variables"] = variable_names(n);
  j["components"] = components_json(comps, [](const mpq_class& c) { return c.get_str(); });
  return j.dump(1) + "\n";
}

}  // namespace lieperm::exppoly
