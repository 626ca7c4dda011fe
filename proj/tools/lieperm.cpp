// Command-line front end: generate the polynomial maps, check the permutation
// criteria over finite fields, search for exceptional exponents, verify the
// library's structural properties, and print Weyl-group order data.
//
// Exit codes: 0 success / permutation, 1 usage or input error, 2 resource
// budget exceeded, 3 not-a-permutation verdict, 4 verification suite failure.

#include <CLI11.hpp>
#include <json.hpp>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lieperm/chevalley.hpp"
#include "lieperm/excep.hpp"
#include "lieperm/polymap_io.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace lieperm;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBudget = 2,
  kNotPermutation = 3,
  kVerifyFailure = 4,
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

/// Writes the command's primary output to --out when given, else stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  f << text;
  if (!f) throw std::runtime_error("cannot write output file: " + out_path);
}

// ---------------------------------------------------------------------------
// Cache: canonical map files keyed by (type, k, format version).

fs::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LIEPERM_CACHE_DIR"); env && *env) return env;
  const char* home = std::getenv("HOME");
  return fs::path(home && *home ? home : ".") / ".lieperm";
}

void atomic_write(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << bytes;
    if (!f) throw std::runtime_error("cannot write cache file: " + tmp.string());
  }
  fs::rename(tmp, path);
}

struct GeneratedMap {
  exppoly::PolyMap map;
  std::string bytes;  // canonical serialization
  bool cache_hit = false;
  fs::path file;
};

/// Returns the cached map when a valid current-format file exists, else
/// generates, stores atomically, and returns the fresh bytes.
GeneratedMap load_or_generate(const rootsys::LieType& t, int k, const fs::path& dir,
                              const exppoly::GenerationLimits& lim) {
  fs::path file = dir / (t.name() + "-k" + std::to_string(k) + "-v" +
                         std::to_string(exppoly::kPolyMapFormatVersion) + ".json");
  if (fs::exists(file)) {
    std::ifstream f(file, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string bytes = buf.str();
    try {
      exppoly::PolyMap p = exppoly::deserialize(bytes);
      if (p.type == t && p.k == k) return {std::move(p), std::move(bytes), true, file};
    } catch (const exppoly::ParseError&) {
      // Corrupt or stale cache entry: fall through and regenerate.
    }
  }
  exppoly::PolyMap p = exppoly::compute_P(t, k, lim);
  std::string bytes = exppoly::serialize(p);
  atomic_write(file, bytes);
  return {std::move(p), std::move(bytes), false, file};
}

// ---------------------------------------------------------------------------
// Shared argument plumbing.

struct Args {
  std::string type_str;
  int64_t k = 0;
  std::string q_str;
  bool brute_force = false;
  bool full_sum = false;
  std::string out_path;
  std::string format = "text";
  std::string cache_dir_flag;
  uint64_t max_points = 10'000'000;
  uint64_t seed = 0;
  std::vector<std::string> suites;
};

uint64_t parse_u64(const std::string& s, const char* what) {
  uint64_t v = 0;
  size_t pos = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (...) {
    throw std::invalid_argument(std::string("invalid ") + what + ": " + s);
  }
  if (pos != s.size()) throw std::invalid_argument(std::string("invalid ") + what + ": " + s);
  return v;
}

/// Accepts "p^e" or a plain prime power ("9" = 3^2).
ffield::FieldSpec parse_q(const std::string& s) {
  if (auto caret = s.find('^'); caret != std::string::npos) {
    uint64_t p = parse_u64(s.substr(0, caret), "q");
    uint64_t e = parse_u64(s.substr(caret + 1), "q exponent");
    if (e == 0 || e > 64) throw std::invalid_argument("invalid q exponent: " + s);
    return ffield::FieldSpec::make(p, static_cast<int>(e));
  }
  return ffield::FieldSpec::from_order(parse_u64(s, "q"));
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const Args& a) {
  auto t = rootsys::LieType::parse(a.type_str);
  if (a.k < 1) throw std::invalid_argument("--k must be >= 1");
  exppoly::GenerationLimits lim;
  lim.max_dominant_weights = a.max_points;
  GeneratedMap gm = load_or_generate(t, static_cast<int>(a.k), resolve_cache_dir(a.cache_dir_flag), lim);

  std::string bytes = a.full_sum ? exppoly::serialize_full_sum_variant(gm.map) : gm.bytes;
  emit(a.out_path, bytes);

  // Term counts go to stderr when the map itself occupies stdout.
  std::ostream& diag = a.out_path.empty() ? std::cerr : std::cout;
  diag << t.name() << " k=" << a.k << (a.full_sum ? " (full-sum variant)" : "") << ": "
       << gm.map.components.size() << " components\n";
  for (size_t j = 0; j < gm.map.components.size(); ++j)
    diag << "  component " << j + 1 << ": " << gm.map.components[j].size() << " terms\n";
  std::cerr << "cache: " << (gm.cache_hit ? "hit " : "stored ") << gm.file.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------
// check

std::string report_json(const excep::CriterionReport& r) {
  ordered_json j;
  j["type"] = r.type.name();
  j["k"] = r.k;
  j["q"] = r.q;
  j["theorem_holds"] = r.theorem_holds;
  j["order_holds"] = r.order_holds;
  j["failing_charpoly_id"] =
      r.failing_charpoly_id ? ordered_json(*r.failing_charpoly_id) : ordered_json(nullptr);
  j["brute_force"] = r.brute_force ? ordered_json(*r.brute_force) : ordered_json(nullptr);
  j["rows"] = ordered_json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"charpoly_id", row.charpoly_id},
                         {"value", row.value.get_str()},
                         {"gcd_with_k", row.gcd_with_k.get_str()}});
  return j.dump(1) + "\n";
}

std::string report_csv(const excep::CriterionReport& r) {
  std::ostringstream os;
  os << "type,k,q,theorem_holds,order_holds,failing_charpoly_id,brute_force,charpoly_id,value,"
        "gcd_with_k\n";
  std::string head = r.type.name() + "," + std::to_string(r.k) + "," + std::to_string(r.q) + "," +
                     bool_str(r.theorem_holds) + "," + bool_str(r.order_holds) + "," +
                     (r.failing_charpoly_id ? std::to_string(*r.failing_charpoly_id) : "") + "," +
                     (r.brute_force ? bool_str(*r.brute_force) : "");
  for (const auto& row : r.rows)
    os << head << "," << row.charpoly_id << "," << row.value.get_str() << ","
       << row.gcd_with_k.get_str() << "\n";
  return os.str();
}

std::string report_text(const excep::CriterionReport& r) {
  std::ostringstream os;
  os << "check " << r.type.name() << " k=" << r.k << " q=" << r.q << "\n";
  os << "  charpoly rows (id, chi(q), gcd with k):\n";
  for (const auto& row : r.rows)
    os << "    " << row.charpoly_id << "  " << row.value.get_str() << "  "
       << row.gcd_with_k.get_str() << "\n";
  os << "  theorem criterion: " << bool_str(r.theorem_holds);
  if (r.failing_charpoly_id) os << " (first failing charpoly id " << *r.failing_charpoly_id << ")";
  os << "\n  order criterion:   " << bool_str(r.order_holds) << "\n";
  if (r.brute_force)
    os << "  brute force:       " << bool_str(*r.brute_force) << "\n";
  os << "verdict: " << (r.theorem_holds ? "permutation" : "not a permutation") << "\n";
  return os.str();
}

int cmd_check(const Args& a) {
  auto t = rootsys::LieType::parse(a.type_str);
  auto F = parse_q(a.q_str);
  auto W = weyl::WeylGroup::generate(t);
  auto th = excep::theorem_criterion(W, F.q(), a.k);
  bool oc = excep::order_criterion(W, F.q(), a.k);

  std::optional<bool> brute;
  if (a.brute_force) {
    GeneratedMap gm = load_or_generate(t, static_cast<int>(a.k), resolve_cache_dir(a.cache_dir_flag), {});
    ffield::ReducedMap M(gm.map, F);
    excep::BruteForceOptions opt;
    opt.max_points = a.max_points;
    brute = excep::brute_force_is_permutation(M, opt).is_permutation;
  }
  auto report = excep::CriterionReport::make(t, a.k, F.q(), th, oc, brute);

  if (a.format == "json")
    emit(a.out_path, report_json(report));
  else if (a.format == "csv")
    emit(a.out_path, report_csv(report));
  else
    emit(a.out_path, report_text(report));
  return report.theorem_holds ? kOk : kNotPermutation;
}

// ---------------------------------------------------------------------------
// search

int cmd_search(const Args& a) {
  auto t = rootsys::LieType::parse(a.type_str);
  auto cert = excep::search_exceptional(t);

  std::string out;
  if (a.format == "json") {
    ordered_json j;
    j["type"] = cert.type.name();
    j["k"] = cert.k;
    j["modulus"] = cert.modulus;
    j["residue"] = cert.residue;
    j["order_set"] = cert.order_set;
    j["verified_primes"] = cert.verified_primes;
    out = j.dump(1) + "\n";
  } else if (a.format == "csv") {
    out = "type,k,modulus,residue,order_set,verified_primes\n" + cert.type.name() + "," +
          std::to_string(cert.k) + "," + std::to_string(cert.modulus) + "," +
          std::to_string(cert.residue) + "," + join(cert.order_set, ";") + "," +
          join(cert.verified_primes, ";") + "\n";
  } else {
    std::ostringstream os;
    os << "search " << cert.type.name() << ": exceptional exponent found\n";
    os << "  k = " << cert.k << " (prime)\n";
    os << "  every prime p = " << cert.residue << " (mod " << cert.modulus
       << ") gives a permutation of F_p^" << cert.type.rank() << "\n";
    os << "  element orders: " << join(cert.order_set, " ") << "\n";
    os << "  verified primes: " << join(cert.verified_primes, " ") << "\n";
    out = os.str();
  }
  emit(a.out_path, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// orders

int cmd_orders(const Args& a) {
  auto t = rootsys::LieType::parse(a.type_str);
  auto W = weyl::WeylGroup::generate(t);
  size_t n_charpolys = W.charpoly_set().size();

  std::string out;
  if (a.format == "json") {
    ordered_json j;
    j["type"] = t.name();
    j["weyl_order"] = W.order();
    j["order_set"] = W.order_set();
    j["distinct_charpolys"] = n_charpolys;
    out = j.dump(1) + "\n";
  } else if (a.format == "csv") {
    out = "type,weyl_order,order_set,distinct_charpolys\n" + t.name() + "," +
          std::to_string(W.order()) + "," + join(W.order_set(), ";") + "," +
          std::to_string(n_charpolys) + "\n";
  } else {
    std::ostringstream os;
    os << t.name() << ": |W| = " << W.order() << ", element orders {" << join(W.order_set(), ", ")
       << "}, distinct charpolys " << n_charpolys << "\n";
    out = os.str();
  }
  emit(a.out_path, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string suite;
  bool pass;
  std::string detail;  // kept comma-free so the csv stays flat
};

const std::vector<std::string> kAllSuites = {"fixed-points", "frobenius", "denominators",
                                             "functional-equation", "semigroup"};

SuiteResult run_suite(const std::string& suite, const rootsys::LieType& t, const Args& a) {
  try {
    if (suite == "fixed-points") {
      int k = a.k > 0 ? static_cast<int>(a.k) : 2;
      excep::FixedPointOptions opt;
      opt.max_solutions = a.max_points;
      auto fps = excep::fixed_points(t, k, opt);
      return {suite, true, "count " + std::to_string(fps.points.size()) + " at k=" + std::to_string(k)};
    }
    if (suite == "denominators") {
      int k = a.k > 0 ? static_cast<int>(a.k) : 2;
      excep::FixedPointOptions opt;
      opt.max_solutions = a.max_points;
      bool ok = excep::denominator_check(t, k, opt);
      return {suite, ok,
              ok ? "all torus denominators divide k^ord(w)-1 at k=" + std::to_string(k)
                 : "denominator outside k^ord(w)-1 at k=" + std::to_string(k)};
    }
    if (suite == "frobenius") {
      auto F = a.q_str.empty() ? ffield::FieldSpec::make(2, 1) : parse_q(a.q_str);
      excep::BruteForceOptions opt;
      opt.max_points = a.max_points;
      bool ok = excep::frobenius_check(t, F, {}, opt);
      return {suite, ok,
              std::string(ok ? "degree-q map reduces to Frobenius" : "mismatch with Frobenius") +
                  " on F_" + std::to_string(F.q()) + "^" + std::to_string(t.rank())};
    }
    if (suite == "functional-equation") {
      std::vector<int> ks;
      if (a.k > 0) {
        ks.push_back(static_cast<int>(a.k));
      } else {
        for (int k = 2; k <= (t.rank() <= 3 ? 6 : 4); ++k) ks.push_back(k);
      }
      std::mt19937_64 rng(a.seed);
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      double worst = 0;
      for (int k : ks) {
        auto P = exppoly::compute_P(t, k);
        for (int trial = 0; trial < 100; ++trial) {
          std::vector<double> x(t.rank());
          for (auto& v : x) v = uni(rng);
          worst = std::max(worst, exppoly::functional_equation_error(P, x));
        }
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2e", worst);
      bool ok = worst < 1e-9;
      return {suite, ok,
              "max error " + std::string(buf) + " over 100 points per k in {" + join(ks, " ") + "}"};
    }
    if (suite == "semigroup") {
      auto P2 = exppoly::compute_P(t, 2);
      auto P3 = exppoly::compute_P(t, 3);
      auto P6 = exppoly::compute_P(t, 6);
      bool ok = exppoly::compose(P2, P3).components == P6.components &&
                exppoly::compose(P3, P2).components == P6.components;
      return {suite, ok, ok ? "P^2*P^3 = P^3*P^2 = P^6 coefficient-exact" : "composition mismatch"};
    }
  } catch (const BudgetError&) {
    throw;  // budget exhaustion is a global exit-2, not a suite verdict
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == ',' || c == '\n') c = ';';
    return {suite, false, msg};
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

int cmd_verify(const Args& a) {
  auto t = rootsys::LieType::parse(a.type_str);
  std::vector<std::string> suites = a.suites.empty() ? kAllSuites : a.suites;

  std::vector<SuiteResult> results;
  for (const auto& s : suites) results.push_back(run_suite(s, t, a));
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  std::string out;
  if (a.format == "json") {
    ordered_json j;
    j["type"] = t.name();
    j["seed"] = a.seed;
    j["suites"] = ordered_json::array();
    for (const auto& r : results)
      j["suites"].push_back({{"suite", r.suite}, {"pass", r.pass}, {"detail", r.detail}});
    out = j.dump(1) + "\n";
  } else if (a.format == "csv") {
    std::ostringstream os;
    os << "type,suite,pass,detail\n";
    for (const auto& r : results)
      os << t.name() << "," << r.suite << "," << bool_str(r.pass) << "," << r.detail << "\n";
    out = os.str();
  } else {
    std::ostringstream os;
    for (const auto& r : results)
      os << (r.pass ? "PASS" : "FAIL") << " " << r.suite << ": " << r.detail << "\n";
    out = os.str();
  }
  emit(a.out_path, out);
  return all_pass ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Integrable polynomial mappings attached to simple Lie types:\n"
      "generation, finite-field permutation criteria, and property checks."};
  app.require_subcommand(1);
  Args a;

  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("type", a.type_str, "Lie type (A1..A6, B2..B6, C2..C6, D3..D6, G2, F4)")
        ->required();
    sub->add_option("--out", a.out_path, "write primary output to this file instead of stdout");
    if (with_format)
      sub->add_option("--format", a.format, "output format")
          ->transform(CLI::IsMember({"json", "csv", "text"}))
          ->capture_default_str();
  };

  auto* g = app.add_subcommand("generate", "compute the degree-k map and print/cache it");
  add_common(g, false);
  g->add_option("--k", a.k, "map degree (>= 1)")->required();
  g->add_option("--cache-dir", a.cache_dir_flag, "cache directory (default: $LIEPERM_CACHE_DIR or ~/.lieperm)");
  g->add_option("--max-points", a.max_points, "dominant-weight budget for generation")
      ->capture_default_str();
  g->add_flag("--full-sum", a.full_sum,
              "emit the full-orbit-sum rescaling (rational coefficients, not cached)");

  auto* c = app.add_subcommand("check", "decide whether the degree-k map permutes F_q^n");
  add_common(c, true);
  c->add_option("--k", a.k, "map degree (>= 2)")->required();
  c->add_option("--q", a.q_str, "field order: prime power, plain (9) or explicit (3^2)")->required();
  c->add_flag("--brute-force", a.brute_force, "also test all q^n points exhaustively");
  c->add_option("--cache-dir", a.cache_dir_flag, "cache directory for the generated map");
  c->add_option("--max-points", a.max_points, "cap on q^n for the exhaustive test")
      ->capture_default_str();

  auto* s = app.add_subcommand("search", "find an exceptional exponent with verified prime witnesses");
  add_common(s, true);

  auto* v = app.add_subcommand("verify", "run property suites against the library");
  add_common(v, true);
  v->add_option("--suite", a.suites, "suites to run (default: all)")
      ->transform(CLI::IsMember(kAllSuites));
  v->add_option("--k", a.k, "degree for fixed-points/denominators (default 2) or a single degree for functional-equation");
  v->add_option("--q", a.q_str, "field order for the frobenius suite (default 2)");
  v->add_option("--seed", a.seed, "seed for sampled checks")->capture_default_str();
  v->add_option("--max-points", a.max_points, "enumeration budget")->capture_default_str();

  auto* o = app.add_subcommand("orders", "print the Weyl group order and element-order set");
  add_common(o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;  // help/version exit 0; any parse error is a usage error
  }

  try {
    if (g->parsed()) return cmd_generate(a);
    if (c->parsed()) return cmd_check(a);
    if (s->parsed()) return cmd_search(a);
    if (v->parsed()) return cmd_verify(a);
    if (o->parsed()) return cmd_orders(a);
    return kUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
