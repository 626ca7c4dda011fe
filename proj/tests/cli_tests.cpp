// End-to-end tests of the command line tool; each case spawns the built
// binary through the shell and inspects exit status, stdout, and cache files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

/// Runs `cmd` under sh, capturing stdout (stderr only if the caller redirects).
RunResult run(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(status != -1);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string cli() { return std::string(LIEPERM_CLI_PATH); }

/// Fresh cache directory per test case.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("lieperm-clitest-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("usage surface") {
  CHECK(run(cli() + " --help").code == 0);
  CHECK(run(cli() + " 2>/dev/null").code == 1);
  CHECK(run(cli() + " frobnicate A1 2>/dev/null").code == 1);
  CHECK(run(cli() + " generate A1 2>/dev/null").code == 1);           // missing --k
  CHECK(run(cli() + " check A1 --k 2 2>/dev/null").code == 1);        // missing --q
  CHECK(run(cli() + " generate A1 --k 2 --bogus 2>/dev/null").code == 1);
  CHECK(run(cli() + " verify A1 --suite nope 2>/dev/null").code == 1);
}

TEST_CASE("generate: unsupported type exits 1") {
  TempDir d;
  CHECK(run(cli() + " generate E8 --k 2 --cache-dir " + d.str() + " 2>/dev/null").code == 1);
}

TEST_CASE("generate: Dickson quintic on stdout, term counts on stderr") {
  TempDir d;
  auto r = run(cli() + " generate A1 --k 5 --cache-dir " + d.str() + " 2>/dev/null");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "A1");
  CHECK(j["k"] == 5);
  CHECK(j["components"][0].size() == 3);
  // Diagnostics are not mixed into the map bytes.
  CHECK(r.out.find("component 1:") == std::string::npos);

  auto diag = run(cli() + " generate A1 --k 5 --cache-dir " + d.str() + " 2>&1 >/dev/null");
  CHECK(diag.out.find("component 1: 3 terms") != std::string::npos);
}

TEST_CASE("cache: second run is a byte-identical hit; corruption self-heals") {
  TempDir d;
  std::string base =
      cli() + " generate A4 --k 3 --cache-dir " + d.str() + " --out " + d.str() + "/m";
  CHECK(run(base + "1.json 2>/dev/null").code == 0);
  CHECK(run(base + "2.json 2>&1 >/dev/null").out.find("cache: hit") != std::string::npos);
  std::string m1 = slurp(d.path / "m1.json");
  std::string m2 = slurp(d.path / "m2.json");
  CHECK(!m1.empty());
  CHECK(m1 == m2);

  // Exactly one cache file, named by type, degree, and format version.
  fs::path cache_file = d.path / "A4-k3-v1.json";
  REQUIRE(fs::exists(cache_file));
  CHECK(slurp(cache_file) == m1);

  // A corrupted cache entry is regenerated, not trusted.
  {
    std::ofstream f(cache_file, std::ios::trunc);
    f << "{ garbage";
  }
  CHECK(run(base + "3.json 2>/dev/null").code == 0);
  CHECK(slurp(d.path / "m3.json") == m1);
  CHECK(slurp(cache_file) == m1);
}

TEST_CASE("cache: flag overrides environment; environment overrides home") {
  TempDir flag_dir, env_dir;
  std::string env = "LIEPERM_CACHE_DIR=" + env_dir.str() + " ";
  CHECK(run(env + cli() + " generate A1 --k 3 2>/dev/null").code == 0);
  CHECK(fs::exists(env_dir.path / "A1-k3-v1.json"));

  CHECK(run(env + cli() + " generate A1 --k 4 --cache-dir " + flag_dir.str() + " 2>/dev/null").code ==
        0);
  CHECK(fs::exists(flag_dir.path / "A1-k4-v1.json"));
  CHECK(!fs::exists(env_dir.path / "A1-k4-v1.json"));
}

TEST_CASE("generate --full-sum: variant bytes, never cached") {
  TempDir d;
  auto r = run(cli() + " generate A2 --k 2 --full-sum --cache-dir " + d.str() + " 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"variant\": \"full-sum\"") != std::string::npos);
  CHECK(r.out.find("\"1/2\"") != std::string::npos);
  // Only the canonical base map lands in the cache.
  int files = 0;
  for (auto& entry : fs::directory_iterator(d.path)) {
    ++files;
    CHECK(entry.path().filename() == "A2-k2-v1.json");
    CHECK(slurp(entry.path()).find("variant") == std::string::npos);
  }
  CHECK(files == 1);
}

TEST_CASE("generate: budget exhaustion exits 2") {
  TempDir d;
  CHECK(run(cli() + " generate B6 --k 4 --max-points 10 --cache-dir " + d.str() + " 2>/dev/null")
            .code == 2);
}

TEST_CASE("check: verdict exit codes") {
  TempDir d;
  CHECK(run(cli() + " check A1 --k 3 --q 7 2>/dev/null").code == 3);
  CHECK(run(cli() + " check A1 --k 5 --q 7 2>/dev/null").code == 0);
  CHECK(run(cli() + " check A2 --k 5 --q 2 --brute-force --cache-dir " + d.str() + " 2>/dev/null")
            .code == 0);
  CHECK(run(cli() + " check A1 --k 2 --q 6 2>/dev/null").code == 1);   // not a prime power
  CHECK(run(cli() + " check A1 --k 1 --q 7 2>/dev/null").code == 1);   // degree below criterion range
  CHECK(run(cli() + " check B2 --k 5 --q 9 --brute-force --max-points 50 --cache-dir " + d.str() +
            " 2>/dev/null")
            .code == 2);  // 81 points > cap
}

TEST_CASE("check: q accepts explicit p^e and plain prime powers identically") {
  auto plain = run(cli() + " check B2 --k 7 --q 9 --format json 2>/dev/null");
  auto expl = run(cli() + " check B2 --k 7 --q 3^2 --format json 2>/dev/null");
  CHECK(plain.code == expl.code);
  CHECK(plain.out == expl.out);
  // The explicit form requires a prime base.
  CHECK(run(cli() + " check B2 --k 7 --q 9^1 2>/dev/null").code == 1);
}

TEST_CASE("check: converse-failure row over F_3^4") {
  TempDir d;
  auto r = run(cli() + " check A4 --k 7 --q 3 --brute-force --format json --cache-dir " + d.str() +
               " 2>/dev/null");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["theorem_holds"] == true);
  CHECK(j["order_holds"] == false);
  CHECK(j["brute_force"] == true);
  CHECK(j["failing_charpoly_id"].is_null());
  CHECK(j["rows"].size() == 7);
}

TEST_CASE("check: json and csv carry identical field values") {
  auto j = nlohmann::json::parse(run(cli() + " check G2 --k 5 --q 4 --format json 2>/dev/null").out);
  auto csv = run(cli() + " check G2 --k 5 --q 4 --format csv 2>/dev/null").out;

  std::istringstream lines(csv);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header ==
        "type,k,q,theorem_holds,order_holds,failing_charpoly_id,brute_force,charpoly_id,value,"
        "gcd_with_k");
  size_t row = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    cells.resize(10);
    CHECK(cells[0] == j["type"].get<std::string>());
    CHECK(cells[1] == std::to_string(j["k"].get<int64_t>()));
    CHECK(cells[2] == std::to_string(j["q"].get<uint64_t>()));
    CHECK(cells[3] == (j["theorem_holds"].get<bool>() ? "true" : "false"));
    CHECK(cells[4] == (j["order_holds"].get<bool>() ? "true" : "false"));
    CHECK(cells[5] == (j["failing_charpoly_id"].is_null()
                           ? ""
                           : std::to_string(j["failing_charpoly_id"].get<int>())));
    CHECK(cells[6] == (j["brute_force"].is_null() ? ""
                                                  : (j["brute_force"].get<bool>() ? "true" : "false")));
    REQUIRE(row < j["rows"].size());
    CHECK(cells[7] == std::to_string(j["rows"][row]["charpoly_id"].get<int>()));
    CHECK(cells[8] == j["rows"][row]["value"].get<std::string>());
    CHECK(cells[9] == j["rows"][row]["gcd_with_k"].get<std::string>());
    ++row;
  }
  CHECK(row == j["rows"].size());
}

TEST_CASE("search: text and machine formats agree on the certificate") {
  auto text = run(cli() + " search A1 2>/dev/null");
  CHECK(text.code == 0);
  CHECK(text.out.find("k = 5") != std::string::npos);
  auto j = nlohmann::json::parse(run(cli() + " search A1 --format json 2>/dev/null").out);
  CHECK(j["k"] == 5);
  CHECK(j["modulus"] == 5);
  CHECK(j["residue"] == 2);
  CHECK(j["verified_primes"] == nlohmann::json::array({2, 7, 17, 37, 47}));
  auto csv = run(cli() + " search A1 --format csv 2>/dev/null").out;
  CHECK(csv.find("A1,5,5,2,1;2,2;7;17;37;47") != std::string::npos);
}

TEST_CASE("orders") {
  auto r = run(cli() + " orders A4 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("|W| = 120") != std::string::npos);
  CHECK(r.out.find("{1, 2, 3, 4, 5, 6}") != std::string::npos);
  auto j = nlohmann::json::parse(run(cli() + " orders G2 --format json 2>/dev/null").out);
  CHECK(j["weyl_order"] == 12);
  CHECK(j["order_set"] == nlohmann::json::array({1, 2, 3, 6}));
}

TEST_CASE("verify: named suites pass with the documented details") {
  auto r = run(cli() + " verify A2 --suite fixed-points --k 3 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS fixed-points: count 9") != std::string::npos);
  CHECK(run(cli() + " verify A1 --suite frobenius --q 3 2>/dev/null").out.find("PASS") !=
        std::string::npos);
  CHECK(run(cli() + " verify B2 --suite semigroup 2>/dev/null").code == 0);
}

TEST_CASE("verify: full run emits one line per suite and is seed-stable") {
  auto r = run(cli() + " verify A2 --seed 42 2>/dev/null");
  CHECK(r.code == 0);
  for (const char* s :
       {"fixed-points", "frobenius", "denominators", "functional-equation", "semigroup"}) {
    auto pos = r.out.find(std::string("PASS ") + s);
    CHECK(pos != std::string::npos);
  }
  auto again = run(cli() + " verify A2 --seed 42 2>/dev/null");
  CHECK(again.out == r.out);
}

TEST_CASE("verify: budget exhaustion is exit 2, not a suite failure") {
  CHECK(run(cli() + " verify A2 --suite fixed-points --k 3 --max-points 3 2>/dev/null").code == 2);
}

TEST_CASE("--out writes the primary output to a file") {
  TempDir d;
  std::string out = d.str() + "/report.json";
  auto r = run(cli() + " check B2 --k 7 --q 4 --format json --out " + out + " 2>/dev/null");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["type"] == "B2");
}
