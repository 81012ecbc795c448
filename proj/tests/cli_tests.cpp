// End-to-end CLI tests: run the satlat binary, compare stdout against the
// golden files after masking volatile fields, and check exit codes.
//
//   cli_tests <path-to-satlat> <tests-source-dir>
//
// Set UPDATE_GOLDEN=1 to regenerate the golden files instead of comparing.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "satlat/cache.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_binary;
fs::path g_srcdir;
fs::path g_workdir;
int g_failures = 0;

std::string sh_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::vector<std::string>& args) {
  const fs::path out_file = g_workdir / "stdout.txt";
  const fs::path err_file = g_workdir / "stderr.txt";
  std::string cmd = sh_quote(g_binary);
  for (const auto& a : args) cmd += " " + sh_quote(a);
  cmd += " > " + sh_quote(out_file.string()) + " 2> " +
         sh_quote(err_file.string());
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

// Volatile fields whose values depend on machine or build, not on math.
void mask_volatile(json& j) {
  if (j.is_object()) {
    for (auto& [key, value] : j.items()) {
      if (key == "elapsed_seconds")
        value = 0.0;
      else if (key == "nodes_explored")
        value = 0;
      else
        mask_volatile(value);
    }
  } else if (j.is_array()) {
    for (auto& item : j) mask_volatile(item);
  }
}

std::string normalize(const std::string& text, bool is_json) {
  if (!is_json) return text;
  json j = json::parse(text);
  mask_volatile(j);
  return j.dump(2) + "\n";
}

void golden_case(const std::string& name, const std::vector<std::string>& args,
                 int want_code, bool is_json) {
  const RunResult r = run(args);
  if (r.code != want_code) {
    std::cout << "FAIL " << name << ": exit " << r.code << ", want "
              << want_code << "\n"
              << r.err;
    ++g_failures;
    return;
  }
  const std::string got = normalize(r.out, is_json);
  const fs::path golden = g_srcdir / "golden" / name;
  if (std::getenv("UPDATE_GOLDEN")) {
    std::ofstream(golden, std::ios::binary) << got;
    std::cout << "wrote " << golden << "\n";
    return;
  }
  const std::string want = slurp(golden);
  if (got != want) {
    std::cout << "FAIL " << name << ": output differs from golden\n"
              << "--- golden ---\n"
              << want << "--- got ---\n"
              << got;
    ++g_failures;
    return;
  }
  std::cout << "ok " << name << "\n";
}

void expect(const std::string& label, bool cond, const std::string& detail) {
  if (cond) {
    std::cout << "ok " << label << "\n";
  } else {
    std::cout << "FAIL " << label << ": " << detail << "\n";
    ++g_failures;
  }
}

std::string fixture(const std::string& name) {
  return (g_srcdir / "fixtures" / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_tests <satlat-binary> <tests-source-dir>\n";
    return 2;
  }
  g_binary = argv[1];
  g_srcdir = argv[2];
  g_workdir = fs::temp_directory_path() /
              ("satlat_cli_" + std::to_string(::getpid()));
  fs::remove_all(g_workdir);
  fs::create_directories(g_workdir);
  const fs::path cache_dir = g_workdir / "cache";
  ::setenv("SATLAT_CACHE_DIR", cache_dir.c_str(), 1);

  // --- plumbing ---
  expect("version flag", run({"--version"}).code == 0, "exit != 0");
  expect("help flag", run({"--help"}).code == 0, "exit != 0");
  expect("unknown subcommand", run({"frobnicate"}).code == 2, "want exit 2");
  expect("missing required option", run({"solve"}).code == 2, "want exit 2");

  // --- verify ---
  golden_case("verify_b2_diamond.json",
              {"verify", "--family", fixture("b2_full.json"), "--poset",
               "diamond", "--format", "json"},
              1, true);
  golden_case("verify_a2_chain.txt",
              {"verify", "--family", fixture("a2_chain_n2.json"), "--poset",
               "antichain:2", "--format", "human"},
              0, false);
  golden_case("verify_a3_witness.csv",
              {"verify", "--family", fixture("a3_witness_n3.json"), "--poset",
               "antichain:3", "--format", "csv"},
              0, false);
  {
    RunResult r = run({"verify", "--family", fixture("invalid_dup.json"),
                       "--poset", "v2"});
    expect("duplicate member rejected", r.code == 2 && !r.err.empty(),
           "want exit 2 with a message");
    r = run({"verify", "--family", fixture("invalid_bad_bitstring.json"),
             "--poset", "v2"});
    expect("bad bitstring rejected", r.code == 2 && !r.err.empty(),
           "want exit 2 with a message");
    r = run({"verify", "--family", fixture("b2_full.json"), "--poset",
             "custom:" + fixture("poset_cycle.json")});
    expect("cyclic poset rejected", r.code == 2 && !r.err.empty(),
           "want exit 2 with a message");
  }
  {
    RunResult r = run({"verify", "--family", fixture("b2_full.json"),
                       "--poset", "custom:" + fixture("poset_diamond.json"),
                       "--format", "json"});
    expect("custom poset file works",
           r.code == 1 && r.out.find("\"saturated\": false") !=
                              std::string::npos,
           "want exit 1, saturated=false");
  }

  // --- solve, including the cache lifecycle ---
  golden_case("solve_v2_n3_miss.json",
              {"solve", "--n", "3", "--poset", "v2", "--format", "json"}, 0,
              true);
  golden_case("solve_v2_n3_hit.json",
              {"solve", "--n", "3", "--poset", "v2", "--format", "json"}, 0,
              true);
  {
    // Corrupt the stored witness (with a fresh digest, so only semantic
    // re-verification can catch it) and watch the CLI recompute.
    satlat::ResultCache cache(cache_dir);
    const json params = {{"n", 3},
                         {"poset", "v2"},
                         {"mode", "induced"},
                         {"budget", std::uint64_t{0}},
                         {"seed", false}};
    auto payload = cache.load("solve", params);
    expect("cache entry exists", payload.has_value(), "no entry after solve");
    if (payload) {
      (*payload)["witness"] = {{"n", 3}, {"sets", json::array({"000"})}};
      cache.store("solve", params, *payload);
      golden_case("solve_v2_n3_stale.json",
                  {"solve", "--n", "3", "--poset", "v2", "--format", "json"},
                  0, true);
    }
  }
  golden_case("solve_v2_n3_nocache.json",
              {"solve", "--n", "3", "--poset", "v2", "--no-cache", "--format",
               "json"},
              0, true);
  golden_case("solve_a3_budget.json",
              {"solve", "--n", "3", "--poset", "antichain:3", "--budget", "5",
               "--format", "json"},
              3, true);
  golden_case("solve_a2_weak.csv",
              {"solve", "--n", "3", "--poset", "antichain:2", "--mode",
               "weak", "--format", "csv"},
              0, false);
  expect("solve rejects n out of range",
         run({"solve", "--n", "30", "--poset", "v2"}).code == 2,
         "want exit 2");

  // --- bounds ---
  golden_case("bounds_antichain4_n12.json",
              {"bounds", "--poset", "antichain:4", "--n", "12", "--format",
               "json"},
              0, true);
  golden_case("bounds_antichain4_n12.csv",
              {"bounds", "--poset", "antichain:4", "--n", "12", "--format",
               "csv"},
              0, false);
  golden_case("bounds_butterfly_n8.csv",
              {"bounds", "--poset", "butterfly", "--n", "8", "--format",
               "csv"},
              0, false);
  golden_case("bounds_diamond_huge.json",
              {"bounds", "--poset", "diamond", "--n", "1000000000000",
               "--format", "json"},
              0, true);
  expect("bounds rejects unknown target",
         run({"bounds", "--poset", "pentagon", "--n", "10"}).code == 2,
         "want exit 2");

  // --- slopes and crossover ---
  golden_case("slopes_k8.json",
              {"slopes", "--k", "8", "--format", "json"}, 0, true);
  golden_case("slopes_k243.txt",
              {"slopes", "--k", "243", "--format", "human"}, 0, false);
  golden_case("crossover_243.json",
              {"crossover", "--k-max", "243", "--format", "json"}, 0, true);
  golden_case("crossover_default.json",
              {"crossover", "--format", "json"}, 0, true);
  golden_case("crossover_scan.json",
              {"crossover", "--k-max", "1000000", "--scan", "--format",
               "json"},
              0, true);
  expect("scan cap enforced",
         run({"crossover", "--k-max", "1000001", "--scan"}).code == 2,
         "want exit 2");

  // --- procedures ---
  golden_case("proc_dilworth_b2.json",
              {"procedures", "--family", fixture("b2_full.json"),
               "--pipeline", "dilworth", "--format", "json"},
              0, true);
  // the found partition has no wide gap but flunks the max-gap bound
  golden_case("proc_widegap_n6.txt",
              {"procedures", "--family", fixture("widegap_n6.json"),
               "--pipeline", "widegap", "--format", "human"},
              1, false);
  // a 4-chain needs no moves and satisfies the single-chain bound
  golden_case("proc_widegap_n5.txt",
              {"procedures", "--family", fixture("widegap_n5.json"),
               "--pipeline", "widegap", "--format", "human"},
              0, false);
  // one real elimination move, after which the bound passes
  golden_case("proc_widegap_move.txt",
              {"procedures", "--family", fixture("widegap_move_n5.json"),
               "--pipeline", "widegap", "--format", "human"},
              0, false);
  golden_case("proc_color_a3.json",
              {"procedures", "--family", fixture("a3_witness_n3.json"),
               "--pipeline", "color", "--format", "json"},
              0, true);
  golden_case("proc_witness_b2.json",
              {"procedures", "--family", fixture("b2_full.json"),
               "--pipeline", "witness", "--anchor", "10", "--format", "json"},
              0, true);
  golden_case("proc_gaps_a3.json",
              {"procedures", "--family", fixture("a3_witness_n3.json"),
               "--pipeline", "gaps", "--format", "json"},
              0, true);
  golden_case("proc_gaps_fail.json",
              {"procedures", "--family", fixture("gapsfail_n3.json"),
               "--pipeline", "gaps", "--format", "json"},
              1, true);
  expect("procedures rejects csv",
         run({"procedures", "--family", fixture("b2_full.json"),
              "--pipeline", "dilworth", "--format", "csv"})
                 .code == 2,
         "want exit 2");

  // --- report: recompute everything and cross-check the summary ---
  {
    const fs::path md = g_workdir / "report.md";
    RunResult r = run({"report", "--format", "json", "--out", md.string()});
    bool ok = r.code == 0;
    std::string detail = "exit " + std::to_string(r.code);
    if (ok) {
      json j = json::parse(r.out, nullptr, false);
      ok = !j.is_discarded() && j.value("pass", false) &&
           j["sections"].size() == 8;
      if (ok)
        for (const auto& s : j["sections"]) ok = ok && s.value("pass", false);
      if (!ok) detail = "summary json does not report a full pass";
      const std::string text = slurp(md);
      if (text.find("Overall: PASS") == std::string::npos) {
        ok = false;
        detail = "markdown report lacks 'Overall: PASS'";
      }
    } else {
      detail += "\n" + r.err;
    }
    expect("report recomputes and passes", ok, detail);
  }

  if (g_failures == 0) {
    std::cout << "all cli tests passed\n";
    return 0;
  }
  std::cout << g_failures << " cli test(s) failed\n";
  return 1;
}
