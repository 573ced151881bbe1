// Runs the `brooks` tool end to end and prints one PASS/FAIL line per
// acceptance criterion. Exit status is nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "brooks/formats.hpp"
#include "brooks/fuzz.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
  double seconds = 0;
};

fs::path work;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

Run tool(const std::string& args) {
  const fs::path out = work / "stdout.txt", err = work / "stderr.txt";
  const std::string cmd = std::string("\"") + BROOKS_TOOL_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const auto start = std::chrono::steady_clock::now();
  const int raw = std::system(cmd.c_str());
  Run r;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::map<std::string, std::uint64_t> key_values(const std::string& text) {
  std::map<std::string, std::uint64_t> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    try {
      kv[line.substr(0, eq)] = std::stoull(line.substr(eq + 1));
    } catch (const std::exception&) {
    }
  }
  return kv;
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " " << name << ": " << detail << std::endl;
}

std::string file(const std::string& name, const std::string& text) {
  write(work / name, text);
  return "\"" + (work / name).string() + "\"";
}

std::string same_lists(int n, const std::string& colors) {
  std::string s;
  for (int v = 1; v <= n; ++v) s += std::to_string(v) + " " + colors + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "brooks_acceptance";
  fs::create_directories(work);

  // 1-3: one conformance run
  const Run fuzz = tool("fuzz --trials 10000 --seed 1 --nmax 60");
  const auto kv = key_values(fuzz.out);
  {
    std::ostringstream d;
    d << "exit=" << fuzz.status << " failures=" << kv.at("failures") << " time=" << fuzz.seconds << "s";
    report(1, "theorem conformance fuzz", fuzz.status == 0 && kv.at("failures") == 0, d.str());
  }
  {
    // every oracle disagreement is recorded as a trial failure
    std::ostringstream d;
    d << "oracle_checked=" << kv.at("oracle_checked") << " oracle_infeasible=" << kv.at("oracle_infeasible")
      << " failures=" << kv.at("failures");
    report(2, "oracle agreement", kv.at("oracle_checked") >= 2000 && kv.at("failures") == 0, d.str());
  }
  {
    const char* branches[] = {"peel",       "small_degree", "special_case", "hamiltonian",     "eq1_case_a",
                              "eq1_case_b", "eq1_case_c",   "eq2_case_common", "eq2_case_left", "eq2_case_right"};
    bool all = true;
    std::ostringstream d;
    for (const char* b : branches) {
      const auto it = kv.find(b);
      const std::uint64_t hits = it == kv.end() ? 0 : it->second;
      all = all && hits >= 1;
      d << b << "=" << hits << " ";
    }
    report(3, "branch coverage", all && fuzz.err.find("anchor inequality") == std::string::npos, d.str());
  }

  // 4: named fixtures
  {
    bool ok = true;
    std::ostringstream d;
    auto gen = [&](const std::string& name, const std::string& kind, int n) {
      const Run r = tool("gen graph --kind " + kind + " --n " + std::to_string(n) + " --seed 0");
      return file(name, r.out);
    };
    const std::string petersen = gen("petersen.txt", "petersen", 0), k4 = gen("k4.txt", "complete", 4),
                      c6 = gen("c6.txt", "cycle", 6), c5 = gen("c5.txt", "cycle", 5);
    const std::string l10 = file("l10.txt", same_lists(10, "1 2 3")), l4 = file("l4.txt", same_lists(4, "1 2 3")),
                      l6 = file("l6.txt", same_lists(6, "1 2")), l5 = file("l5.txt", same_lists(5, "1 2")),
                      l5b = file("l5b.txt", same_lists(4, "1 2") + "5 1 3\n");

    auto color_then_verify = [&](const std::string& label, const std::string& g, const std::string& l) {
      const Run oracle = tool("oracle " + g + " " + l);
      const Run c = tool("color " + g + " " + l);
      const std::string col = file(label + ".col", c.out);
      const Run v = tool("verify " + g + " " + l + " " + col);
      const bool pass = oracle.status == 0 && c.status == 0 && v.status == 0;
      d << label << (pass ? " ok; " : " BAD; ");
      ok = ok && pass;
    };
    auto expect_none = [&](const std::string& label, const std::string& g, const std::string& l, int code,
                           const std::string& status) {
      const Run c = tool("color " + g + " " + l);
      const Run oracle = tool("oracle " + g + " " + l);
      const bool pass = c.status == code && first_line(c.err) == status && oracle.status == 2;
      d << label << (pass ? " ok; " : " BAD; ");
      ok = ok && pass;
    };
    color_then_verify("petersen", petersen, l10);
    expect_none("K4", k4, l4, 3, "status=not-applicable");
    color_then_verify("C6", c6, l6);
    expect_none("C5", c5, l5, 2, "status=infeasible");
    color_then_verify("C5-mixed", c5, l5b);
    report(4, "named fixtures", ok, d.str());
  }

  // 5: determinism
  {
    bool same = true;
    for (std::uint64_t t = 0; t < 100 && same; ++t) {
      const brooks::FuzzInstance inst = brooks::make_fuzz_instance(5, t, 60, 9);
      const std::string g = file("det.g", brooks::emit_graph(inst.graph));
      const std::string l = file("det.l", brooks::emit_lists(inst.lists));
      const Run a = tool("color " + g + " " + l + " --trace");
      const Run b = tool("color " + g + " " + l + " --trace");
      same = a.status == b.status && a.out == b.out && a.err == b.err;
    }
    const Run again = tool("fuzz --trials 10000 --seed 1 --nmax 60");
    const bool counters_same = again.out == fuzz.out;
    report(5, "determinism", same && counters_same,
           std::string("color outputs ") + (same ? "identical" : "differ") + ", fuzz counters " +
               (counters_same ? "identical" : "differ"));
  }

  // 6: mutation sensitivity
  {
    const Run mutant = tool("fuzz --trials 10000 --seed 1 --nmax 60 --fault eq1-case-c");
    auto mkv = key_values(mutant.out);
    report(6, "mutation sensitivity", mutant.status == 4,
           "exit=" + std::to_string(mutant.status) + " failures=" + std::to_string(mkv["failures"]));
  }

  // 7: desk-scale performance
  {
    const std::string big = (work / "big.g").string(), big_l = (work / "big.l").string();
    const std::string reg = (work / "reg.g").string(), reg_l = (work / "reg.l").string();
    tool("gen graph --kind connected --n 100000 --dmax 6 --seed 7 --out \"" + big + "\"");
    tool("gen lists --graph \"" + big + "\" --size 6 --palette 12 --seed 7 --out \"" + big_l + "\"");
    tool("gen graph --kind regular --n 10000 --d 3 --seed 7 --out \"" + reg + "\"");
    tool("gen lists --graph \"" + reg + "\" --size 3 --palette 6 --seed 7 --out \"" + reg_l + "\"");
    const Run a = tool("color \"" + big + "\" \"" + big_l + "\"");
    const Run b = tool("color \"" + reg + "\" \"" + reg_l + "\"");
    std::ostringstream d;
    d << "n=100000 dmax=6: exit=" << a.status << " " << a.seconds << "s; n=10000 3-regular: exit=" << b.status
      << " " << b.seconds << "s";
    report(7, "desk-scale performance", a.status == 0 && a.seconds < 5 && b.status == 0 && b.seconds < 5, d.str());
  }

  return failures == 0 ? 0 : 1;
}
