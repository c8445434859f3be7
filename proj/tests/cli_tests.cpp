// End-to-end checks for the command-line tool: exit codes, output shapes,
// and agreement between CLI verdicts and direct library calls.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "glie/classify.hpp"
#include "glie/corpus.hpp"
#include "glie/io.hpp"

using nlohmann::json;
using namespace glie;

namespace {

int g_failures = 0;
std::string g_cli;
std::string g_corpus_dir;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
  std::string cmd = g_cli + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

void check_contains(const std::string& haystack, const std::string& needle,
                    const std::string& what) {
  check(haystack.find(needle) != std::string::npos,
        what + " (missing '" + needle + "')");
}

std::string corpus_file(const std::string& name) {
  return g_corpus_dir + "/" + name + ".json";
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = "/tmp/" + name;
  std::ofstream(path) << text;
  return path;
}

void test_validate() {
  RunResult ok = run("validate " + corpus_file("sl2_f5"));
  check(ok.exit_code == 0, "validate sl2_f5 exit code");
  check_contains(ok.out, "valid", "validate sl2_f5 output");

  // grading violation: [x,y] = x
  json doc = json::parse(
      std::ifstream(corpus_file("heis3_f2")), nullptr, true);
  doc["brackets"][0]["coeffs"] = json{{"0", 1}};
  std::string bad = write_temp("glie_bad_grading.json", doc.dump());
  RunResult v = run("validate " + bad);
  check(v.exit_code == 2, "validate invalid exit code");
  check_contains(v.out, "GRADING", "validate names the violated axiom");

  RunResult syntax = run("validate " + write_temp("glie_syntax.json", "{ nope"),
                         /*keep_stderr=*/true);
  check(syntax.exit_code == 2, "syntax error exit code");
  check_contains(syntax.out, "line", "syntax error carries a position");
}

void test_ideal_gen() {
  RunResult r = run("ideal-gen " + corpus_file("heis3_f2") + " --gens '[[1,0,0]]'");
  check(r.exit_code == 0, "ideal-gen exit code");
  check_contains(r.out, "[[1,0,0],[0,0,1]]", "ideal-gen span");

  RunResult j = run("--json ideal-gen " + corpus_file("sol2_f2") + " --gens '[[1,0]]'");
  json out = json::parse(j.out);
  check(out.at("dim") == 2, "ideal-gen of e fills sol2");
  check(out.at("steps") == 1, "ideal-gen growth steps");
}

void test_bracket() {
  RunResult r =
      run("bracket " + corpus_file("heis3_f2") + " -v '[1,0,0]' -w '[0,1,0]'");
  check(r.exit_code == 0, "bracket exit code");
  check_contains(r.out, "[0,0,1]", "bracket value");

  RunResult ideals = run("bracket " + corpus_file("sol2_f2") +
                         " --ideal-a full --ideal-b full");
  check_contains(ideals.out, "[[0,1]]", "derived ideal of sol2");

  RunResult usage = run("bracket " + corpus_file("sol2_f2") + " -v '[1,0]'");
  check(usage.exit_code == 1, "bracket usage error exit code");
}

void test_colon() {
  RunResult r = run("--json colon " + corpus_file("sl2_f5") +
                    " --ideal zero --by-vector '[1,0,0]'");
  check(r.exit_code == 0, "colon exit code");
  json out = json::parse(r.out);
  check(out.at("colon").at("rows") == json::array({json::array({1, 0, 0})}),
        "colon of zero by e is span{e}");
  check(out.at("is_ideal") == false, "span{e} is not an ideal of sl2");

  RunResult q = run("--json colon " + corpus_file("sol2_q") +
                    " --ideal zero --by-vector '[\"0\",\"1\"]'");
  check(q.exit_code == 0, "colon over the rationals works");
  check(json::parse(q.out).at("dim") == 1, "rational colon dimension");
}

void test_classify() {
  RunResult r =
      run("classify " + corpus_file("sol2_f2") + " --ideal '[[0,1]]'");
  check(r.exit_code == 0, "classify exit code");
  check_contains(r.out, "is_ideal: yes", "classify is_ideal");
  check_contains(r.out, "is_graded: yes", "classify is_graded");
  check_contains(r.out, "prime/definition: no", "classify prime");
  check_contains(r.out, "I=[[1,0],[0,1]]", "classify prime witness");
  check_contains(r.out, "semiprime/definition: no", "classify semiprime");
  check_contains(r.out, "irreducible: yes", "classify irreducible");
  check_contains(r.out, "total-prime/definition: no", "classify total prime");
  check_contains(r.out, "x=[1,0]", "total prime witness");

  // CLI verdicts equal direct library calls
  RunResult j =
      run("--json classify " + corpus_file("sol2_f2") + " --ideal '[[0,1]]'");
  json out = json::parse(j.out);
  AlgebraPtr L = corpus_algebra("sol2_f2");
  IdealHandle P(L, parse_ideal_spec("[[0,1]]", L));
  auto lit = QuantifierVariant::literal();
  check(out.at("decisions").at("prime/definition").at("holds") ==
            is_graded_prime(P, Method::definition, lit).holds,
        "CLI prime/definition matches the library");
  check(out.at("decisions").at("prime/colon").at("holds") ==
            is_graded_prime(P, Method::colon, lit).holds,
        "CLI prime/colon matches the library");
  check(out.at("decisions").at("semiprime/element").at("holds") ==
            is_semiprime(P, Method::element, lit).holds,
        "CLI semiprime matches the library");
  check(out.at("decisions").at("irreducible").at("holds") ==
            is_graded_irreducible(P, lit).holds,
        "CLI irreducible matches the library");
  check(out.at("decisions").at("complement-closed").at("holds") ==
            complement_mult_closed(P).holds,
        "CLI complement closure matches the library");

  // proper variant flips the sol2 chain verdict
  RunResult proper = run("--variant proper classify " + corpus_file("sol2_f2") +
                         " --ideal '[[0,1]]'");
  check_contains(proper.out, "prime/definition: yes", "proper variant verdict");

  RunResult full = run("classify " + corpus_file("heis3_f2") + " --ideal full");
  check_contains(full.out, "prime/definition: yes", "full ideal is prime");
  check_contains(full.out, "total-prime/definition: yes", "full ideal is total prime");

  RunResult derived = run("classify " + corpus_file("heis3_f2") + " --ideal derived");
  check_contains(derived.out, "irreducible: no", "derived ideal of heis3 reducible");
  check_contains(derived.out, "H=[[1,0,0],[0,0,1]]", "irreducible witness H");
  check_contains(derived.out, "K=[[0,1,0],[0,0,1]]", "irreducible witness K");

  RunResult rational = run("classify " + corpus_file("sol2_q") + " --ideal zero",
                           /*keep_stderr=*/true);
  check(rational.exit_code == 1, "rational decision exit code");
  check_contains(rational.out, "decision requires a finite field",
                 "rational decision error message");

  // a non-graded ideal gets flags but no decisions
  RunResult mixed = run("classify " + corpus_file("ab2_f2") + " --ideal '[[1,1]]'");
  check(mixed.exit_code == 0, "non-graded classify exit code");
  check_contains(mixed.out, "is_graded: no", "non-graded classify flags");
}

void test_enumerate() {
  RunResult r = run("enumerate --field 2 --dim 3");
  check(r.exit_code == 0, "enumerate exit code");
  check_contains(r.out, "16 subspaces", "subspace count");

  RunResult gi = run("enumerate " + corpus_file("heis3_f2") + " --graded-ideals");
  check_contains(gi.out, "6 graded ideals", "graded ideal count");

  RunResult ai = run("enumerate " + corpus_file("ab2_f2") + " --all-ideals");
  check_contains(ai.out, "5 ideals", "ideal count");

  RunResult guard = run("enumerate --field 2 --dim 7");
  check(guard.exit_code == 3, "dimension guard exit code");

  RunResult relaxed = run("--max-dim 7 enumerate --field 2 --dim 7 --json");
  check(relaxed.exit_code == 0, "guard can be lifted");
  check(json::parse(relaxed.out).at("count") == 29212, "F_2^7 subspace count");

  RunResult rational = run("enumerate " + corpus_file("sol2_q") + " --graded-ideals");
  check(rational.exit_code == 1, "rational enumeration exit code");
}

void test_check_theorems() {
  RunResult text = run("check-theorems");
  check(text.exit_code == 0, "check-theorems exit code");
  check_contains(text.out, "T4   COUNTEREXAMPLE", "T4 status");
  check_contains(text.out, "T7   COUNTEREXAMPLE", "T7 status");
  check_contains(text.out, "T2   VERIFIED", "T2 status");

  RunResult a = run("--json check-theorems");
  RunResult b = run("--json check-theorems");
  RunResult c = run("--json --jobs 4 check-theorems");
  check(a.exit_code == 0 && !a.out.empty(), "machine report produced");
  check(a.out == b.out, "byte-identical across runs");
  check(a.out == c.out, "byte-identical across job counts");

  TheoremReport parsed = parse_report_json(a.out);
  check(parsed.entries.size() == 15, "report entry count");

  RunResult dir = run("check-theorems " + g_corpus_dir);
  check(dir.exit_code == 0, "directory corpus run");

  RunResult proper = run("--variant proper check-theorems");
  check_contains(proper.out, "T7   VERIFIED", "proper variant T7");

  std::string empty_dir = "/tmp/glie_empty_corpus";
  if (std::system(("mkdir -p " + empty_dir).c_str()) != 0) {
    check(false, "could not create the empty corpus directory");
    return;
  }
  RunResult empty = run("check-theorems " + empty_dir, /*keep_stderr=*/true);
  check(empty.exit_code == 2, "empty corpus exit code");
  check_contains(empty.out, "no corpus entries", "empty corpus message");
}

void test_allow_invalid() {
  json doc = json::parse(std::ifstream(corpus_file("heis3_f2")), nullptr, true);
  doc["brackets"][0]["coeffs"] = json{{"0", 1}};
  std::string bad = write_temp("glie_bad2.json", doc.dump());
  RunResult refused = run("classify " + bad + " --ideal zero");
  check(refused.exit_code == 2, "invalid algebra refused");
  RunResult allowed = run("--allow-invalid classify " + bad + " --ideal zero");
  check(allowed.exit_code == 0, "--allow-invalid loads it");
}

void test_usage_errors() {
  check(run("no-such-command").exit_code == 1, "unknown subcommand exit code");
  check(run("validate").exit_code == 1, "missing argument exit code");
  check(run("validate /tmp/glie_does_not_exist.json").exit_code == 2,
        "missing file exit code");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: glie_cli_tests <cli-binary> <corpus-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_corpus_dir = argv[2];

  test_validate();
  test_ideal_gen();
  test_bracket();
  test_colon();
  test_classify();
  test_enumerate();
  test_check_theorems();
  test_allow_invalid();
  test_usage_errors();

  if (g_failures == 0) {
    std::cout << "cli integration: all checks passed\n";
    return 0;
  }
  std::cout << "cli integration: " << g_failures << " check(s) failed\n";
  return 1;
}
