// Acceptance run: one PASS/FAIL line per criterion, tolerances pinned in the
// suites. Exit status is 0 only when the set of failing criteria equals the
// set given by --expect-fail (empty by default), so a known failure stays
// visible in the output and an unexpected pass or fail breaks the run.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptcs/verify.hpp"

namespace {

using ptcs::report::Table;

struct Criterion {
  int id;
  const char* suite;
  const char* text;
  const char* skip_prefix;  // rows with this prefix are reported but not judged
};

const Criterion kCriteria[] = {
    {1, "eigenbasis", "orthonormality <= 1e-9 (n, m <= 15) and eigen-equation residual <= 1e-4 (n <= 8)", nullptr},
    {2, "hille-hardy", "bilinear Laguerre sum vs closed form, relative <= 1e-9 over 3x3x3x3 matrix", nullptr},
    {3, "normalization", "integral vs series relative <= 1e-8; extrapolated eps -> 0 limit within 1e-4", nullptr},
    {4, "closed-form", "closed form vs series <= 1e-7; square well <= 1e-7; unit norm 1 +- 1e-6", nullptr},
    {5, "identity", "eigen action, route agreement 1e-7, finite-combination L2 error 1e-6, monotone decrease", nullptr},
    {6, "hankel", "Hankel representation within max(1e-7, 1e-7 |value|) for n <= 12; Watson to 1e-8", nullptr},
    {7, "transform", "relative gap at eps = 0.02 <= 1e-3 for n <= 4, nu = 1, gap shrinking along the schedule",
     "extrapolated limit"},
};

struct Outcome {
  bool pass = true;
  std::string worst;  // first failing row, or a short summary
};

Outcome judge(const Table& t, const char* skip_prefix) {
  Outcome o;
  std::size_t judged = 0, failed = 0;
  for (const auto& row : t.rows) {
    const auto& name = std::get<std::string>(row[0]);
    if (skip_prefix && name.rfind(skip_prefix, 0) == 0) continue;
    ++judged;
    if (!std::get<bool>(row[4])) {
      if (failed++ == 0) {
        o.worst = name + ": measured " + ptcs::report::format_double(std::get<double>(row[1])) + ", tol " +
                  ptcs::report::format_double(std::get<double>(row[3]));
      }
    }
  }
  o.pass = failed == 0;
  o.worst = std::to_string(judged - failed) + "/" + std::to_string(judged) + " rows pass" +
            (failed ? "; first failure " + o.worst : "");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "Criterion ids known to fail");
  CLI11_PARSE(app, argc, argv);

  std::set<int> failed;
  for (const auto& c : kCriteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Table t = ptcs::verify::run_suite(c.suite);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const Outcome o = judge(t, c.skip_prefix);
    if (!o.pass) failed.insert(c.id);
    std::printf("[%s] %d %s: %s (%s, %.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.suite, c.text, o.worst.c_str(), secs);
  }

  // Determinism: the full report, rendered twice, must be byte-identical.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string a = ptcs::verify::run_suite("all").csv();
    const std::string b = ptcs::verify::run_suite("all").csv();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool same = a == b;
    if (!same) failed.insert(8);
    std::printf("[%s] 8 determinism: two verify runs produce byte-identical reports (%zu bytes, %.1f s)\n",
                same ? "PASS" : "FAIL", a.size(), secs);
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu of 8 criteria pass", 8 - failed.size());
  if (!expected.empty()) {
    std::printf("; expected failures:");
    for (int id : expected) std::printf(" %d", id);
  }
  std::printf("\n");
  if (failed != expected) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
