// One line per acceptance criterion. Tolerances are exact unless noted; the
// suites themselves live in the library so the CLI runs the same checks.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

#include "sic/error.hpp"
#include "sic/suites.hpp"

using namespace sic;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int id;
  std::string title;
  std::string suite;  // empty for the determinism criterion
};

const Criterion kCriteria[] = {
    {1, "si oracle agrees with the definitional search", "si-equivalence"},
    {2, "P1+P3 class equalities on graphs up to 6 vertices", "p1p3-equalities"},
    {3, "line graph of spiders witnesses", "lemma310"},
    {4, "witness battery", "witness-battery"},
    {5, "biclique modules or refutation (t=1)", "theorem31"},
    {6, "complete, K_r-free or refutation (t=1)", "theorem37"},
    {7, "MWIS pipeline matches brute force", "mwis"},
    {8, "structure suite over the X_1 corpus", "theorem39"},
    {9, "dichotomy classifier", "dichotomy"},
    {10, "verify reports are byte-identical across runs", ""},
};

std::string summary(const SuiteReport& rep) {
  std::string s;
  for (const auto& c : rep.checks) {
    if (!s.empty()) s += "; ";
    s += c.name + " " + (c.pass ? "ok" : "FAIL") + (c.detail.empty() ? "" : " (" + c.detail + ")");
  }
  return s;
}

bool run(const Criterion& c, SuiteOptions opts) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    if (c.suite.empty()) {
      int differing = 0;
      for (const auto& name : suite_names()) {
        if (run_suite(name, opts).text() != run_suite(name, opts).text()) {
          ++differing;
          detail += " differs:" + name;
        }
      }
      ok = differing == 0;
      detail = "suites=" + std::to_string(suite_names().size()) + " differing=" + std::to_string(differing) + detail;
    } else {
      SuiteReport rep = run_suite(c.suite, opts);
      ok = rep.pass();
      detail = summary(rep);
      for (const auto& n : rep.notes)
        if (n.rfind("diagnostic", 0) == 0) std::cout << "criterion " << c.id << " diagnostic: " << n << '\n';
    }
  } catch (const Error& e) {
    ok = false;
    detail = std::string("error: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " " << c.title << ": " << detail << '\n';
  std::cerr << "criterion " << c.id << " took " << ms.count() << " ms\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  SuiteOptions opts;
  opts.seed = kSeed;
  app.add_option("--only", only, "run a single criterion");
  app.add_option("--seed", opts.seed);
  app.add_option("--threads", opts.threads);
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const auto& c : kCriteria)
    if (!only || only == c.id) all = run(c, opts) && all;
  return all ? 0 : 1;
}
