#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sic {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int q = 0;        // lemma310: restrict to one q (0 = all of 2..4)
  int threads = 1;  // instance loops only; reports do not depend on it
  std::ostream* timings = nullptr;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;  // recorded values that are not checks

  [[nodiscard]] bool pass() const;
  /// Deterministic text: one line per check and note, then a RESULT line.
  [[nodiscard]] std::string text() const;
};

std::vector<std::string> suite_names();

/// Also accepts linegraph-spiders, biclique-modules, clique-or-kr-free and
/// structure as names. Throws PreconditionError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace sic
