#pragma once

#include <string>

#include "json.hpp"

namespace cyclotome {

/// Outcome of one verification: pass/fail plus machine-readable evidence.
/// Counterexamples are recorded as element ids and levels.
struct CheckResult {
  bool pass = true;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();

  void fail(const std::string& what) {
    if (pass) evidence["counterexample"] = what;
    pass = false;
  }
  /// Records the first failure only; later ones are counted.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    evidence["failures"] = evidence.value("failures", 0) + 1;
    fail(what);
  }
};

}  // namespace cyclotome
