#pragma once

// Verification suites behind `cyclotome verify`.  Each check carries an
// anchor: a one-line statement of the mathematical claim it tests.

#include <cstdint>
#include <string>
#include <vector>

#include "cyclotome/io.hpp"

namespace cyclotome {

struct SuiteCheck {
  std::string id;
  std::string anchor;
  std::string status;  // "pass", "fail" or "skipped"
  Json evidence = Json::object();
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;

  bool pass() const;
  Json rows() const;
};

/// lambda, latching, subdivision, cyclotomic, hochschild, duality.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all".  Throws InputError for an
/// unknown name; failures are report content.
SuiteReport run_suite(const std::string& name, std::uint64_t seed);

}  // namespace cyclotome
