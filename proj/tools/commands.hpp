#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cyclotome/io.hpp"

namespace cyclotome::cli {

struct Settings {
  std::size_t max_cells = 200'000;
};

// A job is everything the cache needs to know before running: the canonical
// parameters and the input files.  body() fills rows and status.
struct Job {
  std::string command;
  Json params = Json::object();
  std::vector<std::pair<std::string, std::string>> inputs;  // (role, path)
  std::function<void(Json& report)> body;
};

struct LambdaArgs {
  std::string kind = "lambda";
  int m = 0, n = 0, r = 1;
};
Job lambda_enum_job(const LambdaArgs& a, const Settings& s);

struct RealizeArgs {
  std::string input;
  int max_level = 4;
  std::string ring = "Q";
  bool homology = false;
};
Job realize_job(const RealizeArgs& a, const Settings& s);

struct NerveArgs {
  std::string monoid, category;
  int max_level = 4;
  std::string ring = "Q";
  bool homology = false;
};
Job nerve_job(const NerveArgs& a, const Settings& s);

struct SubdivideArgs {
  std::string input;
  int r = 2;
  int max_level = 3;
  std::string ring = "Q";
  bool fixed_points = false;
  bool homology = false;
};
Job subdivide_job(const SubdivideArgs& a, const Settings& s);

struct HHArgs {
  std::string algebra;
  std::string total_degrees;  // "A..B"
  int simplicial_max = -1;
  bool normalized = false;
  bool hodge = false;
  std::vector<int> adams{2, 3};
  bool dual = false;
  std::vector<long long> expect;  // ranks in row order; a mismatch is a check failure
};
Job hh_job(const HHArgs& a, const Settings& s);

struct HCArgs {
  std::string algebra;
  int max_degree = 4;
  std::vector<long long> expect;
};
Job hc_job(const HCArgs& a, const Settings& s);

struct SphereArgs {
  int n = 1;
  std::string parity = "odd";
  int max_degree = 12;
};
Job sphere_job(const SphereArgs& a, const Settings& s);
/// The cochain model as algebra JSON, ready to feed back into hh or hc.
Json sphere_algebra(const SphereArgs& a);

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};
Job verify_job(const VerifyArgs& a, const Settings& s);

}  // namespace cyclotome::cli
