#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "run_cli.hpp"

using cli_test::data;
using cli_test::run;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cyclotome_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("lambda enum lists k+1 morphisms into [0]") {
  const auto r = run("lambda enum --kind lambda -m 3 -n 0");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["rows"].size() == 4);
}

TEST_CASE("nerve homology of C_2 over Q") {
  const auto r = run("nerve --monoid " + data("monoid_c2.json") + " --max-level 4 --homology");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["rows"][0]["rank"] == 2);
  CHECK(j["rows"][1]["rank"] == 0);
}

TEST_CASE("hh of the trivial field") {
  const auto r = run("hh --algebra " + data("trivial_field.json") + " --simplicial-max 3 --expect 1,0,0,0");
  CHECK(r.code == 0);
}

TEST_CASE("exit code 1 on a failed expectation") {
  const auto r = run("hh --algebra " + data("trivial_field.json") + " --simplicial-max 2 --expect 1,1,0");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["status"] == "fail");
}

TEST_CASE("exit code 2 on bad input") {
  const fs::path dir = fresh_dir("bad");
  const std::string broken = (dir / "broken.json").string();
  std::ofstream(broken) << "{\n  \"kind\": \"monoid\",\n  \"elements\": [\"e\"\n}\n";
  const auto r = run("nerve --monoid " + broken + " --max-level 2");
  CHECK(r.code == 2);
  CHECK(r.err.find(broken + ":4:") != std::string::npos);

  CHECK(run("lambda enum --kind nonsense -m 1 -n 1").code == 2);
  CHECK(run("verify --suite nonsense").code == 2);
  CHECK(run("hh --algebra " + data("trivial_field.json")).code == 2);
  CHECK(run("no-such-command").code == 2);
  fs::remove_all(dir);
}

TEST_CASE("exit code 3 on the resource cap") {
  const std::string args = "nerve --monoid " + data("monoid_s3.json") + " --max-level 6";
  CHECK(run("--max-cells 1000 " + args).code == 3);
  CHECK(run(args, "CYCLOTOME_MAX_CELLS=1000").code == 3);
}

TEST_CASE("reports are deterministic in every format") {
  for (const std::string fmt : {"json", "csv", "md"}) {
    const std::string args = "--format " + fmt + " subdivide --input " + data("monoid_c2.json") +
                             " --r 2 --max-level 2 --homology";
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache hits are byte-identical to fresh runs") {
  const fs::path dir = fresh_dir("cache");
  const std::string args = "hc --algebra " + data("group_algebra_c2.json") + " --max-degree 4";
  const auto plain = run(args);
  const auto miss = run("--cache-dir " + dir.string() + " " + args);
  const auto hit = run("--cache-dir " + dir.string() + " " + args);
  const auto refreshed = run("--cache-dir " + dir.string() + " --refresh " + args);
  CHECK(plain.code == 0);
  CHECK(miss.out == plain.out);
  CHECK(hit.out == plain.out);
  CHECK(refreshed.out == plain.out);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 1);

  const auto timed = run("--cache-dir " + dir.string() + " --timing " + args);
  CHECK(Json::parse(timed.out).contains("wall_time_seconds"));
  CHECK_FALSE(Json::parse(hit.out).contains("wall_time_seconds"));
  fs::remove_all(dir);
}

TEST_CASE("sphere model round trip") {
  const fs::path dir = fresh_dir("sphere");
  const auto emitted = run("sphere --n 1 --parity odd --emit-algebra");
  REQUIRE(emitted.code == 0);
  const std::string path = (dir / "s3.json").string();
  std::ofstream(path) << emitted.out;
  CHECK(run("hh --algebra " + path + " --total-degrees 0..6 --expect 1,0,1,1,1,1,1").code == 0);
  CHECK(run("sphere --n 1 --parity odd --check-remark --max-degree 8").code == 0);
  fs::remove_all(dir);
}
