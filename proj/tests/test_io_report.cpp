#include <filesystem>
#include <fstream>

#include "cyclotome/error.hpp"
#include "cyclotome/io.hpp"
#include "cyclotome/report.hpp"
#include "doctest.h"

using namespace cyclotome;
namespace fs = std::filesystem;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cyclotome_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("malformed JSON names the origin, line and column") {
  const std::string msg = error_of([] { parse_json_text("{\n  \"a\": [1,\n  2,,]\n}", "in.json"); });
  CHECK(msg.rfind("in.json:3:", 0) == 0);
  CHECK(msg.find("malformed JSON") != std::string::npos);
}

TEST_CASE("files are read and missing files reported") {
  const fs::path dir = scratch_dir("files");
  const std::string path = (dir / "m.json").string();
  std::ofstream(path) << R"({"kind": "monoid", "elements": ["e"], "table": [[0]], "identity": 0})";
  CHECK(monoid_from_json(load_json_file(path)).size() == 1);
  CHECK(error_of([&] { load_json_file((dir / "absent.json").string()); }).find("absent.json") != std::string::npos);
}

TEST_CASE("monoid and category validation") {
  Json m = Json::parse(R"({"kind": "monoid", "elements": ["e", "g"], "table": [[0, 1], [1, 1]], "identity": 0})");
  CHECK_NOTHROW(monoid_from_json(m));
  m["table"][1][0] = 0;  // e is no longer a two-sided unit
  CHECK_THROWS_AS(monoid_from_json(m), InputError);
  m["table"] = Json::parse("[[0, 1], [1, 5]]");
  CHECK_THROWS_AS(monoid_from_json(m), InputError);

  Json c = Json::parse(R"({"kind": "category", "objects": ["a", "b"],
      "arrows": [{"name": "id_a", "source": 0, "target": 0}, {"name": "id_b", "source": 1, "target": 1},
                 {"name": "f", "source": 0, "target": 1}],
      "identities": [0, 1],
      "table": [[0, null, 2], [null, 1, null], [null, 2, null]]})");
  CHECK(category_from_json(c).arrow_count() == 3);
  c["table"][0][1] = 1;  // id_a then id_b is not composable
  CHECK_THROWS_AS(category_from_json(c), InputError);
}

TEST_CASE("algebra validation") {
  Json a = Json::parse(R"({"field": "Q", "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 2}],
      "unit": 0, "products": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]], "commutative": true})");
  const GradedAlgebra A = algebra_from_json(a);
  CHECK(A.dim() == 2);
  CHECK(A.connective_gap());

  Json bad_degree = a;
  bad_degree["products"].push_back(Json::array({1, 1, 1, "1"}));  // x^2 = x breaks degrees
  CHECK_THROWS_AS(algebra_from_json(bad_degree), InputError);

  Json bad_number = a;
  bad_number["products"][0][3] = "1/0";
  CHECK(error_of([&] { algebra_from_json(bad_number); }).find("/products/0/3") != std::string::npos);

  Json fp = a;
  fp["field"] = {{"Fp", 4}};
  CHECK_THROWS_AS(algebra_from_json(fp), InputError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("0.25") == mpq_class(1, 4));
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}

TEST_CASE("SHA-256 test vectors") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("report rendering") {
  Json r = make_report("hh", {{"ring", "Q"}}, Json::object());
  r["rows"] = Json::array({{{"degree", 0}, {"rank", 1}}, {{"degree", 1}, {"rank", 0}, {"note", "a,b"}}});
  const std::string json = render(r, "json");
  CHECK(json.back() == '\n');
  CHECK(Json::parse(json) == r);

  const std::string csv = render(r, "csv");
  CHECK(csv.find("# params.ring=Q\n") != std::string::npos);
  CHECK(csv.find("degree,rank,note\n0,1,\n1,0,\"a,b\"\n") != std::string::npos);

  const std::string md = render(r, "md");
  CHECK(md.rfind("# cyclotome hh\n", 0) == 0);
  CHECK(md.find("| degree | rank | note |\n| --- | --- | --- |\n| 0 | 1 |  |\n") != std::string::npos);
  CHECK_THROWS_AS(render(r, "xml"), InputError);
}

TEST_CASE("reports carry no time-dependent fields") {
  const Json a = make_report("nerve", {{"max_level", 3}}, Json::object());
  const Json b = make_report("nerve", {{"max_level", 3}}, Json::object());
  CHECK(a.dump() == b.dump());
  CHECK(a["schema_version"] == kSchemaVersion);
  CHECK_FALSE(a.contains("wall_time_seconds"));
}

TEST_CASE("cache keys and entries") {
  const Json in{{"monoid", {{"sha256", sha256_hex("x")}}}};
  const std::string k1 = ResultCache::key("nerve {\"max_level\":3}", in);
  CHECK(k1 == ResultCache::key("nerve {\"max_level\":3}", in));
  CHECK(k1 != ResultCache::key("nerve {\"max_level\":4}", in));
  CHECK(k1 != ResultCache::key("nerve {\"max_level\":3}", Json{{"monoid", {{"sha256", sha256_hex("y")}}}}));

  const fs::path dir = scratch_dir("cache");
  ResultCache cache(dir.string());
  CHECK_FALSE(cache.get(k1).has_value());
  cache.put(k1, "{\"status\":\"ok\"}");
  REQUIRE(cache.get(k1).has_value());
  CHECK(*cache.get(k1) == "{\"status\":\"ok\"}");
  // no temporaries left behind
  std::size_t files = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir)) files += e.is_regular_file();
  CHECK(files == 1);
  fs::remove_all(dir);
}
