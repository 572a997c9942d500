// cyclotome: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 resource cap hit,
// 4 internal error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <new>

#include "CLI11.hpp"
#include "commands.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/report.hpp"

using namespace cyclotome;
using namespace cyclotome::cli;

namespace {

struct Global {
  std::string format = "json";
  std::string cache_dir;
  bool refresh = false;
  bool timing = false;
  long long max_cells = -1;
};

std::size_t cell_cap(const Global& g) {
  if (g.max_cells > 0) return static_cast<std::size_t>(g.max_cells);
  if (const char* env = std::getenv("CYCLOTOME_MAX_CELLS")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError("CYCLOTOME_MAX_CELLS must be a positive integer");
  }
  return Settings{}.max_cells;
}

// Runs a job through the cache and prints the rendered report.
int execute(const Job& job, const Global& g) {
  if (g.format != "json" && g.format != "csv" && g.format != "md") {
    throw InputError("--format must be json, csv or md");
  }
  Json inputs = Json::object();
  for (const auto& [role, path] : job.inputs) inputs[role] = {{"sha256", file_sha256(path)}};

  std::optional<ResultCache> cache;
  std::string key;
  // Timed reports are never cached: the timing would make hits differ.
  if (!g.cache_dir.empty() && !g.timing) {
    cache.emplace(g.cache_dir);
    key = ResultCache::key(job.command + " " + job.params.dump(), inputs);
  }

  std::string text;
  if (cache && !g.refresh) {
    if (auto hit = cache->get(key)) text = *hit;
  }
  if (text.empty()) {
    Json report = make_report(job.command, job.params, inputs);
    const auto start = std::chrono::steady_clock::now();
    job.body(report);
    if (g.timing) {
      report["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    text = report.dump();
    if (cache) cache->put(key, text);
  }
  const Json report = parse_json_text(text, "cache entry");
  std::cout << render(report, g.format);
  return report.value("status", "ok") == "ok" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with cyclic sets, edgewise subdivision and Hochschild homology"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  Global g;
  app.add_option("--format", g.format, "Output format: json, csv or md")->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Directory of the content-addressed result cache");
  app.add_flag("--refresh", g.refresh, "Recompute and overwrite cached results");
  app.add_flag("--timing", g.timing, "Record wall time in the report (disables the cache)");
  app.add_option("--max-cells", g.max_cells,
                 "Cap on morphisms, elements per level and chain ranks (default 200000, or CYCLOTOME_MAX_CELLS)");

  std::function<Job(const Settings&)> make;

  auto* lambda = app.add_subcommand("lambda", "Morphisms of Delta, Lambda and Lambda_r");
  lambda->require_subcommand(1);
  LambdaArgs la;
  auto* lenum = lambda->add_subcommand("enum", "Enumerate a hom-set in normal form");
  lenum->add_option("--kind", la.kind, "delta, lambda or rcyclic")->required();
  lenum->add_option("-m", la.m, "Source level")->required();
  lenum->add_option("-n", la.n, "Target level")->required();
  lenum->add_option("--r", la.r, "r for Lambda_r")->capture_default_str();
  lenum->callback([&] { make = [&](const Settings& s) { return lambda_enum_job(la, s); }; });

  RealizeArgs ra;
  auto* realize = app.add_subcommand("realize", "Levels, Euler characteristic and homology of a cyclic set");
  realize->add_option("--input", ra.input, "Cyclic set JSON (monoid, category, colimit or representable)")->required();
  realize->add_option("--max-level", ra.max_level, "Top level")->required();
  realize->add_option("--ring", ra.ring, "Z, Q or Fp:P")->capture_default_str();
  realize->add_flag("--homology", ra.homology, "Report homology");
  realize->callback([&] { make = [&](const Settings& s) { return realize_job(ra, s); }; });

  NerveArgs na;
  auto* nerve = app.add_subcommand("nerve", "Cyclic nerve of a finite monoid or category");
  auto* mon = nerve->add_option("--monoid", na.monoid, "Monoid JSON");
  auto* cat = nerve->add_option("--category", na.category, "Category JSON");
  mon->excludes(cat);
  nerve->add_option("--max-level", na.max_level, "Top level")->required();
  nerve->add_option("--ring", na.ring, "Z, Q or Fp:P")->capture_default_str();
  nerve->add_flag("--homology", na.homology, "Report homology");
  nerve->callback([&] { make = [&](const Settings& s) { return nerve_job(na, s); }; });

  SubdivideArgs sa;
  auto* sub = app.add_subcommand("subdivide", "Edgewise subdivision and its C_r-fixed points");
  sub->add_option("--input", sa.input, "Cyclic set JSON")->required();
  sub->add_option("--r", sa.r, "Subdivision factor")->required();
  sub->add_option("--max-level", sa.max_level, "Top level of the subdivision")->required();
  sub->add_option("--ring", sa.ring, "Z, Q or Fp:P")->capture_default_str();
  sub->add_flag("--fixed-points", sa.fixed_points, "Pass to the C_r-fixed cyclic set");
  sub->add_flag("--homology", sa.homology, "Report homology");
  sub->callback([&] { make = [&](const Settings& s) { return subdivide_job(sa, s); }; });

  HHArgs ha;
  auto* hh = app.add_subcommand("hh", "Hochschild homology of a graded algebra");
  hh->add_option("--algebra", ha.algebra, "Algebra JSON")->required();
  auto* td = hh->add_option("--total-degrees", ha.total_degrees, "Total degree window A..B");
  auto* sm = hh->add_option("--simplicial-max", ha.simplicial_max, "Top simplicial degree");
  td->excludes(sm);
  hh->add_flag("--normalized", ha.normalized, "Use the normalized complex");
  auto* hodge = hh->add_flag("--hodge", ha.hodge, "Hodge decomposition and Adams operations (over Q)");
  hh->add_option("--adams", ha.adams, "Adams indices k")->delimiter(',')->needs(hodge)->capture_default_str();
  hh->add_flag("--dual", ha.dual, "Compare with the cohomology of the linear dual");
  hh->add_option("--expect", ha.expect, "Expected ranks, one per row; a mismatch exits with 1")->delimiter(',');
  hh->callback([&] { make = [&](const Settings& s) { return hh_job(ha, s); }; });

  HCArgs ca;
  auto* hcc = app.add_subcommand("hc", "Cyclic homology from the b-B bicomplex");
  hcc->add_option("--algebra", ca.algebra, "Algebra JSON")->required();
  hcc->add_option("--max-degree", ca.max_degree, "Top degree")->required();
  hcc->add_option("--expect", ca.expect, "Expected ranks, one per degree; a mismatch exits with 1")->delimiter(',');
  hcc->callback([&] { make = [&](const Settings& s) { return hc_job(ca, s); }; });

  SphereArgs spa;
  bool emit = false, check = false;
  auto* sphere = app.add_subcommand("sphere", "Cochain models of spheres");
  sphere->add_option("--n", spa.n, "S^{2n+1} (odd) or S^{2n} (even)")->required();
  sphere->add_option("--parity", spa.parity, "odd or even")->required();
  auto* em = sphere->add_flag("--emit-algebra", emit, "Print the model as algebra JSON");
  auto* cr = sphere->add_flag("--check-remark", check, "Compare HH with the free loop space cohomology");
  em->excludes(cr);
  sphere->add_option("--max-degree", spa.max_degree, "Top total degree for --check-remark")->capture_default_str();
  sphere->callback([&] {
    if (!emit && !check) throw CLI::ValidationError("sphere", "give --emit-algebra or --check-remark");
    make = [&](const Settings& s) { return sphere_job(spa, s); };
  });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", va.suite, "lambda, latching, subdivision, cyclotomic, hochschild, duality or all")
      ->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed of the fuzz generator")->capture_default_str();
  verify->callback([&] { make = [&](const Settings& s) { return verify_job(va, s); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const Settings settings{cell_cap(g)};
    if (emit) {
      std::cout << sphere_algebra(spa).dump(2) << "\n";
      return 0;
    }
    return execute(make(settings), g);
  } catch (const std::bad_alloc&) {
    std::cerr << "cyclotome: resource limit: out of memory\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    std::cerr << "cyclotome: resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "cyclotome: input error: " << e.what() << "\n";
    return 2;
  } catch (const GeneratorExhausted& e) {
    std::cerr << "cyclotome: input error: " << e.what() << "\n";
    return 2;
  } catch (const RangeError& e) {
    std::cerr << "cyclotome: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cyclotome: internal error: " << e.what() << "\n";
    return 4;
  }
}
