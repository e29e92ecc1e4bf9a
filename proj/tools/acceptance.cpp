// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "pushcat/cli/commands.hpp"

#ifndef PUSHCAT_FIXTURE_DIR
#define PUSHCAT_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

using namespace pushcat;
using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  /// Wall-clock limit in seconds; 0 means none.
  double limit;
  std::function<Result()> run;
};

std::string fixture_dir;

std::string fixture(const std::string& name) { return (std::filesystem::path(fixture_dir) / name).string(); }

std::string tally(const cli::FuzzSummary& s) {
  std::string out = std::to_string(s.passed) + "/" + std::to_string(s.count);
  if (!s.failures.empty()) out += ", first failure at instance " + std::to_string(s.failures.front().first) + ": " +
                                  s.failures.front().second.detail;
  return out;
}

Result suite(const std::string& which, std::size_t count, const cli::JobConfig& cfg) {
  const auto s = cli::run_suite(cli::fuzz_suites().at(which), count, cfg);
  return {s.passed == s.count, tally(s)};
}

Result golden() {
  const Span span = io::parse_span(io::load(fixture("example_span.json")));
  const auto p = dwyer_pushout(span, {4, 8, true});
  std::set<std::string> objects;
  for (ObjIndex x = 0; x < p.d->num_objects(); ++x) objects.insert(p.d->object_name(x));
  const auto relations = cli::detail::covering_relations(*p.d);
  const std::vector<std::string> expected{"0<1", "1<2", "1<2′"};
  const bool pass = cli::detail::is_poset(*p.d) && objects == std::set<std::string>{"0", "1", "2", "2′"} &&
                    relations == expected && p.oracle.agrees && p.oracle.unstabilized.empty();
  return {pass, "objects {" + cli::detail::join({objects.begin(), objects.end()}) + "}, relations " +
                    cli::detail::join(relations) + (p.oracle.agrees ? ", oracle agrees" : ", oracle disagrees")};
}

Result pi0(const cli::JobConfig& cfg) {
  const auto s = cli::run_suite(cli::fuzz_suites().at("pi0"), 200, cfg);
  return {s.passed == s.count, tally(s) + ", unstabilized pairs " + std::to_string(s.unstabilized)};
}

Result reedy(const cli::JobConfig& cfg) {
  std::string detail;
  for (const char* name : {"reedy_arrow.json", "reedy_two.json"}) {
    const io::Json j = io::load(fixture(name));
    const CatPtr c = io::parse_category(io::detail::field(j, "category", "document"), "category");
    const auto v = verify_reedy_square(cli::detail::parse_inclusion(j, c), 2, cfg.dim, cfg.budget);
    detail += std::string(name) + " " + cli::detail::fraction(v.functor_cardinality) + " = " +
              cli::detail::fraction(v.data_cardinality) + "; ";
    if (!v.holds || v.functor_cardinality != v.data_cardinality) return {false, detail + v.detail};
  }
  const auto s = cli::run_suite(cli::fuzz_suites().at("reedy"), 10, cfg);
  return {s.passed == s.count, detail + "two-level " + tally(s)};
}

Result segal(const cli::JobConfig& cfg) {
  const auto s = cli::run_suite(cli::fuzz_suites().at("segal"), 25, cfg);
  const Span horn = io::parse_span(io::load(fixture("horn_span.json")));
  const auto np = nerve_pushout(horn, 3);
  const auto v = check_segal_away(*np.sset, std::vector<bool>(np.sset->count[0], false), 3);
  std::string detail = tally(s) + "; 2-horn ";
  if (v || !v.witness) return {false, detail + "unexpectedly HOLDS"};
  detail += "FAILS at necklace " + to_string(v.witness->necklace.necklace) + " with " +
            std::to_string(v.witness->extensions) + " fillers";
  return {s.passed == s.count, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  cli::JobConfig cfg;
  fixture_dir = PUSHCAT_FIXTURE_DIR;
  app.add_option("--fixtures", fixture_dir, "fixture directory");
  app.add_option("--seed", cfg.seed, "fuzz seed");
  app.add_option("--jobs", cfg.jobs, "worker threads");
  CLI11_PARSE(app, argc, argv);
  cfg.fixtures_dir.clear();

  const std::vector<Criterion> criteria{
      {1, "golden pushout", 1, golden},
      {2, "fbar fully faithful", 30, [&] { return suite("fully-faithful", 200, cfg); }},
      {3, "π0 agreement", 0, [&] { return pi0(cfg); }},
      {4, "fourth square", 120, [&] { return suite("fourth", 100, cfg); }},
      {5, "fold square", 0, [&] { return suite("fold", 50, cfg); }},
      {6, "sieve union", 0, [&] { return suite("sieve-union", 100, cfg); }},
      {7, "preorder closure", 0, [&] { return suite("preorder-closure", 100, cfg); }},
      {8, "Beck-Chevalley", 0, [&] { return suite("beck-chevalley", 50, cfg); }},
      {9, "Reedy extension", 300, [&] { return reedy(cfg); }},
      {10, "Segal away", 0, [&] { return segal(cfg); }},
      {11, "oracle identity", 0, [&] { return suite("oracle-identity", 200, cfg); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r = {false, e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = c.limit == 0 || secs < c.limit;
    if (!in_time) r.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    const bool pass = r.pass && in_time;
    failed += !pass;
    std::cout << "criterion " << std::setw(2) << c.number << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << ": "
              << r.detail << " (" << std::fixed << std::setprecision(3) << secs << " s)" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
