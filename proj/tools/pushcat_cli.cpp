#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "pushcat/cli/commands.hpp"

using namespace pushcat;

static const CLI::Validator at_least_one(
    [](std::string& v) { return v.find_first_not_of('0') == std::string::npos ? "must be at least 1" : ""; }, ">= 1");

int main(int argc, char** argv) {
  CLI::App app{"Pushouts of finite categories along fully faithful functors"};
  app.require_subcommand(1);
  cli::JobConfig cfg;
  std::string format = "table";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--dim", cfg.dim, "truncation dimension")->check(at_least_one);
    sub->add_option("--word-bound", cfg.word_bound, "maximal word length for the oracle")->check(at_least_one);
    sub->add_option("--set-bound", cfg.set_bound, "size bound k for set-valued functors")->check(at_least_one);
    sub->add_option("--seed", cfg.seed, "seed for fuzz instances");
    sub->add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--budget", cfg.budget, "step budget for exhaustive enumeration")->check(at_least_one);
  };

  auto* check = app.add_subcommand("check", "validate files and evaluate predicates");
  common(check);
  check->add_option("files", cfg.inputs, "category, span or subcategory files")->required()->check(CLI::ExistingFile);
  check->add_option("--expect", cfg.expect, "predicate that must hold")->take_all();

  auto* pushout = app.add_subcommand("pushout", "pushout along a Dwyer functor with mapping space reports");
  common(pushout);
  pushout->add_option("span", cfg.inputs, "span file")->required()->check(CLI::ExistingFile);
  pushout->add_option("--emit", cfg.emit, "write the pushout category to this file");

  auto* mapspace = app.add_subcommand("mapspace", "mapping space formulas against the word oracle");
  common(mapspace);
  mapspace->add_option("args", cfg.inputs, "span file, optionally followed by two object names")->required();

  std::string which;
  auto* verify = app.add_subcommand("verify", "run one of the verifiers");
  common(verify);
  verify->add_option("which", which, "verifier")->required()->check(CLI::IsMember(cli::verify_kinds()));
  verify->add_option("file", cfg.inputs, "input file")->required()->check(CLI::ExistingFile);

  std::size_t count = 100;
  auto* fuzz = app.add_subcommand("fuzz", "run a randomized property suite");
  common(fuzz);
  fuzz->add_option("which", which, "suite")->required();
  fuzz->add_option("count", count, "number of instances");
  fuzz->add_option("--fixtures-dir", cfg.fixtures_dir, "directory for failing instances");
  fuzz->add_option("--jobs", cfg.jobs, "worker threads (0: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputInvalid;
  }
  cfg.format = format == "structured" ? cli::Format::Structured : cli::Format::Table;

  const cli::Outcome o = cli::guarded([&]() -> cli::Outcome {
    if (check->parsed()) return cli::cmd_check(cfg);
    if (pushout->parsed()) return cli::cmd_pushout(cfg);
    if (mapspace->parsed()) return cli::cmd_mapspace(cfg);
    if (verify->parsed()) return cli::cmd_verify(which, cfg);
    return cli::cmd_fuzz(which, count, cfg);
  });
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
