#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "logfw/cli/report.hpp"
#include "logfw/monoid/operations.hpp"

#ifndef LOGFW_FIXTURE_DIR
#define LOGFW_FIXTURE_DIR "fixtures"
#endif

using namespace logfw;

namespace {

// "-" writes JSON to stdout instead of the human summary.
int emit(const cli::RunOutcome& out, const std::string& json_path) {
  const auto text = out.report.dump(2) + "\n";
  if (json_path == "-") {
    std::cout << text;
  } else {
    std::cout << cli::human_summary(out.report);
    if (!json_path.empty()) {
      std::ofstream f(json_path);
      if (!f) {
        std::cerr << "cannot write " << json_path << "\n";
        return cli::exit_input;
      }
      f << text;
    }
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log Frobenius-Witt differentials and log regularity of prelog rings"};
  app.require_subcommand(1);

  cli::RunOptions run_opts;
  std::string json_path;

  auto* run = app.add_subcommand("run", "Run one instance through both regularity routes");
  std::string file;
  run->add_option("file", file, "instance file (JSON)")->required();
  run->add_option("--seed", run_opts.seed, "seed for the derivation axiom samples");
  run->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  run->add_flag("--timings", run_opts.timings, "add per-stage timings (makes the report run-dependent)");

  auto* corpus = app.add_subcommand("corpus", "Run every fixture of a corpus directory");
  cli::CorpusOptions corpus_opts;
  corpus_opts.dir = std::string(LOGFW_FIXTURE_DIR) + "/corpus";
  corpus->add_option("--corpus-dir", corpus_opts.dir, "directory of instance files");
  corpus->add_option("--filter", corpus_opts.filter, "only fixtures whose name, file or tag contains this");
  corpus->add_option("--emit-presentations", corpus_opts.emit_presentations, "write one presentation JSON per fixture");
  corpus->add_option("--jobs", corpus_opts.jobs, "worker threads (default: hardware concurrency)");
  corpus->add_option("--seed", run_opts.seed, "seed for the derivation axiom samples");
  corpus->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
  corpus->add_flag("--timings", run_opts.timings, "add per-stage timings");

  auto* mon = app.add_subcommand("monoid", "Describe the monoid of an instance");
  std::string monoid_file;
  bool info = false;
  mon->add_option("file", monoid_file, "instance file or {ambient_rank, generators}")->required();
  mon->add_flag("--info", info, "print faces, Hilbert basis, sharpening and section");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return emit(cli::run_file(file, run_opts), json_path);
    if (*corpus) {
      corpus_opts.run = run_opts;
      return emit(cli::run_corpus(corpus_opts), json_path);
    }
    if (*mon) {
      const auto q = cli::load_monoid(monoid_file);
      const auto out = info ? cli::monoid_info(q) : cli::json{{"generators", q.generators()}, {"dimension", monoid::dim_rank(q)}};
      std::cout << out.dump(2) << "\n";
      return cli::exit_ok;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return cli::exit_code_for(e.error_class());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::exit_internal;
  }
  return cli::exit_ok;
}
