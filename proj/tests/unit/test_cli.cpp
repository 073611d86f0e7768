#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "logfw/cli/report.hpp"

using namespace logfw;
using namespace logfw::cli;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = std::string(LOGFW_FIXTURE_DIR) + "/corpus";

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "logfw_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("run: A1 cone is log regular by both routes") {
  const auto out = run_file(kCorpus + "/toric_a1_cone.json");
  CHECK(out.exit_code == exit_ok);
  CHECK(out.report["status"] == "ok");
  CHECK(out.report["routes"]["definition"]["log_regular"] == true);
  CHECK(out.report["routes"]["fw_rank"]["log_regular"] == true);
  CHECK(out.report["routes_agree"] == true);
}

TEST_CASE("run: alpha(1) = xy is not log regular by both routes") {
  const auto out = run_file(kCorpus + "/xy_not_log_regular.json");
  CHECK(out.exit_code == exit_ok);
  CHECK(out.report["routes"]["definition"]["log_regular"] == false);
  CHECK(out.report["routes"]["fw_rank"]["log_regular"] == false);
  CHECK(out.report["routes"]["fw_rank"]["closed_point_rank"] == 3);
  CHECK(out.report["routes"]["fw_rank"]["target_rank"] == 2);
}

TEST_CASE("run: malformed alpha key exits 1 naming the field") {
  const auto path = write_file("bad_alpha.json", R"({"name": "bad", "base": {"kind": "Fq", "p": 3},
    "ring": {"variables": ["x"]}, "monoid": {"ambient_rank": 1, "generators": [[1]]},
    "alpha": {"e1": "x", "e7": "x"}})");
  const auto out = run_file(path.string());
  CHECK(out.exit_code == exit_input);
  CHECK(out.report["status"] == "error");
  CHECK(out.report["error"]["message"].get<std::string>().find("alpha.e7") != std::string::npos);
}

TEST_CASE("run: a contradicted expected value exits 3") {
  std::ifstream in(kCorpus + "/zp_ramified.json");
  auto doc = json::parse(in);
  doc["expected"]["closed_point_rank"] = 2;
  const auto path = write_file("wrong_expected.json", doc.dump());
  const auto out = run_file(path.string());
  CHECK(out.exit_code == exit_disagreement);
  CHECK(out.report["expected"]["mismatches"].size() == 1);
  CHECK(out.report["expected"]["mismatches"][0]["field"] == "closed_point_rank");
}

TEST_CASE("run: unknown expected key is an input error") {
  std::ifstream in(kCorpus + "/zp_ramified.json");
  auto doc = json::parse(in);
  doc["expected"]["colour"] = "blue";
  const auto out = run_file(write_file("unknown_expected.json", doc.dump()).string());
  CHECK(out.exit_code == exit_input);
  CHECK(out.report["error"]["message"].get<std::string>().find("expected.colour") != std::string::npos);
}

TEST_CASE("run: exhausted budget exits 2") {
  RunOptions opts;
  opts.budgets.groebner_pairs = 0;
  const auto out = run_file(kCorpus + "/toric_conifold.json", opts);
  CHECK(out.exit_code == exit_budget);
  CHECK(out.report["status"] == "error");
}

TEST_CASE("exit codes combine by severity") {
  CHECK(combine_exit_codes(exit_input, exit_budget) == exit_budget);
  CHECK(combine_exit_codes(exit_disagreement, exit_budget) == exit_disagreement);
  CHECK(combine_exit_codes(exit_disagreement, exit_internal) == exit_internal);
  CHECK(combine_exit_codes(exit_ok, exit_input) == exit_input);
  CHECK(combine_exit_codes(exit_ok, exit_ok) == exit_ok);
}

TEST_CASE("corpus: filter selects a subset") {
  CorpusOptions opts;
  opts.dir = kCorpus;
  opts.filter = "toric";
  const auto out = run_corpus(opts);
  const auto& fixtures = out.report["fixtures"];
  CHECK(fixtures.size() >= 3);
  CHECK(fixtures.size() < 12);
  for (const auto& f : fixtures) {
    const auto& tags = f["tags"];
    const bool tagged = std::find(tags.begin(), tags.end(), json("toric")) != tags.end();
    CHECK((tagged || f["source"].get<std::string>().find("toric") != std::string::npos));
  }
  CHECK(out.exit_code == exit_ok);
}

TEST_CASE("corpus: emit-presentations writes one file per fixture") {
  const auto dir = scratch("presentations");
  fs::remove_all(dir);
  CorpusOptions opts;
  opts.dir = kCorpus;
  opts.filter = "zp_";
  opts.emit_presentations = dir.string();
  const auto out = run_corpus(opts);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    std::ifstream in(e.path());
    const auto pres = json::parse(in);
    CHECK(pres.contains("generators"));
    CHECK(pres.contains("rows"));
    // mixed characteristic presentations carry WP
    CHECK(pres["generators"][0] == "WP");
  }
  CHECK(files == out.report["fixtures"].size());
  CHECK(files == 5);
}

TEST_CASE("reports are byte-stable across runs and thread counts") {
  const auto a = run_file(kCorpus + "/fp_rational_toric.json").report.dump();
  const auto b = run_file(kCorpus + "/fp_rational_toric.json").report.dump();
  CHECK(a == b);
  CorpusOptions one, many;
  one.dir = many.dir = kCorpus;
  one.jobs = 1;
  many.jobs = 4;
  CHECK(run_corpus(one).report.dump() == run_corpus(many).report.dump());
}

TEST_CASE("timings only appear when asked for") {
  RunOptions opts;
  CHECK_FALSE(run_file(kCorpus + "/std_n2_fq.json", opts).report.contains("timings_ms"));
  opts.timings = true;
  CHECK(run_file(kCorpus + "/std_n2_fq.json", opts).report.contains("timings_ms"));
}

TEST_CASE("monoid info for the A1 cone") {
  const auto q = load_monoid(kCorpus + "/toric_a1_cone.json");
  const auto info = monoid_info(q);
  CHECK(info["saturated"] == true);
  CHECK(info["dim_chain"] == 2);
  CHECK(info["hilbert_basis"].size() == 3);
  CHECK(info["sharpening"]["spec_isomorphic"] == true);
  // empty prime, two rays, the maximal prime
  CHECK(info["spec"].size() == 4);

  const auto bare = write_file("bare_monoid.json", R"({"ambient_rank": 1, "generators": [[2], [3]]})");
  const auto ns = monoid_info(load_monoid(bare.string()));
  CHECK(ns["saturated"] == false);
  CHECK(ns["hilbert_basis"] == json::parse("[[1]]"));
}
