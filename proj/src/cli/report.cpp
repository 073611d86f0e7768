#include "logfw/cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "logfw/fwdiff/checks.hpp"
#include "logfw/fwdiff/derivation.hpp"
#include "logfw/monoid/operations.hpp"

namespace logfw::cli {

namespace fs = std::filesystem;

int exit_code_for(ErrorClass cls) {
  switch (cls) {
    case ErrorClass::input: return exit_input;
    case ErrorClass::budget: return exit_budget;
    case ErrorClass::internal: return exit_internal;
  }
  return exit_internal;
}

int combine_exit_codes(int a, int b) {
  static constexpr int order[] = {exit_internal, exit_disagreement, exit_budget, exit_input};
  for (int c : order)
    if (a == c || b == c) return c;
  return exit_ok;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(bool on) : on_(on), last_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    if (!on_) return;
    const auto now = std::chrono::steady_clock::now();
    laps_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  json to_json() const { return laps_; }

 private:
  bool on_;
  std::chrono::steady_clock::time_point last_;
  json laps_ = json::object();
};

json vectors_json(const std::vector<monoid::IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

json error_json(const Error& e) { return {{"kind", e.kind()}, {"message", e.what()}}; }

json monoid_summary(const monoid::AffineMonoid& q) {
  return {{"generators", vectors_json(q.generators())},
          {"gp_rank", q.gp_rank()},
          {"unit_rank", q.unit_rank()},
          {"sharp", q.is_sharp()},
          {"dimension", monoid::dim_rank(q)}};
}

json definition_json(const prelog::LogRegularityVerdict& v) {
  return {{"log_regular", v.is_log_regular},
          {"dimension", v.dimension},
          {"monoid_dimension", v.monoid_dimension},
          {"quotient_dimension", v.quotient_dimension},
          {"quotient_embedding_dimension", v.quotient_embedding_dimension},
          {"regular_quotient", v.regular_quotient}};
}

json freeness_json(const fwdiff::FreenessResult& f) {
  json out{{"free", f.free},
           {"target_rank", f.target_rank},
           {"closed_point_rank", f.closed_point_rank},
           {"fitting_top_is_unit", f.fitting_top_is_unit},
           {"eliminated_remainder_zero", f.eliminated_remainder_zero}};
  out["fitting_minors_zero"] = f.fitting_minors_zero ? json(*f.fitting_minors_zero) : json(nullptr);
  out["minors_evaluated"] = f.minors_evaluated;
  out["notes"] = f.notes;
  return out;
}

// Expectation keys and where the computed value lives in the report.
const std::vector<std::pair<std::string, std::vector<std::string>>>& expectation_paths() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> paths{
      {"log_regular", {"/routes/definition/log_regular", "/routes/fw_rank/log_regular"}},
      {"dimension", {"/ring/dimension"}},
      {"monoid_dimension", {"/monoid/dimension"}},
      {"quotient_dimension", {"/routes/definition/quotient_dimension"}},
      {"regular_quotient", {"/routes/definition/regular_quotient"}},
      {"p_degree", {"/ring/p_degree"}},
      {"target_rank", {"/routes/fw_rank/target_rank"}},
      {"closed_point_rank", {"/routes/fw_rank/closed_point_rank"}},
      {"free_of_target_rank", {"/routes/fw_rank/free_of_target_rank"}},
      {"fw_generators", {"/presentation/generators"}},
  };
  return paths;
}

json compare_expected(const json& expected, const json& report) {
  json out{{"provenance", expected.value("provenance", "")}, {"checked", json::array()}, {"mismatches", json::array()}};
  for (const auto& [key, value] : expected.items()) {
    if (key == "provenance") continue;
    const auto& paths = expectation_paths();
    const auto it = std::find_if(paths.begin(), paths.end(), [&](const auto& e) { return e.first == key; });
    if (it == paths.end()) throw ParseError("field 'expected." + key + "': unknown expectation");
    for (const auto& path : it->second) {
      const json::json_pointer ptr(path);
      const json actual = report.contains(ptr) ? report.at(ptr) : json(nullptr);
      out["checked"].push_back(path);
      if (actual != value)
        out["mismatches"].push_back(
            {{"field", key}, {"path", path}, {"expected", value}, {"actual", actual}, {"provenance", out["provenance"]}});
    }
  }
  return out;
}

template <class F>
void fill_report(const prelog::PrelogRing<F>& p, const Instance& inst, const RunOptions& opts, json& report,
                 Stopwatch& clock) {
  const auto& pr = p.ring();
  const auto validation = prelog::validate(p);
  report["validation"] = {{"homomorphism", validation.homomorphism},
                          {"local", validation.local},
                          {"locality_scope", validation.locality_scope},
                          {"notes", validation.notes}};
  clock.lap("validate");

  report["ring"] = {{"variables", pr.ring().names()},
                    {"dimension", pr.dimension()},
                    {"embedding_dimension", pr.embedding_dimension()},
                    {"p_degree", pr.p_degree()}};
  report["monoid"] = monoid_summary(p.monoid());

  const auto reduction = prelog::sharp_reduce(p);
  report["sharp_reduction"] = {{"identity", reduction.identity},
                               {"generators", vectors_json(reduction.reduced.monoid().generators())}};
  clock.lap("sharp_reduce");

  json routes;
  std::optional<bool> definition;
  try {
    const auto v = prelog::log_regular_by_definition(p);
    routes["definition"] = definition_json(v);
    definition = v.is_log_regular;
  } catch (const ImperfectBaseUnsupported& e) {
    routes["definition"] = {{"defined", false}, {"reason", e.what()}};
  }
  clock.lap("definition");

  const auto fw = fwdiff::fw_criterion_verdict(p);
  const auto unreduced = fwdiff::rank_at_closed_point(fwdiff::build_presentation(p));
  routes["fw_rank"] = {{"log_regular", fw.verdict.is_log_regular},
                       {"dimension", fw.verdict.dimension},
                       {"p_degree", fw.verdict.p_degree},
                       {"target_rank", fw.verdict.target_rank},
                       {"closed_point_rank", fw.verdict.closed_point_rank},
                       {"unreduced_closed_point_rank", unreduced},
                       {"free_of_target_rank", fw.freeness.free}};
  report["routes"] = routes;
  report["freeness"] = freeness_json(fw.freeness);
  report["presentation"] = {{"generators", fw.presentation.generators.size()}, {"relations", fw.presentation.rows.size()}};
  clock.lap("fw_rank");

  report["routes_agree"] = definition ? json(*definition == fw.verdict.is_log_regular) : json(nullptr);
  report["free_implies_rank"] = !fw.freeness.free || fw.verdict.closed_point_rank == fw.verdict.target_rank;

  json checks = json::object();
  const auto sharp = fwdiff::sharp_invariance(p);
  checks["sharp_invariance"] = {{"rank", sharp.rank}, {"reduced_rank", sharp.reduced_rank}, {"holds", sharp.holds()}};
  if (p.monoid().is_sharp()) {
    const auto fac = fwdiff::factorization_check(p);
    checks["factorization"] = {{"rank", fac.rank},
                               {"quotient_rank", fac.quotient_rank},
                               {"gp_rank", fac.gp_rank},
                               {"holds", fac.holds()}};
  }
  if constexpr (std::is_same_v<F, arith::GaloisField>) {
    if (!p.is_mixed() && p.monoid().gp_rank() == 0) {
      const int kahler = ring::kahler_rank_at_origin(pr.ring(), pr.ideal().generators());
      checks["frobenius_twist"] = {{"fw_rank", fw.verdict.closed_point_rank},
                                   {"kahler_rank", kahler},
                                   {"holds", kahler == fw.verdict.closed_point_rank}};
    }
  }
  report["checks"] = checks;
  clock.lap("checks");

  const auto deriv = fwdiff::verify_derivation(p, opts.seed, opts.derivation_samples);
  report["derivation_check"] = {{"seed", deriv.seed},
                                {"sum_checks", deriv.sum_checks},
                                {"product_checks", deriv.product_checks},
                                {"log_checks", deriv.log_checks},
                                {"ok", deriv.ok()},
                                {"failures", deriv.failures}};
  clock.lap("derivation_check");
  (void)inst;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

RunOutcome run_instance(const Instance& inst, const RunOptions& opts) {
  RunOutcome out;
  json& report = out.report;
  report["name"] = inst.name;
  report["source"] = inst.source;
  report["base"] = base_description(inst.base);
  report["tags"] = inst.tags;
  Stopwatch clock(opts.timings);
  try {
    const auto prelog = build_prelog(inst, opts.budgets);
    clock.lap("build");
    std::visit([&](const auto& p) { fill_report(p, inst, opts, report, clock); }, prelog);
    if (!inst.expected.is_null()) report["expected"] = compare_expected(inst.expected, report);
    bool science_ok = report["routes_agree"] != json(false) && report["free_implies_rank"] == json(true);
    if (report.contains("expected")) science_ok = science_ok && report["expected"]["mismatches"].empty();
    for (const auto& [_, check] : report["checks"].items()) science_ok = science_ok && check["holds"] == json(true);
    science_ok = science_ok && report["derivation_check"]["ok"] == json(true);
    report["status"] = science_ok ? "ok" : "failed";
    out.exit_code = science_ok ? exit_ok : exit_disagreement;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = error_json(e);
    out.exit_code = exit_code_for(e.error_class());
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    out.exit_code = exit_internal;
  }
  if (opts.timings) report["timings_ms"] = clock.to_json();
  return out;
}

RunOutcome run_file(const std::string& path, const RunOptions& opts) {
  try {
    return run_instance(load_instance(path), opts);
  } catch (const Error& e) {
    RunOutcome out;
    out.report = {{"source", path}, {"status", "error"}, {"error", error_json(e)}};
    out.exit_code = exit_code_for(e.error_class());
    return out;
  }
}

json instance_presentation(const Instance& inst, const Budgets& budgets) {
  const auto prelog = build_prelog(inst, budgets);
  return std::visit(
      [&](const auto& p) {
        json out{{"name", inst.name}, {"base", base_description(inst.base)}};
        out.update(presentation_json(fwdiff::presentation(p)));
        return out;
      },
      prelog);
}

RunOutcome run_corpus(const CorpusOptions& opts) {
  std::vector<fs::path> files;
  if (!fs::is_directory(opts.dir)) throw ParseError("corpus directory " + opts.dir + " not found");
  for (const auto& entry : fs::directory_iterator(opts.dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  // filter on name, stem and tags; unreadable files are kept so their errors surface
  std::vector<std::pair<fs::path, std::optional<Instance>>> selected;
  for (const auto& f : files) {
    std::optional<Instance> inst;
    try {
      inst = load_instance(f.string());
    } catch (const Error&) {
    }
    if (!opts.filter.empty()) {
      const auto needle = lowercase(opts.filter);
      bool hit = lowercase(f.stem().string()).find(needle) != std::string::npos;
      if (inst) {
        hit = hit || lowercase(inst->name).find(needle) != std::string::npos;
        for (const auto& t : inst->tags) hit = hit || lowercase(t).find(needle) != std::string::npos;
      }
      if (!hit) continue;
    }
    selected.emplace_back(f, std::move(inst));
  }

  std::vector<RunOutcome> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) {
      const auto& [path, inst] = selected[i];
      results[i] = inst ? run_instance(*inst, opts.run) : run_file(path.string(), opts.run);
      if (!opts.emit_presentations.empty() && inst && results[i].report["status"] != "error") {
        try {
          std::ofstream(fs::path(opts.emit_presentations) / (path.stem().string() + ".json"))
              << instance_presentation(*inst, opts.run.budgets).dump(2) << "\n";
        } catch (const Error& e) {
          results[i].report["presentation_error"] = error_json(e);
        }
      }
    }
  };
  if (!opts.emit_presentations.empty()) fs::create_directories(opts.emit_presentations);
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  RunOutcome out;
  json summary{{"fixtures", selected.size()},
               {"passed", 0},
               {"route_disagreements", json::array()},
               {"expected_mismatches", json::array()},
               {"failed_checks", json::array()},
               {"errors", json::array()}};
  json reports = json::array();
  for (auto& r : results) {
    const auto& rep = r.report;
    const std::string name = rep.value("name", rep.value("source", "?"));
    if (rep["status"] == "ok") summary["passed"] = summary["passed"].get<int>() + 1;
    if (rep.contains("routes_agree") && rep["routes_agree"] == json(false)) summary["route_disagreements"].push_back(name);
    if (rep.contains("expected") && !rep["expected"]["mismatches"].empty()) summary["expected_mismatches"].push_back(name);
    if (rep["status"] == "failed") summary["failed_checks"].push_back(name);
    if (rep["status"] == "error") summary["errors"].push_back({{"fixture", name}, {"error", rep["error"]}});
    out.exit_code = combine_exit_codes(out.exit_code, r.exit_code);
    reports.push_back(std::move(r.report));
  }
  out.report = {{"corpus", opts.dir}, {"filter", opts.filter}, {"summary", summary}, {"fixtures", reports}};
  return out;
}

json monoid_info(const monoid::AffineMonoid& q) {
  json out = monoid_summary(q);
  out["facets"] = vectors_json(q.facets());
  out["saturated"] = monoid::is_saturated(q);
  try {
    out["hilbert_basis"] = vectors_json(monoid::hilbert_basis(q));
  } catch (const Error& e) {
    out["hilbert_basis"] = error_json(e);
  }
  out["dim_chain"] = monoid::dim_chain(q);
  const auto sh = monoid::sharpen(q);
  out["sharpening"] = {{"generators", vectors_json(sh.sharp.generators())},
                       {"spec_isomorphic", monoid::spec_matches_sharpening(q, sh)}};
  const auto s = monoid::section(q, sh);
  out["section"] = {{"generator_images", vectors_json(s.generator_images)}};
  json primes = json::array();
  for (const auto& prime : monoid::spec(q)) {
    json face = json::array();
    for (std::size_t i = 0; i < q.generators().size(); ++i)
      if (prime.face_mask >> i & 1) face.push_back(q.generators()[i]);
    primes.push_back({{"face_rank", prime.face_rank}, {"face_generators", face}, {"functional", prime.functional}});
  }
  out["spec"] = primes;
  return out;
}

monoid::AffineMonoid load_monoid(const std::string& path, const Budgets& budgets) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("base")) {
    const auto inst = parse_instance(doc, path);
    return monoid::AffineMonoid(inst.ambient_rank, inst.generators, budgets);
  }
  const json& m = doc.is_object() && doc.contains("monoid") ? doc.at("monoid") : doc;
  if (!m.is_object() || !m.contains("ambient_rank") || !m.contains("generators"))
    throw ParseError("field 'monoid': expected ambient_rank and generators");
  if (!m.at("ambient_rank").is_number_integer()) throw ParseError("field 'monoid.ambient_rank': expected an integer");
  const int rank = m.at("ambient_rank").get<int>();
  std::vector<monoid::IntVec> gens;
  const auto& g = m.at("generators");
  if (!g.is_array()) throw ParseError("field 'monoid.generators': expected an array");
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::string field = "monoid.generators[" + std::to_string(i) + "]";
    if (!g[i].is_array() || g[i].size() != static_cast<std::size_t>(rank))
      throw ParseError("field '" + field + "': expected " + std::to_string(rank) + " integers");
    monoid::IntVec v;
    for (const auto& e : g[i]) {
      if (!e.is_number_integer()) throw ParseError("field '" + field + "': expected integers");
      v.push_back(e.get<std::int64_t>());
    }
    gens.push_back(std::move(v));
  }
  return monoid::AffineMonoid(rank, gens, budgets);
}

std::string human_summary(const json& report) {
  std::ostringstream os;
  auto line = [&](const json& r) {
    os << (r.value("status", "?") == "ok" ? "ok    " : r.value("status", "?") == "failed" ? "FAIL  " : "ERROR ");
    os << r.value("name", r.value("source", "?"));
    if (r.value("status", "") == "error") {
      os << ": " << r["error"].value("message", "");
    } else {
      const auto& routes = r["routes"];
      auto verdict = [](const json& v) {
        return v.contains("log_regular") ? (v["log_regular"].get<bool>() ? "log regular" : "not log regular") : "undefined";
      };
      os << ": definition " << verdict(routes["definition"]) << ", fw rank " << routes["fw_rank"]["closed_point_rank"]
         << "/" << routes["fw_rank"]["target_rank"] << " (" << verdict(routes["fw_rank"]) << ")";
      if (r.contains("expected") && !r["expected"]["mismatches"].empty())
        os << ", " << r["expected"]["mismatches"].size() << " expectation mismatch(es)";
    }
    os << "\n";
  };
  if (report.contains("summary")) {
    for (const auto& r : report["fixtures"]) line(r);
    const auto& s = report["summary"];
    os << s["passed"] << "/" << s["fixtures"] << " fixtures passed, " << s["route_disagreements"].size()
       << " route disagreement(s), " << s["errors"].size() << " error(s)\n";
  } else {
    line(report);
  }
  return os.str();
}

}  // namespace logfw::cli
