#pragma once

#include <cstdint>
#include <string>

#include "logfw/cli/instance.hpp"
#include "logfw/fwdiff/presentation.hpp"

namespace logfw::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_input = 1,
  exit_budget = 2,
  exit_disagreement = 3,  // routes disagree or an expected value is contradicted
  exit_internal = 4,
};

int exit_code_for(ErrorClass cls);
// Most severe first: internal, disagreement, budget, input.
int combine_exit_codes(int a, int b);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t derivation_samples = 16;
  bool timings = false;
  Budgets budgets;
};

struct RunOutcome {
  json report;
  int exit_code = exit_ok;
};

// validate -> sharp_reduce -> both routes -> cross-checks -> expected block.
RunOutcome run_instance(const Instance& inst, const RunOptions& opts = {});
// As run_instance, turning parse errors into a report as well.
RunOutcome run_file(const std::string& path, const RunOptions& opts = {});

struct CorpusOptions {
  std::string dir;
  std::string filter;            // substring of name, file stem or tag
  std::string emit_presentations;  // directory, empty: none
  unsigned jobs = 0;             // 0: hardware concurrency
  RunOptions run;
};

RunOutcome run_corpus(const CorpusOptions& opts);

template <class F>
json presentation_json(const fwdiff::FwPresentation<F>& pres) {
  json out;
  out["variables"] = pres.ring.names();
  json ideal = json::array();
  for (const auto& g : pres.ideal.generators()) ideal.push_back(pres.ring.to_string(g));
  out["ideal"] = ideal;
  json gens = json::array();
  for (const auto& g : pres.generators) gens.push_back(g.label);
  out["generators"] = gens;
  json rows = json::array();
  for (const auto& row : pres.rows) {
    json coeffs = json::object();
    for (std::size_t j = 0; j < row.element.coeffs.size(); ++j)
      if (!row.element.coeffs[j].is_zero()) coeffs[pres.generators[j].label] = pres.ring.to_string(row.element.coeffs[j]);
    rows.push_back({{"label", row.label}, {"provenance", fwdiff::provenance_name(row.provenance)}, {"coefficients", coeffs}});
  }
  out["rows"] = rows;
  return out;
}

// Presentation of FOmega for an instance, after sharp reduction.
json instance_presentation(const Instance& inst, const Budgets& budgets = {});

json monoid_info(const monoid::AffineMonoid& q);
// Accepts an instance file or a bare {"ambient_rank", "generators"} object.
monoid::AffineMonoid load_monoid(const std::string& path, const Budgets& budgets = {});

// One line per fixture for humans.
std::string human_summary(const json& report);

}  // namespace logfw::cli
