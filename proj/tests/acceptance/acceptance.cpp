// Acceptance run: one PASS/FAIL line per criterion with its tolerance and time.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "logfw/arith/lift.hpp"
#include "logfw/cli/report.hpp"
#include "logfw/fwdiff/checks.hpp"
#include "logfw/fwdiff/oracle.hpp"
#include "logfw/monoid/operations.hpp"

using namespace logfw;
using json = nlohmann::json;
using GF = arith::GaloisField;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = LOGFW_FIXTURE_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

std::vector<fs::path> fixture_files(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

prelog::PrelogRing<GF> load_gf(const fs::path& path) {
  return std::get<prelog::PrelogRing<GF>>(cli::build_prelog(cli::load_instance(path.string())));
}

__int128 ipow(__int128 a, int e) {
  __int128 r = 1;
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

std::int64_t mod128(__int128 a, std::int64_t m) {
  auto r = static_cast<std::int64_t>(a % m);
  return r < 0 ? r + m : r;
}

// Reports for every corpus and oracle fixture, shared by criteria 3, 4, 5, 7 and 8.
struct Reports {
  json corpus;               // run_corpus output
  std::vector<json> oracle;  // run_file on each finite fixture
  double corpus_seconds = 0;

  std::vector<json> all() const {
    std::vector<json> out(corpus["fixtures"].begin(), corpus["fixtures"].end());
    out.insert(out.end(), oracle.begin(), oracle.end());
    return out;
  }
};

Reports& reports() {
  static Reports r = [] {
    Reports out;
    const auto t0 = std::chrono::steady_clock::now();
    cli::CorpusOptions opts;
    opts.dir = kFixtures + "/corpus";
    out.corpus = cli::run_corpus(opts).report;
    out.corpus_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& f : fixture_files(kFixtures + "/oracle")) out.oracle.push_back(cli::run_file(f.string()).report);
    return out;
  }();
  return r;
}

std::string stem_of(const json& rep) { return fs::path(rep.value("source", "")).stem().string(); }

bool has_tag(const json& rep, const std::string& tag) {
  if (!rep.contains("tags")) return false;
  const auto& tags = rep["tags"];
  return std::find(tags.begin(), tags.end(), json(tag)) != tags.end();
}

Outcome criterion_axioms() {
  std::mt19937_64 rng(20261019);
  std::size_t identity = 0, symmetry = 0, failures = 0;
  for (std::int64_t pv : {2, 3, 5}) {
    const arith::Prime p(pv);
    const std::int64_t p2 = pv * pv;
    std::uniform_int_distribution<std::int64_t> wide(-10000, 10000), narrow(-1000, 1000);
    for (int i = 0; i < 10000; ++i) {
      const std::int64_t a = wide(rng), b = wide(rng);
      const auto pab = arith::p_sum_correction(std::vector<std::int64_t>{a, b}, p);
      const __int128 rhs = ipow(a + b, static_cast<int>(pv)) - ipow(a, static_cast<int>(pv)) - ipow(b, static_cast<int>(pv));
      if (mod128(static_cast<__int128>(pv) * pab, p2) != mod128(rhs, p2)) ++failures;
      ++identity;
    }
    for (int i = 0; i < 10000; ++i) {
      std::vector<std::int64_t> v(2 + rng() % 4);
      for (auto& x : v) x = narrow(rng);
      const auto base = arith::p_sum_correction(v, p);
      __int128 sum = 0, powers = 0;
      for (auto x : v) sum += x, powers += ipow(x, static_cast<int>(pv));
      if (base != mod128((ipow(sum, static_cast<int>(pv)) - powers) / pv, pv)) ++failures;
      auto w = v;
      std::shuffle(w.begin(), w.end(), rng);
      if (arith::p_sum_correction(w, p) != base) ++failures;
      ++symmetry;
    }
  }
  std::ostringstream os;
  os << identity << " identity samples, " << symmetry << " permutation samples over p in {2,3,5}, " << failures
     << " failures";
  return {failures == 0, os.str()};
}

Outcome criterion_oracle() {
  std::size_t fixtures = 0, comparisons = 0, disagreements = 0;
  bool trivial = false, nontrivial = false;
  std::ostringstream bad;
  for (const auto& f : fixture_files(kFixtures + "/oracle")) {
    const auto p = load_gf(f);
    const auto r = fwdiff::FiniteRing::from_prelog(p);
    ++fixtures;
    (p.monoid().generators().empty() ? trivial : nontrivial) = true;
    for (const auto kind : {fwdiff::ModuleKind::residue_field, fwdiff::ModuleKind::ring_mod_p}) {
      if (kind == fwdiff::ModuleKind::ring_mod_p && r.size() > 256) continue;
      const fwdiff::FiniteModule m(r, kind);
      const auto fder = fwdiff::brute_force_fder(r, p, m);
      const auto cmp = fwdiff::compare_with_oracle(fwdiff::build_presentation(p), p.monoid(), r, m, fder);
      ++comparisons;
      if (!cmp.agree()) {
        ++disagreements;
        bad << " " << f.stem().string() << "/" << fwdiff::module_name(kind) << "(" << cmp.fder_dimension << " vs "
            << cmp.hom_dimension << ")";
      }
    }
  }
  std::ostringstream os;
  os << fixtures << " finite fixtures, " << comparisons << " FDer/Hom comparisons, " << disagreements
     << " disagreements" << bad.str() << (trivial && nontrivial ? "" : "; missing trivial or nontrivial Q");
  return {disagreements == 0 && fixtures >= 6 && trivial && nontrivial, os.str()};
}

Outcome criterion_corpus() {
  const auto& rep = reports().corpus;
  const auto& summary = rep["summary"];
  std::set<std::string> stems;
  bool non_sharp = false, rational_r1 = false, mixed = false;
  for (const auto& f : rep["fixtures"]) {
    stems.insert(stem_of(f));
    non_sharp = non_sharp || has_tag(f, "non-sharp");
    mixed = mixed || has_tag(f, "mixed");
    if (has_tag(f, "fp-rational") && f.contains("ring") && f["ring"]["p_degree"] == 1 &&
        f["routes"]["fw_rank"]["target_rank"] == f["ring"]["dimension"].get<int>() + 1)
      rational_r1 = true;
  }
  std::vector<std::string> missing;
  for (const char* s : {"toric_a1_cone", "std_n2_fq", "xy_not_log_regular"})
    if (!stems.count(s)) missing.push_back(s);
  if (!non_sharp) missing.push_back("non-sharp");
  if (!rational_r1) missing.push_back("F_p(t) with r = 1");
  if (!mixed) missing.push_back("Z_(p)-local");
  const auto n = summary["fixtures"].get<std::size_t>();
  std::ostringstream os;
  os << n << " fixtures, " << summary["route_disagreements"].size() << " route disagreements, "
     << summary["expected_mismatches"].size() << " expected-value mismatches, " << summary["errors"].size()
     << " errors";
  for (const auto& m : missing) os << "; missing " << m;
  const bool pass = n >= 12 && summary["route_disagreements"].empty() && summary["expected_mismatches"].empty() &&
                    summary["errors"].empty() && missing.empty();
  return {pass, os.str()};
}

Outcome criterion_freeness() {
  std::size_t free = 0, free_ok = 0, log_regular = 0, log_regular_free = 0;
  for (const auto& r : reports().all()) {
    if (r["status"] == "error") continue;
    const auto& fw = r["routes"]["fw_rank"];
    if (fw["free_of_target_rank"] == true) {
      ++free;
      if (fw["closed_point_rank"] == fw["target_rank"]) ++free_ok;
    }
    if (r["routes"]["definition"].value("log_regular", false)) {
      ++log_regular;
      if (fw["free_of_target_rank"] == true) ++log_regular_free;
    }
  }
  std::ostringstream os;
  os << free_ok << "/" << free << " free fixtures have closed-point rank = rho; " << log_regular_free << "/"
     << log_regular << " log-regular fixtures free of rank dim + r";
  return {free == free_ok && log_regular == log_regular_free && log_regular > 0, os.str()};
}

Outcome criterion_sharp() {
  std::size_t non_sharp = 0, holds = 0;
  std::ostringstream bad;
  for (const auto& r : reports().all()) {
    if (r["status"] == "error" || r["monoid"]["sharp"] == true) continue;
    ++non_sharp;
    const auto& c = r["checks"]["sharp_invariance"];
    if (c["holds"] == true)
      ++holds;
    else
      bad << " " << stem_of(r) << "(" << c["rank"] << " vs " << c["reduced_rank"] << ")";
  }
  std::ostringstream os;
  os << holds << "/" << non_sharp << " non-sharp fixtures keep their closed-point rank" << bad.str();
  return {non_sharp > 0 && holds == non_sharp, os.str()};
}

std::vector<monoid::AffineMonoid> monoid_suite() {
  using monoid::AffineMonoid;
  std::vector<AffineMonoid> out{
      AffineMonoid(1, {{1}}),
      AffineMonoid(1, {{2}, {3}}),
      AffineMonoid(2, {{1, 0}, {0, 1}}),
      AffineMonoid(2, {{2, 0}, {1, 1}, {0, 2}}),
      AffineMonoid(2, {{1, 0}, {0, 1}, {0, -1}}),
      AffineMonoid(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      AffineMonoid(3, {{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
      AffineMonoid(2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}),
      AffineMonoid(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}}),
      AffineMonoid(2, {{1, 0}, {1, 1}, {1, 2}}),
      AffineMonoid(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
      AffineMonoid(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}),
  };
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> entry(-1, 3);
  while (out.size() < 32) {
    const int d = 2 + static_cast<int>(rng() % 2);
    std::vector<monoid::IntVec> gens(2 + rng() % 3, monoid::IntVec(static_cast<std::size_t>(d)));
    for (auto& g : gens)
      for (auto& x : g) x = entry(rng);
    try {
      out.emplace_back(d, gens);
    } catch (const Error&) {
    }
  }
  return out;
}

Outcome criterion_monoids() {
  const auto suite = monoid_suite();
  std::size_t dims = 0, specs = 0, sat = 0, sections = 0, elements = 0;
  for (const auto& q : suite) {
    if (monoid::dim_chain(q) == monoid::dim_rank(q)) ++dims;
    const auto s = monoid::saturate(q);
    if (monoid::saturate(s).generators() == s.generators() && monoid::is_saturated(s)) ++sat;
    // the section needs a saturated sharpening; the saturation always has one
    const auto& base = s;
    const auto sh = monoid::sharpen(base);
    if (monoid::spec_matches_sharpening(q, monoid::sharpen(q))) ++specs;
    bool ok = true;
    try {
      const auto sec = monoid::section(base, sh);
      // every x = sum c_i g_i of Q-bar with 0 <= c_i <= 2
      std::vector<monoid::IntVec> xs{monoid::IntVec(static_cast<std::size_t>(sh.sharp.ambient_rank()), 0)};
      for (const auto& g : sh.sharp.generators()) {
        std::vector<monoid::IntVec> next;
        for (const auto& x : xs)
          for (int c = 0; c <= 2; ++c) next.push_back(monoid::add(x, monoid::scale(g, c)));
        xs = std::move(next);
      }
      for (const auto& x : xs) {
        const auto lifted = sec.apply(sh.sharp, x);
        ok = ok && base.contains(lifted) && sh.projection.apply(base, lifted) == x;
        ++elements;
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) ++sections;
  }
  const auto n = suite.size();
  std::ostringstream os;
  os << n << " fine monoids: dim_chain = dim_rank " << dims << ", Spec order isomorphism " << specs
     << ", saturation idempotent " << sat << ", section verified " << sections << " (" << elements << " elements)";
  return {n >= 10 && dims == n && specs == n && sat == n && sections == n, os.str()};
}

Outcome criterion_frobenius_twist() {
  std::size_t n = 0, holds = 0;
  std::ostringstream bad;
  for (const auto& r : reports().all()) {
    if (r["status"] == "error" || !r["checks"].contains("frobenius_twist")) continue;
    ++n;
    const auto& c = r["checks"]["frobenius_twist"];
    if (c["holds"] == true)
      ++holds;
    else
      bad << " " << stem_of(r) << "(" << c["fw_rank"] << " vs " << c["kahler_rank"] << ")";
  }
  std::ostringstream os;
  os << holds << "/" << n << " trivial-Q F_q fixtures with FW rank = Kaehler rank" << bad.str();
  return {n >= 4 && holds == n, os.str()};
}

Outcome criterion_factorization() {
  std::size_t n = 0, holds = 0;
  std::ostringstream bad;
  for (const auto& r : reports().all()) {
    if (r["status"] == "error" || !r["checks"].contains("factorization")) continue;
    ++n;
    const auto& c = r["checks"]["factorization"];
    if (c["holds"] == true)
      ++holds;
    else
      bad << " " << stem_of(r) << "(" << c["rank"] << " vs " << c["quotient_rank"] << "+" << c["gp_rank"] << ")";
  }
  std::ostringstream os;
  os << holds << "/" << n << " sharp-Q fixtures factor after killing I_alpha" << bad.str();
  return {n > 0 && holds == n, os.str()};
}

// A mutant counts as caught when it breaks the oracle comparison (2), the
// closed-point rank of the reduced presentation (5) or the factorization (8).
Outcome criterion_mutations() {
  std::size_t total = 0, equivalent = 0, caught = 0, by_oracle = 0, by_rank = 0, by_factorization = 0, fixtures = 0;
  std::ostringstream missed;
  for (const auto& f : fixture_files(kFixtures + "/oracle")) {
    const auto p = load_gf(f);
    const auto r = fwdiff::FiniteRing::from_prelog(p);
    if (r.size() > 256) continue;
    ++fixtures;
    const fwdiff::FiniteModule m(r, fwdiff::ModuleKind::ring_mod_p);
    const auto fder = fwdiff::brute_force_fder(r, p, m);
    const auto pres = fwdiff::build_presentation(p);
    const int reduced_rank = fwdiff::rank_at_closed_point(fwdiff::presentation(p));
    const bool sharp = p.monoid().is_sharp();
    std::optional<fwdiff::FactorizationCheck> fac;
    if (sharp) fac = fwdiff::factorization_check(p);
    for (const auto& mt : fwdiff::mutation_sweep(pres, p.monoid(), r, m, fder)) {
      ++total;
      if (mt.equivalent) {
        ++equivalent;
        continue;
      }
      const auto mutated = fwdiff::perturb(pres, mt.row, mt.column);
      const bool rank = fwdiff::rank_at_closed_point(mutated) != reduced_rank;
      bool factor = false;
      if (fac) {
        const auto killed = fwdiff::reduce_coefficients(mutated, prelog::ideal_I_alpha(p));
        factor = fwdiff::rank_at_closed_point(killed) != fac->quotient_rank + fac->gp_rank;
      }
      by_oracle += mt.detected;
      by_rank += rank;
      by_factorization += factor;
      if (mt.detected || rank || factor)
        ++caught;
      else
        missed << " " << f.stem().string() << "[" << mt.row << "," << mt.column << "]";
    }
  }
  const auto live = total - equivalent;
  std::ostringstream os;
  os << fixtures << " fixtures, " << total << " mutants, " << equivalent << " with unchanged relation span; caught "
     << caught << "/" << live << " (oracle " << by_oracle << ", rank " << by_rank << ", factorization "
     << by_factorization << ")";
  if (caught != live) os << "; missed" << missed.str();
  return {live > 0 && caught == live, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "axiom identities for P and P_n", 5, criterion_axioms},
      {2, "brute-force FDer equals Hom(FOmega, M)", 60, criterion_oracle},
      {3, "definition route equals FW-rank route on the corpus", 120, criterion_corpus},
      {4, "freeness and closed-point rank", 0, criterion_freeness},
      {5, "sharp-reduction invariance", 0, criterion_sharp},
      {6, "monoid suite", 10, criterion_monoids},
      {7, "Frobenius twist against Kaehler differentials", 0, criterion_frobenius_twist},
      {8, "factorization modulo I_alpha", 0, criterion_factorization},
      {9, "single-coefficient mutations are caught", 0, criterion_mutations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // the corpus run is shared; charge it to criterion 3 only
    if (c.id == 3) secs = std::max(secs, reports().corpus_seconds);
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = out.pass && in_time;
    failed += !pass;
    char timing[96];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.3f s (limit %.0f s)", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.3f s, exact", secs);
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << ": " << out.detail << " [" << timing
              << "]" << (in_time ? "" : " over time limit") << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
