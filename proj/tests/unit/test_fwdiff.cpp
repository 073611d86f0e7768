#include <random>

#include "doctest.h"
#include "logfw/cli/instance.hpp"
#include "logfw/fwdiff/derivation.hpp"
#include "logfw/fwdiff/freeness.hpp"
#include "logfw/ring/parser.hpp"

using namespace logfw;
using namespace logfw::fwdiff;
using arith::GaloisField;
using cli::json;

namespace {

using GF = GaloisField;

template <class F = GF>
prelog::PrelogRing<F> load(const char* text) {
  return std::get<prelog::PrelogRing<F>>(cli::build_prelog(cli::parse_instance(json::parse(text))));
}

const char* kStandardN2 = R"({"name": "std", "base": {"kind": "Fq", "p": 3},
  "ring": {"variables": ["x", "y"]},
  "monoid": {"ambient_rank": 2, "generators": [[1, 0], [0, 1]]},
  "alpha": {"e1": "x", "e2": "y"}})";

const char* kXY = R"({"name": "xy", "base": {"kind": "Fq", "p": 3},
  "ring": {"variables": ["x", "y"]},
  "monoid": {"ambient_rank": 1, "generators": [[1]]},
  "alpha": {"e1": "x*y"}})";

const char* kCone = R"({"name": "cone", "base": {"kind": "Fq", "p": 3},
  "ring": {"variables": ["x", "y", "z"], "ideal": ["x*y - z^2"]},
  "monoid": {"ambient_rank": 2, "generators": [[2, 0], [1, 1], [0, 2]]},
  "alpha": {"e1": "x", "e2": "z", "e3": "y"}})";

const char* kZpLine = R"({"name": "zp line", "base": {"kind": "ZpLocal", "p": 3},
  "ring": {"variables": ["x"], "dim": 2, "dim_mod_I_alpha": 1},
  "monoid": {"ambient_rank": 1, "generators": [[1]]},
  "alpha": {"e1": "x"}})";

const char* kNonSharp = R"({"name": "n plus z", "base": {"kind": "Fq", "p": 3},
  "ring": {"variables": ["x", "u", "v"], "ideal": ["u*v - 1"], "point": [0, 1, 1]},
  "monoid": {"ambient_rank": 2, "generators": [[1, 0], [0, 1], [0, -1]]},
  "alpha": {"e1": "x*u", "e2": "u", "e3": "v"}})";

}  // namespace

TEST_CASE("fw_expand on monomials") {
  const GF f2(arith::Prime(2), 1);
  ring::PolyRing<GF> r(f2, {"x", "y"});
  ring::Ideal<GF> zero(r, {});
  FwLayout layout{false, 2, 0, 0};
  const auto wx = fw_expand(r, zero, layout, r.variable(0));
  CHECK(r.equal(wx.coeffs[0], r.one()));
  CHECK(wx.coeffs[1].is_zero());
  const auto wx2 = fw_expand(r, zero, layout, ring::parse_polynomial(r, "x^2"));
  CHECK(wx2.coeffs[0].is_zero());  // w(x^2) = 2 x^p w(x) = 0
  const auto wxy = fw_expand(r, zero, layout, ring::parse_polynomial(r, "x*y"));
  CHECK(r.equal(wxy.coeffs[0], ring::parse_polynomial(r, "y^2")));
  CHECK(r.equal(wxy.coeffs[1], ring::parse_polynomial(r, "x^2")));
}

TEST_CASE("standard log structure on the plane") {
  const auto p = load(kStandardN2);
  const auto report = prelog::validate(p);
  CHECK(report.homomorphism);
  CHECK(report.local);
  const auto pres = presentation(p);
  REQUIRE(pres.generators.size() == 4);
  CHECK(pres.generators[0].label == "WVar(x)");
  CHECK(pres.generators[3].label == "WLog(2)");
  CHECK(pres.rows.size() == 2);
  CHECK(rank_at_closed_point(pres) == 2);
  CHECK(is_free_of_rank(pres, 2).free);
  const auto def = prelog::log_regular_by_definition(p);
  CHECK(def.is_log_regular);
  CHECK(def.quotient_dimension == 0);
  const auto fw = fw_criterion_verdict(p);
  CHECK(fw.verdict.is_log_regular);
  CHECK(fw.freeness.fitting_minors_zero == std::optional<bool>(true));
}

TEST_CASE("alpha(1) = xy is not log regular") {
  const auto p = load(kXY);
  const auto pres = presentation(p);
  CHECK(pres.generators.size() == 3);
  CHECK(rank_at_closed_point(pres) == 3);
  CHECK_FALSE(is_free_of_rank(pres, 2).free);
  CHECK_FALSE(prelog::log_regular_by_definition(p).is_log_regular);
  CHECK_FALSE(prelog::log_regular_by_definition(p).regular_quotient);
  CHECK_FALSE(fw_criterion_verdict(p).verdict.is_log_regular);
}

TEST_CASE("A1 cone is log regular though R is singular") {
  const auto p = load(kCone);
  CHECK_FALSE(p.ring().regularity().regular);
  const auto def = prelog::log_regular_by_definition(p);
  CHECK(def.is_log_regular);
  CHECK(def.dimension == 2);
  CHECK(def.monoid_dimension == 2);
  const auto fw = fw_criterion_verdict(p);
  CHECK(fw.verdict.closed_point_rank == 2);
  CHECK(fw.verdict.is_log_regular);
  CHECK(fw.freeness.free);
  const auto pres = presentation(p);
  int log_rows = 0;
  for (const auto& row : pres.rows) log_rows += row.provenance == Provenance::log_relation;
  CHECK(log_rows == 3);
}

TEST_CASE("alpha must be a local homomorphism") {
  CHECK_THROWS_AS(prelog::validate(load(R"({"name": "bad", "base": {"kind": "Fq", "p": 3},
    "ring": {"variables": ["x", "y"]},
    "monoid": {"ambient_rank": 2, "generators": [[1, 0], [0, 1]]},
    "alpha": {"e1": "1 + x", "e2": "y"}})")),
                  NotLocalPrelog);
  CHECK_THROWS_AS(prelog::validate(load(R"({"name": "bad", "base": {"kind": "Fq", "p": 3},
    "ring": {"variables": ["x", "y"]},
    "monoid": {"ambient_rank": 2, "generators": [[2, 0], [1, 1], [0, 2]]},
    "alpha": {"e1": "x", "e2": "y", "e3": "x"}})")),
                  NotAHomomorphism);
}

TEST_CASE("malformed alpha keys name the field") {
  try {
    cli::parse_instance(json::parse(R"({"name": "bad", "base": {"kind": "Fq", "p": 3},
      "ring": {"variables": ["x"]}, "monoid": {"ambient_rank": 1, "generators": [[1]]},
      "alpha": {"e1": "x", "e7": "x"}})"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("alpha.e7") != std::string::npos);
  }
}

TEST_CASE("sharp reduction of N plus Z") {
  const auto p = load(kNonSharp);
  prelog::validate(p);
  const auto red = prelog::sharp_reduce(p);
  CHECK_FALSE(red.identity);
  CHECK(red.reduced.monoid().generators().size() == 1);
  CHECK(prelog::ideal_I_alpha(p).same_as(prelog::ideal_I_alpha(red.reduced)));
  const auto full = build_presentation(p);
  const auto sharp = presentation(p);
  CHECK(rank_at_closed_point(full) == rank_at_closed_point(sharp));
  CHECK(prelog::log_regular_by_definition(p).is_log_regular == fw_criterion_verdict(p).verdict.is_log_regular);
}

TEST_CASE("Z_(p) line: WP survives at the closed point") {
  const auto p = load(kZpLine);
  const auto pres = presentation(p);
  REQUIRE(pres.generators.size() == 3);
  CHECK(pres.generators[0].label == "WP");
  CHECK(rank_at_closed_point(pres) == 2);
  CHECK(prelog::log_regular_by_definition(p).is_log_regular);
  CHECK(fw_criterion_verdict(p).verdict.is_log_regular);
}

TEST_CASE("w(p) has coefficient +1 on WP") {
  const arith::Prime p(5);
  ring::PolyRing<arith::ZModP2> lift(arith::ZModP2(p), {"x"});
  ring::PolyRing<GF> fiber(GF(p, 1), {"x"});
  ring::Ideal<GF> zero(fiber, {});
  FwLayout layout{true, 1, 0, 0};
  const auto wp = fw_expand_mixed(lift, fiber, zero, layout, lift.from_int(5));
  CHECK(fiber.equal(wp.coeffs[0], fiber.one()));
  CHECK(wp.coeffs[1].is_zero());
}

TEST_CASE("property: fw_expand is additive up to the P-correction") {
  std::mt19937_64 rng(5);
  for (std::int64_t prime : {2, 3, 5}) {
    const arith::Prime p(prime);
    ring::PolyRing<arith::ZModP2> lift(arith::ZModP2(p), {"x", "y"});
    ring::PolyRing<GF> fiber(GF(p, 1), {"x", "y"});
    ring::Ideal<GF> zero(fiber, {});
    FwLayout layout{true, 2, 0, 0};
    std::uniform_int_distribution<int> coef(0, static_cast<int>(prime * prime - 1)), e(0, 2), n(1, 3);
    auto random_lift = [&] {
      std::vector<ring::Polynomial<arith::ZModP2>> parts;
      for (int i = n(rng); i > 0; --i)
        parts.push_back(lift.monomial(lift.coeffs().from_int(coef(rng)), ring::Monomial::from_exponents({e(rng), e(rng)})));
      return lift.sum(parts);
    };
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_lift(), g = random_lift();
      const auto wf = fw_expand_mixed(lift, fiber, zero, layout, f);
      const auto wg = fw_expand_mixed(lift, fiber, zero, layout, g);
      const auto wfg = fw_expand_mixed(lift, fiber, zero, layout, lift.add(f, g));
      // P(f, g) = ((f + g)^p - f^p - g^p) / p, computed on the whole polynomials
      const auto q = static_cast<std::uint64_t>(prime);
      const auto diff = lift.sub(lift.pow(lift.add(f, g), q), lift.add(lift.pow(f, q), lift.pow(g, q)));
      std::vector<ring::Term<GF>> raw;
      for (const auto& t : diff.terms) raw.push_back({t.m, fiber.coeffs().from_int(t.c / prime)});
      const auto pfg = fiber.collect(std::move(raw));
      CHECK(fiber.equal(wfg.coeffs[0], fiber.sub(fiber.add(wf.coeffs[0], wg.coeffs[0]), pfg)));
      for (int i = 1; i <= 2; ++i)
        CHECK(fiber.equal(wfg.coeffs[static_cast<std::size_t>(i)],
                          fiber.add(wf.coeffs[static_cast<std::size_t>(i)], wg.coeffs[static_cast<std::size_t>(i)])));
    }
  }
}

TEST_CASE("property: product rule for fw_expand in characteristic p") {
  std::mt19937_64 rng(9);
  const GF f9(arith::Prime(3), 2);
  ring::PolyRing<GF> r(f9, {"x", "y"});
  ring::Ideal<GF> zero(r, {});
  FwLayout layout{false, 2, 0, 0};
  std::uniform_int_distribution<int> coef(0, 8), e(0, 2), n(1, 3);
  auto random_poly = [&] {
    std::vector<ring::Polynomial<GF>> parts;
    for (int i = n(rng); i > 0; --i)
      parts.push_back(r.monomial(static_cast<GF::Element>(coef(rng)), ring::Monomial::from_exponents({e(rng), e(rng)})));
    return r.sum(parts);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(), b = random_poly();
    const auto wab = fw_expand(r, zero, layout, r.mul(a, b));
    const auto wa = fw_expand(r, zero, layout, a), wb = fw_expand(r, zero, layout, b);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(r.equal(wab.coeffs[i], r.add(r.mul(r.pow(b, 3), wa.coeffs[i]), r.mul(r.pow(a, 3), wb.coeffs[i]))));
  }
}

TEST_CASE("F_p(t) base adds the WBase block") {
  const auto p = load<arith::RationalFunctionField>(R"({"name": "fpt", "base": {"kind": "FpRational", "p": 3, "r": 1},
    "ring": {"variables": ["x", "y"], "ideal": ["y^2 - t*x"], "point": [0, 0], "geometrically_regular_safe": true},
    "monoid": {"ambient_rank": 1, "generators": [[1]]},
    "alpha": {"e1": "y"}})");
  const auto pres = presentation(p);
  REQUIRE(pres.generators.size() == 4);
  CHECK(pres.generators[2].label == "WBase(t)");
  const auto fw = fw_criterion_verdict(p);
  CHECK(fw.verdict.target_rank == 2);
  const auto def = prelog::log_regular_by_definition(p);
  CHECK(def.is_log_regular == fw.verdict.is_log_regular);
}

TEST_CASE("universal derivation satisfies the FW axioms") {
  for (const char* text : {kStandardN2, kXY, kCone, kNonSharp, kZpLine}) {
    const auto p = load(text);
    for (std::uint64_t seed : {0u, 1u, 7u}) {
      const auto check = verify_derivation(p, seed, 12);
      CAPTURE(text);
      CHECK(check.ok());
      CHECK(check.product_checks == 12);
      CHECK(check.log_checks == 36);
    }
  }
  const auto rational = load<arith::RationalFunctionField>(R"({"name": "t", "base": {"kind": "FpRational", "p": 3},
    "ring": {"variables": ["x", "y"], "ideal": ["y^2 - t*x"], "geometrically_regular_safe": true},
    "monoid": {"ambient_rank": 1, "generators": [[1]]}, "alpha": {"e1": "y"}})");
  CHECK(verify_derivation(rational, 3, 10).ok());
}

TEST_CASE("a perturbed derivation is rejected") {
  const auto p = load(kCone);
  const auto& r = p.ring().ring();
  const auto layout = build_presentation(p).layout;
  // D'(f) = w(f) + f(0) w(x)
  const std::function<FWElement<GF>(const Poly<GF>&)> bad = [&](const Poly<GF>& f) {
    auto e = fw_expand(r, p.ring().ideal(), layout, f);
    e.coeffs[layout.wvar(0)] = r.add(e.coeffs[layout.wvar(0)], r.constant(r.constant_term(f)));
    return e;
  };
  const std::function<Poly<GF>(const Poly<GF>&)> id = [](const Poly<GF>& f) { return f; };
  const auto check = verify_derivation<GF, GF>(p, r, bad, id, p.alpha(), 0, 12);
  CHECK_FALSE(check.ok());
}

TEST_CASE("the zero map is a derivation for trivial Q") {
  const auto p = load(R"({"name": "plane", "base": {"kind": "Fq", "p": 5},
    "ring": {"variables": ["x", "y"]}, "monoid": {"ambient_rank": 0, "generators": []}, "alpha": {}})");
  const auto& r = p.ring().ring();
  const auto layout = build_presentation(p).layout;
  const std::function<FWElement<GF>(const Poly<GF>&)> zero = [&](const Poly<GF>&) { return zero_element(r, layout); };
  const std::function<Poly<GF>(const Poly<GF>&)> id = [](const Poly<GF>& f) { return f; };
  const auto check = verify_derivation<GF, GF>(p, r, zero, id, p.alpha(), 5, 12);
  CHECK(check.ok());
  CHECK(check.log_checks == 0);
}

TEST_CASE("F_p(t) samples carry denominators and the quotient rule holds") {
  using RF = arith::RationalFunctionField;
  const auto p = load<RF>(R"({"name": "t", "base": {"kind": "FpRational", "p": 3, "r": 1},
    "ring": {"variables": ["x"], "geometrically_regular_safe": true},
    "monoid": {"ambient_rank": 1, "generators": [[1]]}, "alpha": {"e1": "x"}})");
  const auto& k = p.ring().ring().coeffs();
  std::mt19937_64 rng(4);
  bool saw_denominator = false;
  for (int i = 0; i < 20; ++i) saw_denominator = saw_denominator || !(detail::random_scalar(k, rng).den == k.one().den);
  CHECK(saw_denominator);
  for (std::uint64_t seed : {0u, 9u}) CHECK(verify_derivation(p, seed, 10).ok());
  // two parameters: multivariate fractions grow fast, so only a few samples
  const auto p2 = load<RF>(R"({"name": "t1 t2", "base": {"kind": "FpRational", "p": 2, "r": 2},
    "ring": {"variables": ["x"], "geometrically_regular_safe": true},
    "monoid": {"ambient_rank": 1, "generators": [[1]]}, "alpha": {"e1": "x"}})");
  CHECK(verify_derivation(p2, 1, 2).ok());

  // D'(f) = w(f) + f(0) w(t_1)
  const auto& r = p.ring().ring();
  const auto layout = build_presentation(p).layout;
  const std::function<FWElement<RF>(const Poly<RF>&)> bad = [&](const Poly<RF>& f) {
    auto e = fw_expand(r, p.ring().ideal(), layout, f);
    e.coeffs[layout.wbase(0)] = r.add(e.coeffs[layout.wbase(0)], r.constant(r.constant_term(f)));
    return e;
  };
  const std::function<Poly<RF>(const Poly<RF>&)> id = [](const Poly<RF>& f) { return f; };
  CHECK_FALSE(verify_derivation<RF, RF>(p, r, bad, id, p.alpha(), 0, 12).ok());
}
