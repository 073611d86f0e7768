#include "logfw/cli/instance.hpp"

#include <fstream>
#include <map>
#include <set>

#include "logfw/ring/parser.hpp"

namespace logfw::cli {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) field_error(path + key, "missing");
  return obj.at(key);
}

std::int64_t get_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& field) {
  if (!v.is_array()) field_error(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_string(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::optional<int> optional_int(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) return std::nullopt;
  return static_cast<int>(get_int(obj.at(key), path + key));
}

template <class C>
std::vector<ring::Polynomial<C>> parse_list(const ring::PolyRing<C>& r, const std::vector<std::string>& texts,
                                            const std::map<std::string, typename C::Element>& constants,
                                            const std::string& field) {
  std::vector<ring::Polynomial<C>> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(ring::parse_polynomial(r, texts[i], constants));
    } catch (const ParseError& e) {
      field_error(field + "[" + std::to_string(i) + "]", e.what());
    }
  }
  return out;
}

template <class F>
std::vector<typename F::Element> parse_point(const ring::PolyRing<F>& r, const Instance& inst,
                                             const std::map<std::string, typename F::Element>& constants) {
  std::vector<typename F::Element> out;
  const auto polys = parse_list(r, inst.point, constants, "ring.point");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!r.is_constant(polys[i])) field_error("ring.point[" + std::to_string(i) + "]", "expected a constant");
    out.push_back(r.constant_term(polys[i]));
  }
  return out;
}

template <class E>
void check_no_shadowing(const Instance& inst, const std::map<std::string, E>& constants) {
  for (const auto& v : inst.variables)
    if (constants.count(v)) field_error("ring.variables", "'" + v + "' is reserved for a base constant");
}

template <class F>
prelog::PrelogRing<F> build_over_field(const Instance& inst, const F& field,
                                       const std::map<std::string, typename F::Element>& constants,
                                       const Budgets& budgets) {
  check_no_shadowing(inst, constants);
  ring::PolyRing<F> r(field, inst.variables);
  const auto gens = parse_list(r, inst.ideal, constants, "ring.ideal");
  ring::PresentedRing<F> pr(r, gens, parse_point(r, inst, constants), budgets, inst.geometrically_regular_safe);
  if (inst.dim && *inst.dim != pr.dimension())
    field_error("ring.dim", "supplied " + std::to_string(*inst.dim) + " but the ideal has dimension " +
                                std::to_string(pr.dimension()));
  const auto alpha = parse_list(r, inst.alpha, constants, "alpha");
  return prelog::make_prelog(std::move(pr), inst.ambient_rank, inst.generators, alpha);
}

prelog::PrelogRing<arith::GaloisField> build_mixed(const Instance& inst, const Budgets& budgets) {
  const arith::Prime p(inst.base.p);
  const arith::ZModP2 z(p);
  ring::PolyRing<arith::ZModP2> lift(z, inst.variables);
  const std::map<std::string, std::int64_t> constants{{"p", p.value()}};
  check_no_shadowing(inst, constants);
  const auto gens = parse_list(lift, inst.ideal, constants, "ring.ideal");
  std::vector<std::int64_t> point;
  const auto point_polys = parse_list(lift, inst.point, constants, "ring.point");
  for (std::size_t i = 0; i < point_polys.size(); ++i) {
    if (!lift.is_constant(point_polys[i])) field_error("ring.point[" + std::to_string(i) + "]", "expected a constant");
    point.push_back(lift.constant_term(point_polys[i]));
  }
  if (point.empty()) point.assign(inst.variables.size(), 0);
  if (!inst.dim) field_error("ring.dim", "required for ZpLocal");
  if (!inst.dim_mod_I_alpha) field_error("ring.dim_mod_I_alpha", "required for ZpLocal");
  auto pr = ring::make_mixed_ring(lift, gens, point, *inst.dim, budgets);
  const auto alpha_lift = parse_list(lift, inst.alpha, constants, "alpha");
  std::vector<ring::Polynomial<arith::GaloisField>> alpha;
  for (const auto& a : alpha_lift) alpha.push_back(ring::reduce_mod_p(lift, a, pr.ring()));
  return prelog::make_prelog(std::move(pr), inst.ambient_rank, inst.generators, alpha, alpha_lift,
                             inst.dim_mod_I_alpha);
}

}  // namespace

std::string base_description(const BaseSpec& base) {
  switch (base.kind) {
    case BaseKind::fq:
      return base.m == 1 ? "F_" + std::to_string(base.p) : "F_" + std::to_string(base.p) + "^" + std::to_string(base.m);
    case BaseKind::fp_rational: {
      std::string vars = base.r == 1 ? "t" : "t1";
      for (int j = 2; j <= base.r; ++j) vars += ",t" + std::to_string(j);
      return "F_" + std::to_string(base.p) + "(" + vars + ")";
    }
    case BaseKind::zp_local:
      return "Z_(" + std::to_string(base.p) + ")";
  }
  return "?";
}

Instance parse_instance(const json& doc, const std::string& source) {
  Instance inst;
  inst.source = source;
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  static const std::set<std::string> known{"name", "tags", "base", "ring", "monoid", "alpha", "expected", "notes"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) field_error(key, "unknown field");
  inst.name = get_string(require(doc, "name", ""), "name");
  if (doc.contains("tags")) inst.tags = string_list(doc.at("tags"), "tags");

  const auto& base = require(doc, "base", "");
  const std::string kind = get_string(require(base, "kind", "base."), "base.kind");
  inst.base.p = get_int(require(base, "p", "base."), "base.p");
  if (!arith::is_prime(inst.base.p) || inst.base.p > arith::Prime::kMax) field_error("base.p", "expected a supported prime");
  if (kind == "Fq") {
    inst.base.kind = BaseKind::fq;
    inst.base.m = base.contains("m") ? static_cast<int>(get_int(base.at("m"), "base.m")) : 1;
  } else if (kind == "FpRational") {
    inst.base.kind = BaseKind::fp_rational;
    inst.base.r = base.contains("r") ? static_cast<int>(get_int(base.at("r"), "base.r")) : 1;
    if (inst.base.r < 1 || inst.base.r > 3) field_error("base.r", "expected 1..3");
  } else if (kind == "ZpLocal") {
    inst.base.kind = BaseKind::zp_local;
  } else {
    field_error("base.kind", "expected Fq, FpRational or ZpLocal");
  }

  const auto& r = require(doc, "ring", "");
  inst.variables = string_list(require(r, "variables", "ring."), "ring.variables");
  if (r.contains("ideal")) inst.ideal = string_list(r.at("ideal"), "ring.ideal");
  if (r.contains("point")) {
    const auto& pt = r.at("point");
    if (!pt.is_array()) field_error("ring.point", "expected an array");
    for (std::size_t i = 0; i < pt.size(); ++i)
      inst.point.push_back(pt[i].is_number_integer() ? std::to_string(pt[i].get<std::int64_t>())
                                                     : get_string(pt[i], "ring.point[" + std::to_string(i) + "]"));
    if (inst.point.size() != inst.variables.size()) field_error("ring.point", "length differs from ring.variables");
  }
  if (r.contains("geometrically_regular_safe")) {
    if (!r.at("geometrically_regular_safe").is_boolean()) field_error("ring.geometrically_regular_safe", "expected a boolean");
    inst.geometrically_regular_safe = r.at("geometrically_regular_safe").get<bool>();
  }
  inst.dim = optional_int(r, "dim", "ring.");
  inst.dim_mod_I_alpha = optional_int(r, "dim_mod_I_alpha", "ring.");

  const auto& m = require(doc, "monoid", "");
  inst.ambient_rank = static_cast<int>(get_int(require(m, "ambient_rank", "monoid."), "monoid.ambient_rank"));
  if (inst.ambient_rank < 0 || inst.ambient_rank > 8) field_error("monoid.ambient_rank", "expected 0..8");
  const auto& gens = require(m, "generators", "monoid.");
  if (!gens.is_array()) field_error("monoid.generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "monoid.generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array() || gens[i].size() != static_cast<std::size_t>(inst.ambient_rank))
      field_error(field, "expected " + std::to_string(inst.ambient_rank) + " integers");
    monoid::IntVec v;
    for (const auto& e : gens[i]) v.push_back(get_int(e, field));
    inst.generators.push_back(std::move(v));
  }

  const auto& alpha = doc.contains("alpha") ? doc.at("alpha") : json::object();
  if (!alpha.is_object()) field_error("alpha", "expected an object");
  for (const auto& [key, _] : alpha.items()) {
    bool valid = key.size() > 1 && key[0] == 'e' && key.find_first_not_of("0123456789", 1) == std::string::npos;
    if (valid) {
      const auto idx = std::stoul(key.substr(1));
      valid = idx >= 1 && idx <= inst.generators.size() && key == "e" + std::to_string(idx);
    }
    if (!valid) field_error("alpha." + key, "keys must be e1..e" + std::to_string(inst.generators.size()));
  }
  for (std::size_t i = 1; i <= inst.generators.size(); ++i) {
    const std::string key = "e" + std::to_string(i);
    inst.alpha.push_back(get_string(require(alpha, key, "alpha."), "alpha." + key));
  }
  if (doc.contains("expected")) {
    inst.expected = doc.at("expected");
    if (!inst.expected.is_object()) field_error("expected", "expected an object");
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_instance(doc, path);
}

AnyPrelog build_prelog(const Instance& inst, const Budgets& budgets) {
  const arith::Prime p(inst.base.p);
  switch (inst.base.kind) {
    case BaseKind::fq: {
      const arith::GaloisField field(p, inst.base.m);
      std::map<std::string, arith::GaloisField::Element> constants;
      if (inst.base.m > 1) constants["z"] = field.generator();
      return build_over_field(inst, field, constants, budgets);
    }
    case BaseKind::fp_rational: {
      const arith::RationalFunctionField field(p, inst.base.r);
      std::map<std::string, arith::RationalFunctionField::Element> constants;
      for (int j = 0; j < inst.base.r; ++j) constants[field.polynomials().variable_name(j)] = field.variable(j);
      return build_over_field(inst, field, constants, budgets);
    }
    case BaseKind::zp_local:
      return build_mixed(inst, budgets);
  }
  throw InternalError("unknown base");
}

}  // namespace logfw::cli
