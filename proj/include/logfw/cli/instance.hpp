#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "logfw/budgets.hpp"
#include "logfw/prelog/prelog.hpp"

namespace logfw::cli {

using json = nlohmann::ordered_json;

enum class BaseKind { fq, fp_rational, zp_local };

struct BaseSpec {
  BaseKind kind = BaseKind::fq;
  std::int64_t p = 2;
  int m = 1;  // F_q degree
  int r = 0;  // transcendence degree of F_p(t1..tr)
};

// Schema-checked instance file. Polynomials stay as strings until a ring is built.
struct Instance {
  std::string name;
  std::string source;  // file path or "<memory>"
  std::vector<std::string> tags;
  BaseSpec base;
  std::vector<std::string> variables;
  std::vector<std::string> ideal;
  std::vector<std::string> point;  // empty: origin
  bool geometrically_regular_safe = false;
  std::optional<int> dim;
  std::optional<int> dim_mod_I_alpha;
  int ambient_rank = 0;
  std::vector<monoid::IntVec> generators;
  std::vector<std::string> alpha;  // by generator in input order
  json expected;                   // null when absent
};

// ParseError names the offending field, e.g. "alpha.e3".
Instance parse_instance(const json& doc, const std::string& source = "<memory>");
Instance load_instance(const std::string& path);

using AnyPrelog = std::variant<prelog::PrelogRing<arith::GaloisField>, prelog::PrelogRing<arith::RationalFunctionField>>;

AnyPrelog build_prelog(const Instance& inst, const Budgets& budgets = {});

std::string base_description(const BaseSpec& base);

}  // namespace logfw::cli
