#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "logfw/fwdiff/presentation.hpp"

namespace logfw::fwdiff {

struct FreenessResult {
  int target_rank = 0;
  int closed_point_rank = 0;
  bool fitting_top_is_unit = false;              // Fitt_rho = (1) at the point
  bool eliminated_remainder_zero = false;        // remainder after unit pivots vanishes mod I
  std::optional<bool> fitting_minors_zero;       // Fitt_{rho-1} = 0 by symbolic minors, if within budget
  std::size_t minors_evaluated = 0;
  bool free = false;
  std::vector<std::string> notes;
};

namespace detail {

template <class F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

template <class F>
PolyMatrix<F> coefficient_matrix(const FwPresentation<F>& m) {
  PolyMatrix<F> a;
  for (const auto& row : m.rows) a.push_back(row.element.coeffs);
  return a;
}

// Fraction-free elimination with pivots that are units at the point (nonzero
// constant term), first nonzero pivot in generator order. Returns the number
// of pivots and leaves the remaining block in `a`.
template <class F>
std::size_t eliminate_unit_pivots(const FwPresentation<F>& m, PolyMatrix<F>& a) {
  const auto& r = m.ring;
  const auto& k = r.coeffs();
  std::size_t pivots = 0;
  for (;;) {
    std::size_t pi = a.size(), pj = 0;
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    for (std::size_t j = 0; j < cols && pi == a.size(); ++j)
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!k.is_zero(r.constant_term(a[i][j]))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == a.size()) return pivots;
    const auto pivot_row = a[pi];
    const auto pivot = pivot_row[pj];
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(pi));
    for (auto& row : a) {
      const auto factor = row[pj];
      for (std::size_t j = 0; j < cols; ++j)
        row[j] = m.ideal.normal_form(r.sub(r.mul(pivot, row[j]), r.mul(factor, pivot_row[j])));
    }
    for (auto& row : a) row.erase(row.begin() + static_cast<std::ptrdiff_t>(pj));
    ++pivots;
  }
}

// Whether every s x s minor vanishes modulo I, by Laplace expansion with
// memoized subdeterminants. Stops at the first nonzero minor.
template <class F>
std::optional<bool> all_minors_zero(const FwPresentation<F>& m, const PolyMatrix<F>& a, std::size_t s,
                                    std::size_t budget, std::size_t& evaluated) {
  const std::size_t rows = a.size(), cols = rows ? a.front().size() : 0;
  if (s == 0) return false;
  if (s > rows || s > cols) return true;
  if (rows > 31 || cols > 31) return std::nullopt;
  const auto& r = m.ring;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly<F>> memo;
  std::function<Poly<F>(std::uint32_t, std::uint32_t)> det = [&](std::uint32_t rm, std::uint32_t cm) -> Poly<F> {
    if (rm == 0) return r.one();
    const auto key = std::make_pair(rm, cm);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (++evaluated > budget) throw BudgetExceeded("Fitting minor budget exhausted");
    const int r0 = __builtin_ctz(rm);
    std::vector<Poly<F>> parts;
    int sign = 1;
    for (std::uint32_t rest = cm; rest; rest &= rest - 1) {
      const int c = __builtin_ctz(rest);
      const auto& entry = a[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c)];
      if (!entry.is_zero()) {
        auto sub = det(rm & (rm - 1), cm & ~(1u << c));
        if (!sub.is_zero()) {
          auto term = r.mul(entry, sub);
          parts.push_back(sign > 0 ? term : r.neg(term));
        }
      }
      sign = -sign;
    }
    auto value = m.ideal.normal_form(r.sum(parts));
    memo.emplace(key, value);
    return value;
  };
  bool all_zero = true;
  auto for_each_mask = [](std::size_t n, std::size_t k, auto&& fn) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (static_cast<std::size_t>(__builtin_popcount(mask)) == k && !fn(mask)) return;
  };
  try {
    for_each_mask(rows, s, [&](std::uint32_t rm) {
      for_each_mask(cols, s, [&](std::uint32_t cm) {
        if (!det(rm, cm).is_zero()) all_zero = false;
        return all_zero;
      });
      return all_zero;
    });
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  return all_zero;
}

}  // namespace detail

// Free of rank rho locally at the point, over R/pR, via Fitting ideals:
// Fitt_rho = (1) iff some (g - rho)-minor is a unit at the point, i.e. the
// evaluated matrix has rank >= g - rho; Fitt_{rho-1} = 0 by symbolic
// (g - rho + 1)-minors when within budget, and by the remainder after
// eliminating unit pivots (which presents the same module locally).
template <class F>
FreenessResult is_free_of_rank(const FwPresentation<F>& m, int rho, const Budgets& budgets = {}) {
  FreenessResult out;
  out.target_rank = rho;
  out.closed_point_rank = rank_at_closed_point(m);
  const int g = static_cast<int>(m.generators.size());
  if (rho < 0 || rho > g) {
    out.notes.push_back("target rank outside [0, #generators]");
    return out;
  }
  const int need = g - rho;
  const int evaluated = g - out.closed_point_rank;
  out.fitting_top_is_unit = evaluated >= need;
  if (evaluated != need) {
    // either Fitt_rho != (1), or Fitt_{rho-1} contains a unit
    out.fitting_minors_zero = false;
    return out;
  }
  auto a = detail::coefficient_matrix(m);
  const auto pivots = detail::eliminate_unit_pivots(m, a);
  if (static_cast<int>(pivots) != need) throw InternalError("unit pivot count differs from the evaluated rank");
  out.eliminated_remainder_zero = true;
  for (const auto& row : a)
    for (const auto& c : row) out.eliminated_remainder_zero = out.eliminated_remainder_zero && c.is_zero();
  out.fitting_minors_zero = detail::all_minors_zero(m, detail::coefficient_matrix(m), static_cast<std::size_t>(need + 1),
                                                    budgets.fitting_minors, out.minors_evaluated);
  if (!out.fitting_minors_zero) out.notes.push_back("Fitting minors skipped: budget exhausted");
  else if (*out.fitting_minors_zero != out.eliminated_remainder_zero)
    out.notes.push_back("minors and local elimination disagree away from the point");
  out.free = out.fitting_top_is_unit && out.eliminated_remainder_zero;
  return out;
}

template <class F>
struct FwCriterionResult {
  prelog::LogRegularityVerdict verdict;
  FreenessResult freeness;
  FwPresentation<F> presentation;
};

// Condition (2): dim_k FOmega (x) k = dim R + r; condition (1) recorded alongside.
template <class F>
FwCriterionResult<F> fw_criterion_verdict(const prelog::PrelogRing<F>& p) {
  prelog::LogRegularityVerdict v;
  v.route = prelog::Route::fw_rank;
  v.dimension = p.ring().dimension();
  v.monoid_dimension = monoid::dim_rank(p.monoid());
  v.p_degree = p.ring().p_degree();
  v.target_rank = v.dimension + v.p_degree;
  auto pres = presentation(p);
  v.closed_point_rank = rank_at_closed_point(pres);
  auto freeness = is_free_of_rank(pres, v.target_rank, p.ring().budgets());
  v.free_of_target_rank = freeness.free;
  v.is_log_regular = v.closed_point_rank == v.target_rank;
  return {v, std::move(freeness), std::move(pres)};
}

}  // namespace logfw::fwdiff
