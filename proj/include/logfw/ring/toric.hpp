#pragma once

#include <string>
#include <vector>

#include "logfw/monoid/affine_monoid.hpp"
#include "logfw/ring/groebner.hpp"

namespace logfw::ring {

// Variable names y1..ym for the generators of Q in their sorted order.
inline std::vector<std::string> toric_variable_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

// Binomial y^{u+} - y^{u-} for an integer relation u.
template <class F>
Polynomial<F> relation_binomial(const PolyRing<F>& ring, const monoid::IntVec& u, int offset = 0) {
  std::vector<int> plus(static_cast<std::size_t>(ring.nvars()), 0), minus = plus;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) plus[i + static_cast<std::size_t>(offset)] = static_cast<int>(u[i]);
    if (u[i] < 0) minus[i + static_cast<std::size_t>(offset)] = static_cast<int>(-u[i]);
  }
  const auto& k = ring.coeffs();
  return ring.sub(ring.monomial(k.one(), Monomial::from_exponents(plus)),
                  ring.monomial(k.one(), Monomial::from_exponents(minus)));
}

// Integer relations among the generators: u in Z^m with sum u_i g_i = 0.
inline monoid::IntMat generator_relations(const monoid::AffineMonoid& q) {
  const auto& gens = q.generators();
  const auto d = static_cast<std::size_t>(q.ambient_rank());
  monoid::IntMat a(d, monoid::IntVec(gens.size(), 0));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t r = 0; r < d; ++r) a[r][i] = gens[i][r];
  if (gens.empty()) return {};
  if (d == 0) return monoid::integer_kernel({}, gens.size());
  return monoid::integer_kernel(a, gens.size());
}

// Kernel of k[y1..ym] -> k[Q], y_i -> chi^{g_i}: the lattice ideal of the
// generator relations saturated by y1...ym, computed by eliminating t from
// (lattice binomials, 1 - t*y1*...*ym).
template <class F>
Ideal<F> toric_ideal(const monoid::AffineMonoid& q, const F& coeffs, const Budgets& budgets = {}) {
  const std::size_t m = q.generators().size();
  PolyRing<F> target(coeffs, toric_variable_names(m));
  const auto relations = generator_relations(q);
  if (relations.empty()) return Ideal<F>(target, {}, budgets);
  if (m + 1 > static_cast<std::size_t>(kMaxVars)) throw Unsupported("too many monoid generators for the toric ideal");

  std::vector<std::string> names{"t_"};
  for (const auto& n : target.names()) names.push_back(n);
  PolyRing<F> big(coeffs, names, MonomialOrder::eliminate_first);
  std::vector<Polynomial<F>> gens;
  for (const auto& u : relations) gens.push_back(relation_binomial(big, u, 1));
  Polynomial<F> prod = big.variable(0);
  for (std::size_t i = 1; i <= m; ++i) prod = big.mul(prod, big.variable(static_cast<int>(i)));
  gens.push_back(big.sub(big.one(), prod));

  std::vector<Polynomial<F>> eliminated;
  std::vector<Polynomial<F>> to_target(m + 1);
  to_target[0] = target.zero();
  for (std::size_t i = 1; i <= m; ++i) to_target[i] = target.variable(static_cast<int>(i - 1));
  for (const auto& g : groebner_basis(big, gens, budgets)) {
    bool has_t = false;
    for (const auto& t : g.terms) has_t = has_t || t.m[0] > 0;
    if (!has_t) eliminated.push_back(big.substitute(g, target, to_target, [](const auto& c) { return c; }));
  }
  return Ideal<F>(target, std::move(eliminated), budgets);
}

}  // namespace logfw::ring
