#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "logfw/fwdiff/presentation.hpp"

namespace logfw::fwdiff {

struct DerivationCheck {
  std::uint64_t seed = 0;
  std::size_t sum_checks = 0;
  std::size_t product_checks = 0;
  std::size_t log_checks = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

template <class C>
typename C::Element random_scalar(const C& k, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<C, arith::RationalFunctionField>) {
    std::uniform_int_distribution<std::int64_t> d(0, k.characteristic() - 1);
    auto c = k.from_int(d(rng));
    for (int j = 0; j < k.transcendence_degree(); ++j) c = k.add(c, k.mul(k.from_int(d(rng)), k.variable(j)));
    // denominators 1 + u t_j + v t_j^2 put the quotient rule on the sampled path
    auto den = k.one();
    for (int j = 0; j < k.transcendence_degree(); ++j) {
      const auto t = k.variable(j);
      den = k.mul(den, k.add(k.one(), k.add(k.mul(k.from_int(d(rng)), t), k.mul(k.from_int(d(rng)), k.mul(t, t)))));
    }
    return k.div(c, den);
  } else if constexpr (std::is_same_v<C, arith::GaloisField>) {
    std::uniform_int_distribution<std::int64_t> d(0, k.order() - 1);
    std::vector<std::int64_t> digits;
    for (auto v = d(rng); v > 0; v /= k.characteristic()) digits.push_back(v % k.characteristic());
    return k.from_digits(digits);
  } else {
    std::uniform_int_distribution<std::int64_t> d(0, k.characteristic() - 1);
    return k.from_int(d(rng));
  }
}

template <class C>
ring::Polynomial<C> random_poly(const ring::PolyRing<C>& r, std::mt19937_64& rng, int terms = 3, int degree = 3) {
  std::uniform_int_distribution<int> e(0, degree);
  std::vector<ring::Term<C>> raw;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(r.nvars()));
    int budget = e(rng);
    for (auto& x : exps) {
      x = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= x;
    }
    raw.push_back({ring::Monomial::from_exponents(exps), random_scalar(r.coeffs(), rng)});
  }
  return r.collect(std::move(raw));
}

}  // namespace detail

// Checks the FW-derivation axioms for `d` (a map from the presenting ring,
// or from its lift mod p^2 for a Z_(p)-algebra, into the free module on the
// FW generators, coefficients mod I) on random samples:
//   d(a + b) = d(a) + d(b) - P(a, b) w(p),  d(ab) = b^p d(a) + a^p d(b),
// and d(alpha(q)) - alpha(q)^p wlog(q) equal to the combination of log rows
// that the product rule predicts, along random sums of generators.
template <class F, class S>
DerivationCheck verify_derivation(const prelog::PrelogRing<F>& p, const ring::PolyRing<S>& source,
                                  const std::function<FWElement<F>(const ring::Polynomial<S>&)>& d,
                                  const std::function<ring::Polynomial<F>(const ring::Polynomial<S>&)>& reduce,
                                  const std::vector<ring::Polynomial<S>>& alpha, std::uint64_t seed, std::size_t samples) {
  DerivationCheck out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const auto& r = p.ring().ring();
  const auto& ideal = p.ring().ideal();
  const auto prime = static_cast<std::uint64_t>(r.coeffs().characteristic());
  const auto pres = build_presentation(p);
  const auto& layout = pres.layout;

  auto combine = [&](std::vector<std::pair<ring::Polynomial<F>, const FWElement<F>*>> parts) {
    FWElement<F> e = zero_element(r, layout);
    for (std::size_t j = 0; j < layout.size(); ++j) {
      std::vector<ring::Polynomial<F>> terms;
      for (const auto& [c, v] : parts) terms.push_back(r.mul(c, v->coeffs[j]));
      e.coeffs[j] = ideal.normal_form(r.sum(terms));
    }
    return e;
  };
  auto equal = [&](const FWElement<F>& a, const FWElement<F>& b) {
    for (std::size_t j = 0; j < layout.size(); ++j)
      if (!r.equal(ideal.normal_form(a.coeffs[j]), ideal.normal_form(b.coeffs[j]))) return false;
    return true;
  };
  auto frob = [&](const ring::Polynomial<S>& f) { return ideal.normal_form(r.pow(reduce(f), prime)); };

  FWElement<F> wp = zero_element(r, layout);
  if (layout.has_wp) wp.coeffs[layout.wp()] = r.one();

  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = detail::random_poly(source, rng), b = detail::random_poly(source, rng);
    const auto da = d(a), db = d(b);
    auto correction = r.zero();
    if (layout.has_wp) {
      if constexpr (std::is_same_v<S, arith::ZModP2>) {
        const auto both = source.add(a, b);
        const auto diff = source.sub(source.sub(source.pow(both, prime), source.pow(a, prime)), source.pow(b, prime));
        std::vector<ring::Term<F>> raw;
        for (const auto& t : diff.terms) raw.push_back({t.m, r.coeffs().from_int(t.c / static_cast<std::int64_t>(prime))});
        correction = r.collect(std::move(raw));
      }
    }
    ++out.sum_checks;
    if (!equal(d(source.add(a, b)), combine({{r.one(), &da}, {r.one(), &db}, {r.neg(correction), &wp}})))
      out.failures.push_back("sum rule fails on a = " + source.to_string(a) + ", b = " + source.to_string(b));
    ++out.product_checks;
    if (!equal(d(source.mul(a, b)), combine({{frob(b), &da}, {frob(a), &db}})))
      out.failures.push_back("product rule fails on a = " + source.to_string(a) + ", b = " + source.to_string(b));
  }

  // log axiom along q -> q + g_i, tracking c(q) with
  // d(alpha(q)) - alpha(q)^p wlog(q) = sum_i c_i(q) row_i
  const auto& q = p.monoid();
  const std::size_t ngens = q.generators().size();
  std::vector<const FWElement<F>*> log_rows;
  for (const auto& row : pres.rows)
    if (row.provenance == Provenance::log_relation) log_rows.push_back(&row.element);
  if (ngens == 0) return out;
  std::uniform_int_distribution<std::size_t> pick(0, ngens - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    auto value = source.one();
    monoid::IntVec coords(static_cast<std::size_t>(q.gp_rank()), 0);
    std::vector<ring::Polynomial<F>> c(ngens, r.zero());
    for (int step = 0; step < 3; ++step) {
      const auto i = pick(rng);
      const auto ai = alpha[i];
      for (auto& ci : c) ci = ideal.normal_form(r.mul(frob(ai), ci));
      c[i] = ideal.normal_form(r.add(c[i], frob(value)));
      value = source.mul(value, ai);
      for (std::size_t b = 0; b < coords.size(); ++b) coords[b] += q.generator_coords()[i][b];
      ++out.log_checks;
      const auto lhs = add_scaled_log(r, ideal, layout, d(value), frob(value), coords);
      std::vector<std::pair<ring::Polynomial<F>, const FWElement<F>*>> parts;
      for (std::size_t k = 0; k < ngens; ++k) parts.push_back({c[k], log_rows[k]});
      if (!equal(lhs, combine(parts)))
        out.failures.push_back("log axiom fails at alpha(q) = " + source.to_string(value));
    }
  }
  return out;
}

// The universal FW-derivation w of the presentation.
template <class F>
DerivationCheck verify_derivation(const prelog::PrelogRing<F>& p, std::uint64_t seed = 0, std::size_t samples = 16) {
  const auto& pr = p.ring();
  const auto& r = pr.ring();
  const auto pres = build_presentation(p);
  const auto layout = pres.layout;
  if constexpr (std::is_same_v<F, arith::GaloisField>) {
    if (p.is_mixed()) {
      const auto& lift = pr.mixed().lift_ring;
      return verify_derivation<F, arith::ZModP2>(
          p, lift, [&](const auto& f) { return fw_expand_mixed(lift, r, pr.ideal(), layout, f); },
          [&](const auto& f) { return ring::reduce_mod_p(lift, f, r); }, p.alpha_lift(), seed, samples);
    }
  }
  return verify_derivation<F, F>(
      p, r, [&](const auto& f) { return fw_expand(r, pr.ideal(), layout, f); }, [](const auto& f) { return f; },
      p.alpha(), seed, samples);
}

}  // namespace logfw::fwdiff
