#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "logfw/arith/lift.hpp"
#include "logfw/prelog/prelog.hpp"

namespace logfw::fwdiff {

template <class F>
using Poly = ring::Polynomial<F>;

enum class GenKind { wp, wvar, wbase, wlog };

struct FwGenerator {
  GenKind kind;
  int index;
  std::string label;
};

// Generator order: WP (Z_(p) only), WVar(i) per ambient variable, WBase(j) per
// t-variable of F_p(t1..tr), WLog(b) per basis vector of Q^gp.
struct FwLayout {
  bool has_wp = false;
  int nvars = 0;
  int nbase = 0;
  int nlog = 0;

  std::size_t size() const noexcept { return static_cast<std::size_t>((has_wp ? 1 : 0) + nvars + nbase + nlog); }
  std::size_t wp() const noexcept { return 0; }
  std::size_t wvar(int i) const noexcept { return static_cast<std::size_t>((has_wp ? 1 : 0) + i); }
  std::size_t wbase(int j) const noexcept { return static_cast<std::size_t>((has_wp ? 1 : 0) + nvars + j); }
  std::size_t wlog(int b) const noexcept { return static_cast<std::size_t>((has_wp ? 1 : 0) + nvars + nbase + b); }

  std::vector<FwGenerator> generators(const std::vector<std::string>& var_names,
                                      const std::vector<std::string>& base_names) const {
    std::vector<FwGenerator> out;
    if (has_wp) out.push_back({GenKind::wp, 0, "WP"});
    for (int i = 0; i < nvars; ++i) out.push_back({GenKind::wvar, i, "WVar(" + var_names[static_cast<std::size_t>(i)] + ")"});
    for (int j = 0; j < nbase; ++j) out.push_back({GenKind::wbase, j, "WBase(" + base_names[static_cast<std::size_t>(j)] + ")"});
    for (int b = 0; b < nlog; ++b) out.push_back({GenKind::wlog, b, "WLog(" + std::to_string(b + 1) + ")"});
    return out;
  }
};

enum class Provenance { ideal_generator, log_relation, base_relation };
inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ideal_generator: return "ideal-generator";
    case Provenance::log_relation: return "log-relation";
    case Provenance::base_relation: return "base-relation";
  }
  return "?";
}

// Coefficients in R/pR, reduced modulo I, one per generator.
template <class F>
struct FWElement {
  std::vector<Poly<F>> coeffs;
};

template <class F>
struct FwRow {
  FWElement<F> element;
  Provenance provenance;
  std::string label;
};

// Presentation of FOmega_(R,Q,alpha) (x) R/pR: generators modulo the rows.
template <class F>
struct FwPresentation {
  ring::PolyRing<F> ring;
  ring::Ideal<F> ideal;  // R/pR = ring / ideal
  FwLayout layout;
  std::vector<FwGenerator> generators;
  std::vector<FwRow<F>> rows;
};

template <class F>
std::vector<std::string> base_variable_names(const F& field) {
  if constexpr (std::is_same_v<F, arith::RationalFunctionField>) {
    std::vector<std::string> out;
    for (int j = 0; j < field.transcendence_degree(); ++j) out.push_back(field.polynomials().variable_name(j));
    return out;
  }
  return {};
}

template <class F>
FWElement<F> zero_element(const ring::PolyRing<F>& r, const FwLayout& layout) {
  return {std::vector<Poly<F>>(layout.size(), r.zero())};
}

// w(f) in characteristic p: w(c x^m) = x^{pm} w(c) + c^p sum_i m_i x^{p(m - e_i)} w(x_i),
// so the WVar(i) coefficient is the Frobenius twist of df/dx_i, and
// w(c) = sum_j (dc/dt_j)^p w(t_j) over F_p(t) and 0 over F_q.
template <class F>
FWElement<F> fw_expand(const ring::PolyRing<F>& r, const ring::Ideal<F>& ideal, const FwLayout& layout, const Poly<F>& f) {
  const auto p = static_cast<std::uint32_t>(r.coeffs().characteristic());
  FWElement<F> out = zero_element(r, layout);
  for (int i = 0; i < layout.nvars; ++i) out.coeffs[layout.wvar(i)] = ideal.normal_form(r.frobenius(r.partial(f, i), p));
  if constexpr (std::is_same_v<F, arith::RationalFunctionField>) {
    std::vector<std::vector<ring::Term<F>>> raw(static_cast<std::size_t>(layout.nbase));
    for (const auto& t : f.terms) {
      const auto values = arith::coeff_fw_value(r.coeffs(), t.c);
      const auto m = ring::power(t.m, p);
      for (int j = 0; j < layout.nbase; ++j)
        if (!r.coeffs().is_zero(values[static_cast<std::size_t>(j)])) raw[static_cast<std::size_t>(j)].push_back({m, values[static_cast<std::size_t>(j)]});
    }
    for (int j = 0; j < layout.nbase; ++j)
      out.coeffs[layout.wbase(j)] = ideal.normal_form(r.collect(std::move(raw[static_cast<std::size_t>(j)])));
  }
  return out;
}

// ((sum of terms)^p - sum of terms^p) / p for f over Z/p^2, as a polynomial mod p.
inline Poly<arith::GaloisField> p_sum_correction(const ring::PolyRing<arith::ZModP2>& lift, const Poly<arith::ZModP2>& f,
                                                 const ring::PolyRing<arith::GaloisField>& fiber) {
  const auto& z = lift.coeffs();
  const std::int64_t p = z.prime().value();
  std::vector<Poly<arith::ZModP2>> parts{lift.pow(f, static_cast<std::uint64_t>(p))};
  for (const auto& t : f.terms) parts.push_back(lift.neg(lift.pow(lift.monomial(t.c, t.m), static_cast<std::uint64_t>(p))));
  const auto diff = lift.sum(parts);
  std::vector<ring::Term<arith::GaloisField>> raw;
  for (const auto& t : diff.terms) {
    if (t.c % p != 0) throw InternalError("p-sum correction is not divisible by p");
    raw.push_back({t.m, fiber.coeffs().from_int(t.c / p)});
  }
  return fiber.collect(std::move(raw));
}

// w(f) for a Z_(p)-algebra: sum over terms of x^{pm} w(c) + c^p w(x^m), minus
// P~(f) w(p), with w(c) = -q_p(c) w(p).
inline FWElement<arith::GaloisField> fw_expand_mixed(const ring::PolyRing<arith::ZModP2>& lift,
                                                     const ring::PolyRing<arith::GaloisField>& fiber,
                                                     const ring::Ideal<arith::GaloisField>& ideal, const FwLayout& layout,
                                                     const Poly<arith::ZModP2>& f) {
  const auto& fp = fiber.coeffs();
  const auto p = static_cast<std::uint32_t>(fp.characteristic());
  const auto reduced = ring::reduce_mod_p(lift, f, fiber);
  FWElement<arith::GaloisField> out = zero_element(fiber, layout);
  for (int i = 0; i < layout.nvars; ++i) out.coeffs[layout.wvar(i)] = ideal.normal_form(fiber.frobenius(fiber.partial(reduced, i), p));
  std::vector<ring::Term<arith::GaloisField>> raw;
  for (const auto& t : f.terms) {
    const auto value = arith::coeff_fw_value(arith::PLocalRational::integer(t.c, lift.coeffs().prime()));
    if (value % static_cast<std::int64_t>(p) != 0) raw.push_back({ring::power(t.m, p), fp.from_int(value)});
  }
  out.coeffs[layout.wp()] = ideal.normal_form(fiber.sub(fiber.collect(std::move(raw)), p_sum_correction(lift, f, fiber)));
  return out;
}

template <class F>
FWElement<F> add_scaled_log(const ring::PolyRing<F>& r, const ring::Ideal<F>& ideal, const FwLayout& layout,
                            FWElement<F> e, const Poly<F>& factor, const monoid::IntVec& coords) {
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b] == 0) continue;
    auto& slot = e.coeffs[layout.wlog(static_cast<int>(b))];
    slot = ideal.normal_form(r.sub(slot, r.scale(factor, r.coeffs().from_int(coords[b]))));
  }
  return e;
}

// Presentation for the prelog ring as given (no sharp reduction): rows
// w(f_j) for the ideal generators and w(alpha(q)) - alpha(q)^p wlog(q) for the
// monoid generators q, wlog(q) = sum_b c_b WLog(b) in the Q^gp basis.
template <class F>
FwPresentation<F> build_presentation(const prelog::PrelogRing<F>& p) {
  const auto& pr = p.ring();
  const auto& r = pr.ring();
  const auto& ideal = pr.ideal();
  const auto& q = p.monoid();
  FwLayout layout;
  layout.has_wp = p.is_mixed();
  layout.nvars = r.nvars();
  layout.nbase = pr.p_degree();
  layout.nlog = q.gp_rank();
  FwPresentation<F> out{r, ideal, layout, layout.generators(r.names(), base_variable_names(r.coeffs())), {}};
  const auto prime = static_cast<std::uint64_t>(r.coeffs().characteristic());

  auto expand = [&](std::size_t i, bool log_value) -> FWElement<F> {
    if constexpr (std::is_same_v<F, arith::GaloisField>) {
      if (p.is_mixed()) {
        const auto& mixed = pr.mixed();
        const auto& f = log_value ? p.alpha_lift()[i] : mixed.lift_generators[i];
        return fw_expand_mixed(mixed.lift_ring, r, ideal, layout, f);
      }
    }
    return fw_expand(r, ideal, layout, log_value ? p.alpha()[i] : ideal.generators()[i]);
  };

  const std::size_t nideal = p.is_mixed() ? pr.mixed().lift_generators.size() : ideal.generators().size();
  for (std::size_t i = 0; i < nideal; ++i) {
    std::string label;
    if constexpr (std::is_same_v<F, arith::GaloisField>) {
      if (p.is_mixed()) label = "w(" + pr.mixed().lift_ring.to_string(pr.mixed().lift_generators[i]) + ")";
    }
    if (label.empty()) label = "w(" + r.to_string(ideal.generators()[i]) + ")";
    out.rows.push_back({expand(i, false), Provenance::ideal_generator, label});
  }
  for (std::size_t i = 0; i < q.generators().size(); ++i) {
    const auto alpha_p = ideal.normal_form(r.pow(p.alpha()[i], prime));
    auto row = add_scaled_log(r, ideal, layout, expand(i, true), alpha_p, q.generator_coords()[i]);
    out.rows.push_back({std::move(row), Provenance::log_relation, "wlog " + monoid::to_string(q.generators()[i])});
  }
  return out;
}

// FOmega after sharp reduction, which leaves the module unchanged.
template <class F>
FwPresentation<F> presentation(const prelog::PrelogRing<F>& p) {
  return build_presentation(prelog::sharp_reduce(p).reduced);
}

// Coefficients reduced modulo an additional ideal (e.g. I + I_alpha).
template <class F>
FwPresentation<F> reduce_coefficients(const FwPresentation<F>& m, const ring::Ideal<F>& bigger) {
  FwPresentation<F> out = m;
  out.ideal = bigger;
  for (auto& row : out.rows)
    for (auto& c : row.element.coeffs) c = bigger.normal_form(c);
  return out;
}

// Relation matrix evaluated at the closed point (constant terms).
template <class F>
ring::Matrix<F> evaluated_matrix(const FwPresentation<F>& m) {
  ring::Matrix<F> rows;
  for (const auto& row : m.rows) {
    std::vector<typename F::Element> v;
    for (const auto& c : row.element.coeffs) v.push_back(m.ring.constant_term(c));
    rows.push_back(std::move(v));
  }
  return rows;
}

// dim_k of the module tensored with k.
template <class F>
int rank_at_closed_point(const FwPresentation<F>& m) {
  const auto rows = evaluated_matrix(m);
  const std::size_t rank = rows.empty() ? 0 : ring::matrix_rank(m.ring.coeffs(), rows);
  return static_cast<int>(m.generators.size() - rank);
}

}  // namespace logfw::fwdiff
