#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "logfw/monoid/operations.hpp"
#include "logfw/ring/presented_ring.hpp"
#include "logfw/ring/toric.hpp"

namespace logfw::prelog {

using monoid::IntVec;

// (R, Q, alpha) with alpha given on the sorted generators of Q, as
// polynomials in the coordinates centred at the point of R. For Z_(p)-algebras
// the values are also kept mod p^2 (alpha_lift); alpha itself is their fiber.
template <class F>
class PrelogRing {
 public:
  using Poly = ring::Polynomial<F>;
  using LiftPoly = ring::Polynomial<arith::ZModP2>;

  PrelogRing(ring::PresentedRing<F> r, monoid::AffineMonoid q, std::vector<Poly> alpha,
             std::vector<LiftPoly> alpha_lift = {}, std::optional<int> quotient_dimension = std::nullopt)
      : ring_(std::move(r)),
        q_(std::move(q)),
        alpha_(std::move(alpha)),
        alpha_lift_(std::move(alpha_lift)),
        quotient_dimension_(quotient_dimension) {
    if (alpha_.size() != q_.generators().size()) throw InternalError("alpha does not match the generators");
    if (ring_.is_mixed() && alpha_lift_.size() != alpha_.size())
      throw InternalError("a Z_(p)-algebra needs alpha mod p^2");
    if (ring_.is_mixed() && !quotient_dimension_)
      throw ValidationError("a Z_(p)-algebra needs the supplied dimension of R/I_alpha");
  }

  const ring::PresentedRing<F>& ring() const noexcept { return ring_; }
  const monoid::AffineMonoid& monoid() const noexcept { return q_; }
  const std::vector<Poly>& alpha() const noexcept { return alpha_; }
  const std::vector<LiftPoly>& alpha_lift() const noexcept { return alpha_lift_; }
  bool is_mixed() const noexcept { return ring_.is_mixed(); }
  std::optional<int> supplied_quotient_dimension() const noexcept { return quotient_dimension_; }

  // alpha(v) = prod alpha(g_i)^{n_i} for a witness n of v, reduced modulo I.
  Poly alpha_of(const IntVec& v) const {
    const auto w = q_.witness(v);
    if (!w) throw ValidationError(monoid::to_string(v) + " is not in Q");
    const auto& r = ring_.ring();
    Poly out = r.one();
    for (std::size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] > 0) out = ring_.ideal().normal_form(r.mul(out, r.pow(alpha_[i], static_cast<std::uint64_t>((*w)[i]))));
    return out;
  }
  LiftPoly alpha_lift_of(const IntVec& v) const {
    const auto w = q_.witness(v);
    if (!w) throw ValidationError(monoid::to_string(v) + " is not in Q");
    const auto& r = ring_.mixed().lift_ring;
    LiftPoly out = r.one();
    for (std::size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] > 0) out = r.mul(out, r.pow(alpha_lift_[i], static_cast<std::uint64_t>((*w)[i])));
    return out;
  }

 private:
  ring::PresentedRing<F> ring_;
  monoid::AffineMonoid q_;
  std::vector<Poly> alpha_;
  std::vector<LiftPoly> alpha_lift_;
  std::optional<int> quotient_dimension_;
};

// Builds a prelog ring from generators in input order (keys e1..em) and alpha
// values in the original coordinates. Repeated generators must carry equal
// values modulo I, and a zero generator must map to 1.
template <class F>
PrelogRing<F> make_prelog(ring::PresentedRing<F> r, int ambient_rank, const std::vector<IntVec>& input_generators,
                          const std::vector<ring::Polynomial<F>>& input_alpha,
                          const std::vector<ring::Polynomial<arith::ZModP2>>& input_alpha_lift = {},
                          std::optional<int> quotient_dimension = std::nullopt) {
  if (input_alpha.size() != input_generators.size()) throw ValidationError("alpha must be given on every generator");
  monoid::AffineMonoid q(ambient_rank, input_generators, r.budgets());
  const auto& gens = q.generators();
  const auto& pr = r.ring();
  std::vector<std::optional<ring::Polynomial<F>>> alpha(gens.size());
  std::vector<ring::Polynomial<arith::ZModP2>> lift(r.is_mixed() ? gens.size() : 0);
  for (std::size_t j = 0; j < input_generators.size(); ++j) {
    const auto value = r.to_local(input_alpha[j]);
    const std::string key = "e" + std::to_string(j + 1);
    if (monoid::is_zero(input_generators[j])) {
      if (!r.ideal().contains(pr.sub(value, pr.one())))
        throw NotAHomomorphism(key + " is the zero vector but alpha(" + key + ") is not 1");
      continue;
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), input_generators[j]) - gens.begin());
    if (alpha[pos]) {
      if (!r.ideal().contains(pr.sub(*alpha[pos], value)))
        throw NotAHomomorphism(key + " repeats a generator with a different alpha value");
      continue;
    }
    alpha[pos] = r.ideal().normal_form(value);
    if (r.is_mixed()) {
      lift[pos] = ring::recenter(r.mixed().lift_ring, input_alpha_lift.at(j), r.mixed().point);
    }
  }
  std::vector<ring::Polynomial<F>> values;
  for (auto& a : alpha) values.push_back(std::move(*a));
  return PrelogRing<F>(std::move(r), std::move(q), std::move(values), std::move(lift), quotient_dimension);
}

struct ValidationReport {
  bool homomorphism = false;
  bool local = false;
  std::string locality_scope;  // "generators" or "generators+hilbert_basis"
  std::vector<std::string> notes;
};

// alpha is a homomorphism: every binomial of the toric ideal of Q (they
// generate the congruence of relations among generators) maps into I. Local:
// alpha(g) is a unit at the point exactly for the unit generators g. A product
// in a local ring is a unit iff each factor is, so the generator check covers
// all of Q; Hilbert basis elements lying in Q are re-checked within budget.
template <class F>
ValidationReport validate(const PrelogRing<F>& p) {
  ValidationReport out;
  const auto& r = p.ring();
  const auto& pr = r.ring();
  const auto& k = pr.coeffs();
  const auto& q = p.monoid();
  const auto toric = ring::toric_ideal(q, k, r.budgets());
  for (const auto& b : toric.groebner()) {
    const auto image = toric.ring().substitute(b, pr, p.alpha(), [](const auto& c) { return c; });
    if (!r.ideal().contains(image))
      throw NotAHomomorphism("the relation " + toric.ring().to_string(b) + " among generators is not respected by alpha");
  }
  out.homomorphism = true;
  if (r.is_mixed()) out.notes.push_back("homomorphism checked modulo p");

  auto unit_at_point = [&](const ring::Polynomial<F>& f) { return !k.is_zero(pr.constant_term(f)); };
  for (std::size_t i = 0; i < q.generators().size(); ++i) {
    const bool unit = unit_at_point(p.alpha()[i]);
    if (unit != q.unit_generators()[i])
      throw NotLocalPrelog("alpha(" + monoid::to_string(q.generators()[i]) + ") is " + (unit ? "" : "not ") +
                           "a unit but the generator is " + (q.unit_generators()[i] ? "" : "not ") + "a unit of Q");
  }
  out.local = true;
  out.locality_scope = "generators";
  try {
    for (const auto& h : monoid::hilbert_basis(q)) {
      if (!q.contains(h)) continue;
      if (unit_at_point(p.alpha_of(h)) != q.is_unit(h))
        throw NotLocalPrelog("alpha(" + monoid::to_string(h) + ") violates alpha^{-1}(R^x) = Q^x");
    }
    out.locality_scope = "generators+hilbert_basis";
  } catch (const SearchBudgetExceeded&) {
    out.notes.push_back("locality checked on generators only: Hilbert basis check exceeded its budget");
  } catch (const Unsupported&) {
    out.notes.push_back("locality checked on generators only: Hilbert basis out of range");
  }
  return out;
}

// alpha of the non-unit generators; with I they generate the ideal whose
// quotient is R/I_alpha (every element of Q^+ involves a non-unit generator).
template <class F>
std::vector<ring::Polynomial<F>> alpha_ideal_generators(const PrelogRing<F>& p) {
  std::vector<ring::Polynomial<F>> out;
  for (std::size_t i = 0; i < p.alpha().size(); ++i)
    if (!p.monoid().unit_generators()[i] && !p.alpha()[i].is_zero()) out.push_back(p.alpha()[i]);
  return out;
}

// I + I_alpha in the ambient polynomial ring.
template <class F>
ring::Ideal<F> ideal_I_alpha(const PrelogRing<F>& p) {
  return p.ring().ideal().plus(alpha_ideal_generators(p));
}

template <class F>
struct SharpReduction {
  PrelogRing<F> reduced;
  monoid::Sharpening sharpening;
  monoid::MonoidHom section;
  bool identity = false;
};

// (R, Q-bar, alpha o s) for a section s of Q -> Q-bar. The ideals I_alpha and
// I_{alpha s} are compared through their reduced Groebner bases.
template <class F>
SharpReduction<F> sharp_reduce(const PrelogRing<F>& p) {
  const auto& q = p.monoid();
  auto sh = monoid::sharpen(q);
  auto s = monoid::section(q, sh);
  if (q.is_sharp())
    return {p, std::move(sh), std::move(s), true};
  std::vector<ring::Polynomial<F>> alpha;
  std::vector<ring::Polynomial<arith::ZModP2>> lift;
  for (const auto& image : s.generator_images) {
    alpha.push_back(p.alpha_of(image));
    if (p.is_mixed()) lift.push_back(p.alpha_lift_of(image));
  }
  PrelogRing<F> reduced(p.ring(), sh.sharp, std::move(alpha), std::move(lift), p.supplied_quotient_dimension());
  if (!ideal_I_alpha(p).same_as(ideal_I_alpha(reduced)))
    throw InternalError("I_alpha changed under sharp reduction");
  return {std::move(reduced), std::move(sh), std::move(s), false};
}

enum class Route { definition, fw_rank, fw_free };
inline const char* route_name(Route r) {
  switch (r) {
    case Route::definition: return "definition";
    case Route::fw_rank: return "fw_rank";
    case Route::fw_free: return "fw_free";
  }
  return "?";
}

struct LogRegularityVerdict {
  Route route = Route::definition;
  int dimension = 0;           // dim R
  int monoid_dimension = 0;    // dim Q
  // definition route
  int quotient_dimension = 0;  // dim R/I_alpha
  int quotient_embedding_dimension = 0;
  bool regular_quotient = false;
  // FW routes
  int p_degree = 0;     // r
  int target_rank = 0;  // dim R + r
  int closed_point_rank = 0;
  std::optional<bool> free_of_target_rank;
  bool is_log_regular = false;
};

// Definition: R/I_alpha regular and dim R = dim R/I_alpha + dim Q.
template <class F>
LogRegularityVerdict log_regular_by_definition(const PrelogRing<F>& p) {
  LogRegularityVerdict v;
  v.route = Route::definition;
  const auto& r = p.ring();
  if constexpr (std::is_same_v<F, arith::RationalFunctionField>) {
    if (!r.geometrically_regular_safe())
      throw ImperfectBaseUnsupported("regularity of R/I_alpha over F_p(t) needs geometrically_regular_safe");
  }
  v.dimension = r.dimension();
  v.monoid_dimension = monoid::dim_rank(p.monoid());
  const auto quotient = ideal_I_alpha(p);
  const int fiber_dim = ring::ideal_dimension(quotient);
  if (fiber_dim < 0) throw ValidationError("I_alpha is the unit ideal");
  if (p.is_mixed()) {
    v.quotient_dimension = *p.supplied_quotient_dimension();
    if (v.quotient_dimension != fiber_dim && v.quotient_dimension != fiber_dim + 1)
      throw ValidationError("supplied dim R/I_alpha = " + std::to_string(v.quotient_dimension) +
                            " is incompatible with the fiber dimension " + std::to_string(fiber_dim));
    auto gens = r.mixed().lift_generators;
    for (std::size_t i = 0; i < p.alpha_lift().size(); ++i)
      if (!p.monoid().unit_generators()[i]) gens.push_back(p.alpha_lift()[i]);
    v.quotient_embedding_dimension = ring::mixed_embedding_dimension(r.mixed().lift_ring, gens);
  } else {
    v.quotient_dimension = fiber_dim;
    v.quotient_embedding_dimension = ring::embedding_dimension(r.ring(), quotient.generators());
  }
  v.regular_quotient = v.quotient_dimension == v.quotient_embedding_dimension;
  v.is_log_regular = v.regular_quotient && v.dimension == v.quotient_dimension + v.monoid_dimension;
  return v;
}

}  // namespace logfw::prelog
