#pragma once

#include "logfw/fwdiff/freeness.hpp"
#include "logfw/ring/regularity.hpp"

namespace logfw::fwdiff {

// (R/I_alpha, 0, trivial) in the same coordinates.
template <class F>
prelog::PrelogRing<F> quotient_by_alpha(const prelog::PrelogRing<F>& p) {
  const auto& pr = p.ring();
  const auto& r = pr.ring();
  if constexpr (std::is_same_v<F, arith::GaloisField>) {
    if (p.is_mixed()) {
      const auto& mixed = pr.mixed();
      auto gens = mixed.lift_generators;
      for (std::size_t i = 0; i < p.alpha_lift().size(); ++i)
        if (!p.monoid().unit_generators()[i]) gens.push_back(p.alpha_lift()[i]);
      auto quotient = ring::make_mixed_ring(mixed.lift_ring, gens, std::vector<std::int64_t>(static_cast<std::size_t>(r.nvars()), 0),
                                            *p.supplied_quotient_dimension(), pr.budgets());
      return prelog::make_prelog(std::move(quotient), 0, {}, {}, {}, p.supplied_quotient_dimension());
    }
  }
  auto gens = pr.ideal().generators();
  for (const auto& a : prelog::alpha_ideal_generators(p)) gens.push_back(a);
  ring::PresentedRing<F> quotient(r, gens, std::vector<typename F::Element>(static_cast<std::size_t>(r.nvars()), r.coeffs().zero()),
                                  pr.budgets(), pr.geometrically_regular_safe());
  return prelog::make_prelog(std::move(quotient), 0, {}, {});
}

struct FactorizationCheck {
  int rank = 0;            // dim_k FOmega (x) k, coefficients taken mod I + I_alpha
  int quotient_rank = 0;   // dim_k FOmega_{R/I_alpha} (x) k
  int gp_rank = 0;         // rank Q^gp
  bool holds() const noexcept { return rank == quotient_rank + gp_rank; }
};

// FOmega (x) R/I_alpha = FOmega_{R/I_alpha} + R/I_alpha (x) Q^gp for sharp Q, compared at the closed point.
template <class F>
FactorizationCheck factorization_check(const prelog::PrelogRing<F>& p) {
  if (!p.monoid().is_sharp()) throw ValidationError("the factorization check needs a sharp monoid");
  FactorizationCheck out;
  const auto pres = build_presentation(p);
  out.rank = rank_at_closed_point(reduce_coefficients(pres, prelog::ideal_I_alpha(p)));
  out.quotient_rank = rank_at_closed_point(build_presentation(quotient_by_alpha(p)));
  out.gp_rank = p.monoid().gp_rank();
  return out;
}

struct SharpInvariance {
  int rank = 0;          // as given
  int reduced_rank = 0;  // after sharp reduction
  bool holds() const noexcept { return rank == reduced_rank; }
};

template <class F>
SharpInvariance sharp_invariance(const prelog::PrelogRing<F>& p) {
  return {rank_at_closed_point(build_presentation(p)), rank_at_closed_point(presentation(p))};
}

}  // namespace logfw::fwdiff
