#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "logfw/arith/galois_field.hpp"
#include "logfw/arith/lift.hpp"
#include "logfw/arith/rational_function.hpp"
#include "logfw/ring/regularity.hpp"

namespace logfw::ring {

// Z_(p)-algebra data. Ideal generators are kept mod p^2 (enough for the
// embedding dimension at (p, x) and for Witt-vector corrections); Krull
// dimensions cannot be computed from the fiber alone and are supplied.
struct MixedCharacteristic {
  PolyRing<arith::ZModP2> lift_ring;
  std::vector<Polynomial<arith::ZModP2>> lift_generators;  // recentred at the point
  std::vector<std::int64_t> point;                         // integer coordinates of the point
  int dimension = 0;
};

inline Polynomial<arith::GaloisField> reduce_mod_p(const PolyRing<arith::ZModP2>& source,
                                                   const Polynomial<arith::ZModP2>& f,
                                                   const PolyRing<arith::GaloisField>& fiber) {
  const auto& fp = fiber.coeffs();
  return source.map_coefficients(f, fiber, [&](std::int64_t c) { return fp.from_int(c); });
}

// x -> x + a for every variable.
template <class C>
Polynomial<C> recenter(const PolyRing<C>& ring, const Polynomial<C>& f, const std::vector<typename C::Element>& point) {
  std::vector<Polynomial<C>> images;
  for (int i = 0; i < ring.nvars(); ++i)
    images.push_back(ring.add(ring.variable(i), ring.constant(point[static_cast<std::size_t>(i)])));
  return ring.substitute(f, images);
}

// k[x]/I localized at a rational point. Polynomials are stored recentred so
// the point is the origin; the residue field is the coefficient field F (F_p
// for Z_(p)-algebras, whose fiber R/pR is carried as the ideal).
template <class F>
class PresentedRing {
 public:
  using Poly = Polynomial<F>;
  using Elem = typename F::Element;

  // `generators` are given in the original coordinates.
  PresentedRing(PolyRing<F> ring, const std::vector<Poly>& generators, std::vector<Elem> point, Budgets budgets = {},
                bool geometrically_regular_safe = false)
      : ring_(std::move(ring)),
        point_(std::move(point)),
        ideal_(ring_, {}, budgets),
        budgets_(budgets),
        geometrically_regular_safe_(geometrically_regular_safe) {
    if (point_.empty()) point_.assign(static_cast<std::size_t>(ring_.nvars()), ring_.coeffs().zero());
    if (static_cast<int>(point_.size()) != ring_.nvars())
      throw ValidationError("the point has " + std::to_string(point_.size()) + " coordinates, expected " +
                            std::to_string(ring_.nvars()));
    std::vector<Poly> moved;
    for (const auto& g : generators) {
      Poly h = to_local(g);
      if (!ring_.coeffs().is_zero(ring_.constant_term(h)))
        throw ValidationError("the point does not lie on V(I): " + ring_.to_string(g) + " does not vanish there");
      if (!h.is_zero()) moved.push_back(std::move(h));
    }
    ideal_ = Ideal<F>(ring_, std::move(moved), budgets_);
  }

  const PolyRing<F>& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_.coeffs(); }
  const Ideal<F>& ideal() const noexcept { return ideal_; }
  const std::vector<Elem>& point() const noexcept { return point_; }
  const Budgets& budgets() const noexcept { return budgets_; }
  bool geometrically_regular_safe() const noexcept { return geometrically_regular_safe_; }

  // Original coordinates -> coordinates centred at the point.
  Poly to_local(const Poly& f) const { return recenter(ring_, f, point_); }

  // r with [k : k^p] = p^r.
  int p_degree() const {
    if constexpr (std::is_same_v<F, arith::RationalFunctionField>) return ring_.coeffs().transcendence_degree();
    return 0;
  }

  void attach_mixed(MixedCharacteristic mixed) {
    const auto fiber_dim = ideal_dimension(ideal_);
    if (mixed.dimension != fiber_dim && mixed.dimension != fiber_dim + 1)
      throw ValidationError("supplied dimension " + std::to_string(mixed.dimension) +
                            " is incompatible with the fiber dimension " + std::to_string(fiber_dim));
    mixed_ = std::move(mixed);
  }
  bool is_mixed() const noexcept { return mixed_.has_value(); }
  const MixedCharacteristic& mixed() const { return *mixed_; }

  int dimension() const { return mixed_ ? mixed_->dimension : ideal_dimension(ideal_); }
  int embedding_dimension() const {
    if (mixed_) return mixed_embedding_dimension(mixed_->lift_ring, mixed_->lift_generators);
    return ring::embedding_dimension(ring_, ideal_.generators());
  }

  // Jacobian criterion at the point. Over F_p(t) the criterion needs the
  // instance to be flagged geometrically regular safe.
  RegularityResult regularity() const {
    if constexpr (std::is_same_v<F, arith::RationalFunctionField>) {
      if (!geometrically_regular_safe_)
        throw ImperfectBaseUnsupported("Jacobian criterion over an imperfect base needs geometrically_regular_safe");
    }
    RegularityResult out;
    out.dimension = dimension();
    if (out.dimension < 0) throw ValidationError("the ideal is the unit ideal");
    out.embedding_dimension = embedding_dimension();
    out.regular = out.dimension == out.embedding_dimension;
    return out;
  }

 private:
  PolyRing<F> ring_;
  std::vector<Elem> point_;
  Ideal<F> ideal_;
  Budgets budgets_;
  bool geometrically_regular_safe_;
  std::optional<MixedCharacteristic> mixed_;
};

// A Z_(p)-algebra Z_(p)[x]/I at (p, x - a): the fiber F_p[x]/(I mod p) with
// the lifted generators attached.
inline PresentedRing<arith::GaloisField> make_mixed_ring(const PolyRing<arith::ZModP2>& lift_ring,
                                                         const std::vector<Polynomial<arith::ZModP2>>& generators,
                                                         const std::vector<std::int64_t>& point, int dimension,
                                                         Budgets budgets = {}) {
  const arith::GaloisField fp(lift_ring.coeffs().prime(), 1);
  PolyRing<arith::GaloisField> fiber(fp, lift_ring.names());
  std::vector<Polynomial<arith::GaloisField>> fiber_gens;
  for (const auto& g : generators) fiber_gens.push_back(reduce_mod_p(lift_ring, g, fiber));
  std::vector<arith::GaloisField::Element> fiber_point;
  for (auto a : point) fiber_point.push_back(fp.from_int(a));
  PresentedRing<arith::GaloisField> out(fiber, fiber_gens, fiber_point, budgets);
  std::vector<std::int64_t> lifted_point;
  for (auto a : point) lifted_point.push_back(lift_ring.coeffs().from_int(a));
  MixedCharacteristic mixed{lift_ring, {}, lifted_point, dimension};
  for (const auto& g : generators) {
    auto h = recenter(lift_ring, g, lifted_point);
    if (!h.is_zero()) mixed.lift_generators.push_back(std::move(h));
  }
  out.attach_mixed(std::move(mixed));
  return out;
}

}  // namespace logfw::ring
