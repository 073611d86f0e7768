#include "logfw/arith/lift.hpp"

#include <cstdlib>

#include "logfw/error.hpp"

namespace logfw::arith {

LiftedInt::LiftedInt(std::int64_t n, const Prime& p) : r_(mod(n, p.squared())), p_(p) {}

std::int64_t LiftedInt::divide_by_p() const {
  if (!divisible_by_p()) throw InternalError("lifted value " + std::to_string(r_) + " is not a multiple of p");
  return r_ / p_.value();
}

PLocalRational::PLocalRational(std::int64_t num, std::int64_t den, const Prime& p) : num_(num), den_(den), p_(p) {
  if (den == 0) throw ValidationError("zero denominator");
  if (den % p.value() == 0) throw ValidationError("denominator divisible by p is not p-local");
  if (den < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = gcd(std::llabs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

PLocalRational PLocalRational::operator+(const PLocalRational& o) const {
  return PLocalRational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)), checked_mul(den_, o.den_), p_);
}

PLocalRational PLocalRational::operator-(const PLocalRational& o) const {
  return *this + PLocalRational(-o.num_, o.den_, p_);
}

PLocalRational PLocalRational::operator*(const PLocalRational& o) const {
  return PLocalRational(checked_mul(num_, o.num_), checked_mul(den_, o.den_), p_);
}

PLocalRational PLocalRational::pow(std::uint64_t e) const {
  PLocalRational out = integer(1, p_);
  for (std::uint64_t i = 0; i < e; ++i) out = out * *this;
  return out;
}

LiftedInt PLocalRational::lift() const {
  const std::int64_t pp = p_.squared();
  return LiftedInt(mod(num_, pp) * inv_mod(den_, pp), p_);
}

namespace {

std::int64_t correction_from_lifts(const std::vector<LiftedInt>& lifts, const Prime& p) {
  const auto e = static_cast<std::uint64_t>(p.value());
  LiftedInt sum(0, p), sum_of_powers(0, p);
  for (const auto& a : lifts) {
    sum = sum + a;
    sum_of_powers = sum_of_powers + a.pow(e);
  }
  return (sum.pow(e) - sum_of_powers).divide_by_p();
}

}  // namespace

std::int64_t p_sum_correction(const std::vector<std::int64_t>& values, const Prime& p) {
  std::vector<LiftedInt> lifts;
  lifts.reserve(values.size());
  for (auto v : values) lifts.emplace_back(v, p);
  return correction_from_lifts(lifts, p);
}

std::int64_t p_sum_correction(const std::vector<PLocalRational>& values, const Prime& p) {
  std::vector<LiftedInt> lifts;
  lifts.reserve(values.size());
  for (const auto& v : values) lifts.push_back(v.lift());
  return correction_from_lifts(lifts, p);
}

GaloisField::Element p_sum_correction(const GaloisField& field, const std::vector<GaloisField::Element>& values) {
  if (field.degree() != 1)
    throw NonLiftableCoefficient("no p^2-lift implemented for F_q with q = " + std::to_string(field.order()));
  std::vector<std::int64_t> ints(values.begin(), values.end());
  return field.from_int(p_sum_correction(ints, field.prime()));
}

RationalFunctionField::Element p_sum_correction(const RationalFunctionField&,
                                                const std::vector<RationalFunctionField::Element>&) {
  throw NonLiftableCoefficient("F_p(t) has no canonical lift to characteristic p^2");
}

std::int64_t fermat_quotient(const PLocalRational& x) { return fermat_quotient(x.lift().residue(), x.prime()); }

std::int64_t coeff_fw_value(const PLocalRational& c) { return mod(-fermat_quotient(c), c.prime().value()); }

namespace {

// w on F_p[t]: w(sum c t^m) = sum_j (sum_m c m_j t^{p(m - e_j)}) w(t_j).
std::vector<FpPoly> poly_fw_value(const FpPolyRing& ring, const FpPoly& a) {
  std::vector<FpPoly> out(static_cast<std::size_t>(ring.nvars()));
  const std::int64_t p = ring.p();
  for (const auto& t : a.terms) {
    for (int j = 0; j < ring.nvars(); ++j) {
      const auto mj = t.e[static_cast<std::size_t>(j)];
      if (mj % p == 0) continue;
      FpPoly::Exp e = t.e;
      e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(mj - 1);
      for (auto& x : e) x = static_cast<std::uint16_t>(x * p);
      out[static_cast<std::size_t>(j)] = ring.add(out[static_cast<std::size_t>(j)], ring.monomial(t.c * (mj % p), e));
    }
  }
  return out;
}

}  // namespace

std::vector<RationalFunctionField::Element> coeff_fw_value(const RationalFunctionField& field,
                                                           const RationalFunctionField::Element& c) {
  const auto& ring = field.polynomials();
  const auto p = static_cast<std::uint64_t>(field.characteristic());
  const auto wa = poly_fw_value(ring, c.num);
  const auto wb = poly_fw_value(ring, c.den);
  const FpPoly ap = ring.frobenius(c.num);
  const FpPoly bp = ring.frobenius(c.den);
  const FpPoly b2p = ring.pow(c.den, 2 * p);
  std::vector<RationalFunctionField::Element> out;
  for (std::size_t j = 0; j < wa.size(); ++j) {
    const FpPoly top = ring.sub(ring.mul(bp, wa[j]), ring.mul(ap, wb[j]));
    out.push_back(top.is_zero() ? field.zero() : field.fraction(top, b2p));
  }
  return out;
}

}  // namespace logfw::arith
