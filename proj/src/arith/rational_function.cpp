#include "logfw/arith/rational_function.hpp"

#include "logfw/error.hpp"

namespace logfw::arith {

RationalFunctionField::RationalFunctionField(const Prime& p, int r) : prime_(p), polys_(p, r) {
  if (r < 1) throw ValidationError("rational function field needs r >= 1");
}

RationalFunctionField::Element RationalFunctionField::zero() const { return {FpPoly{}, polys_.constant(1)}; }
RationalFunctionField::Element RationalFunctionField::one() const { return {polys_.constant(1), polys_.constant(1)}; }
RationalFunctionField::Element RationalFunctionField::from_int(std::int64_t n) const {
  return {polys_.constant(n), polys_.constant(1)};
}
RationalFunctionField::Element RationalFunctionField::variable(int j) const {
  if (j < 0 || j >= polys_.nvars()) throw ValidationError("no base variable t" + std::to_string(j + 1));
  return {polys_.variable(j), polys_.constant(1)};
}
RationalFunctionField::Element RationalFunctionField::from_poly(const FpPoly& num) const {
  return {num, polys_.constant(1)};
}

RationalFunctionField::Element RationalFunctionField::fraction(const FpPoly& num, const FpPoly& den) const {
  if (den.is_zero()) throw InternalError("zero denominator in F_p(t)");
  if (num.is_zero()) return zero();
  const FpPoly g = polys_.gcd(num, den);
  FpPoly n = *polys_.divide_exact(num, g);
  FpPoly d = *polys_.divide_exact(den, g);
  const std::int64_t c = inv_mod(polys_.leading_coefficient(d), prime_.value());
  return {polys_.scale(n, c), polys_.scale(d, c)};
}

bool RationalFunctionField::is_one(const Element& a) const noexcept { return a.num == a.den; }

RationalFunctionField::Element RationalFunctionField::add(const Element& a, const Element& b) const {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (a.den == b.den) return fraction(polys_.add(a.num, b.num), a.den);
  return fraction(polys_.add(polys_.mul(a.num, b.den), polys_.mul(b.num, a.den)), polys_.mul(a.den, b.den));
}

RationalFunctionField::Element RationalFunctionField::neg(const Element& a) const { return {polys_.neg(a.num), a.den}; }

RationalFunctionField::Element RationalFunctionField::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

RationalFunctionField::Element RationalFunctionField::mul(const Element& a, const Element& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  // Cross-cancel first so the product is already reduced.
  const FpPoly g1 = polys_.gcd(a.num, b.den);
  const FpPoly g2 = polys_.gcd(b.num, a.den);
  const FpPoly n = polys_.mul(*polys_.divide_exact(a.num, g1), *polys_.divide_exact(b.num, g2));
  const FpPoly d = polys_.mul(*polys_.divide_exact(a.den, g2), *polys_.divide_exact(b.den, g1));
  const std::int64_t c = inv_mod(polys_.leading_coefficient(d), prime_.value());
  return {polys_.scale(n, c), polys_.scale(d, c)};
}

RationalFunctionField::Element RationalFunctionField::inv(const Element& a) const {
  if (is_zero(a)) throw InternalError("inverse of zero in F_p(t)");
  const std::int64_t c = inv_mod(polys_.leading_coefficient(a.num), prime_.value());
  return {polys_.scale(a.den, c), polys_.scale(a.num, c)};
}

RationalFunctionField::Element RationalFunctionField::pow(const Element& a, std::uint64_t e) const {
  return {polys_.pow(a.num, e), polys_.pow(a.den, e)};
}

RationalFunctionField::Element RationalFunctionField::frobenius(const Element& a) const {
  return {polys_.frobenius(a.num), polys_.frobenius(a.den)};
}

RationalFunctionField::Element RationalFunctionField::derivative(const Element& a, int j) const {
  const FpPoly top = polys_.sub(polys_.mul(polys_.derivative(a.num, j), a.den), polys_.mul(a.num, polys_.derivative(a.den, j)));
  return fraction(top, polys_.mul(a.den, a.den));
}

std::string RationalFunctionField::to_string(const Element& a) const {
  if (polys_.is_constant(a.den)) {
    const std::string n = polys_.to_string(a.num);
    return a.num.terms.size() > 1 ? "(" + n + ")" : n;
  }
  return "(" + polys_.to_string(a.num) + ")/(" + polys_.to_string(a.den) + ")";
}

}  // namespace logfw::arith
