#pragma once

#include <cstdint>
#include <string>

#include "logfw/arith/fp_poly.hpp"

namespace logfw::arith {

// F_p(t1..tr), r <= 3. Elements are reduced fractions with monic denominator,
// so equality is equality of representatives.
class RationalFunctionField {
 public:
  struct Element {
    FpPoly num;
    FpPoly den;
    friend bool operator==(const Element&, const Element&) = default;
  };

  RationalFunctionField(const Prime& p, int r);

  const Prime& prime() const noexcept { return prime_; }
  std::int64_t characteristic() const noexcept { return prime_.value(); }
  int transcendence_degree() const noexcept { return polys_.nvars(); }
  const FpPolyRing& polynomials() const noexcept { return polys_; }

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t n) const;
  Element variable(int j) const;
  Element from_poly(const FpPoly& num) const;
  Element fraction(const FpPoly& num, const FpPoly& den) const;

  bool is_zero(const Element& a) const noexcept { return a.num.is_zero(); }
  bool is_one(const Element& a) const noexcept;
  bool equal(const Element& a, const Element& b) const noexcept { return a == b; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(const Element& a, std::uint64_t e) const;
  Element frobenius(const Element& a) const;
  Element derivative(const Element& a, int j) const;

  std::string to_string(const Element& a) const;

  friend bool operator==(const RationalFunctionField& a, const RationalFunctionField& b) {
    return a.prime_ == b.prime_ && a.polys_.nvars() == b.polys_.nvars();
  }

 private:
  Prime prime_;
  FpPolyRing polys_;
};

}  // namespace logfw::arith
