#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logfw/arith/galois_field.hpp"
#include "logfw/arith/prime.hpp"
#include "logfw/arith/rational_function.hpp"

namespace logfw::arith {

// An integer modulo p^2. Multiples of p can be divided by p exactly, landing in F_p.
class LiftedInt {
 public:
  LiftedInt(std::int64_t n, const Prime& p);

  std::int64_t residue() const noexcept { return r_; }
  const Prime& prime() const noexcept { return p_; }
  bool divisible_by_p() const noexcept { return r_ % p_.value() == 0; }
  std::int64_t divide_by_p() const;  // in [0, p)
  std::int64_t reduce() const noexcept { return r_ % p_.value(); }

  LiftedInt operator+(const LiftedInt& o) const { return LiftedInt(r_ + o.r_, p_); }
  LiftedInt operator-(const LiftedInt& o) const { return LiftedInt(r_ - o.r_, p_); }
  LiftedInt operator*(const LiftedInt& o) const { return LiftedInt(r_ * o.r_, p_); }
  LiftedInt pow(std::uint64_t e) const { return LiftedInt(pow_mod(r_, e, p_.squared()), p_); }

 private:
  std::int64_t r_;
  Prime p_;
};

// Coefficient ring Z/p^2 used for polynomials over Z_(p) modulo p^2. Not a field:
// inv is defined on units only.
class ZModP2 {
 public:
  using Element = std::int64_t;

  explicit ZModP2(const Prime& p) : prime_(p), m_(p.squared()) {}

  const Prime& prime() const noexcept { return prime_; }
  std::int64_t characteristic() const noexcept { return m_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1 % m_; }
  Element from_int(std::int64_t n) const noexcept { return mod(n, m_); }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  bool is_unit(Element a) const noexcept { return a % prime_.value() != 0; }

  Element add(Element a, Element b) const noexcept { return (a + b) % m_; }
  Element sub(Element a, Element b) const noexcept { return mod(a - b, m_); }
  Element neg(Element a) const noexcept { return (m_ - a) % m_; }
  Element mul(Element a, Element b) const noexcept { return a * b % m_; }
  Element inv(Element a) const { return inv_mod(a, m_); }
  Element pow(Element a, std::uint64_t e) const noexcept { return pow_mod(a, e, m_); }
  Element frobenius(Element a) const noexcept { return pow(a, static_cast<std::uint64_t>(prime_.value())); }

  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const ZModP2& a, const ZModP2& b) { return a.prime_ == b.prime_; }

 private:
  Prime prime_;
  std::int64_t m_;
};

// a/b with gcd(b, p) = 1, reduced, b > 0.
class PLocalRational {
 public:
  PLocalRational(std::int64_t num, std::int64_t den, const Prime& p);
  static PLocalRational integer(std::int64_t n, const Prime& p) { return PLocalRational(n, 1, p); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  const Prime& prime() const noexcept { return p_; }

  PLocalRational operator+(const PLocalRational& o) const;
  PLocalRational operator-(const PLocalRational& o) const;
  PLocalRational operator*(const PLocalRational& o) const;
  PLocalRational pow(std::uint64_t e) const;
  bool operator==(const PLocalRational& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }

  // Image in Z/p^2.
  LiftedInt lift() const;
  bool is_unit() const noexcept { return num_ % p_.value() != 0; }

 private:
  std::int64_t num_, den_;
  Prime p_;
};

// P_n(values) = ((sum a_i)^p - sum a_i^p) / p, computed in Z/p^2 and returned mod p.
std::int64_t p_sum_correction(const std::vector<std::int64_t>& values, const Prime& p);
std::int64_t p_sum_correction(const std::vector<PLocalRational>& values, const Prime& p);
// F_q values: only the prime field has the trivial lift here; m > 1 raises
// NonLiftableCoefficient.
GaloisField::Element p_sum_correction(const GaloisField& field, const std::vector<GaloisField::Element>& values);
// F_p(t) has no canonical lift to characteristic p^2; always raises NonLiftableCoefficient.
RationalFunctionField::Element p_sum_correction(const RationalFunctionField& field,
                                                const std::vector<RationalFunctionField::Element>& values);

// q_p(a/b) = q_p of the residue of a/b modulo p^2.
std::int64_t fermat_quotient(const PLocalRational& x);

// w(c) for base constants.
//  Z_(p): w(c) = -q_p(c) w(p); the returned value is the w(p) coefficient in F_p.
std::int64_t coeff_fw_value(const PLocalRational& c);
//  F_p(t1..tr): w(c) = sum_j v_j w(t_j); returns (v_1..v_r), obtained from the
//  values on polynomials via w(a/b) = (b^p w(a) - a^p w(b)) / b^{2p}.
std::vector<RationalFunctionField::Element> coeff_fw_value(const RationalFunctionField& field,
                                                           const RationalFunctionField::Element& c);
//  F_q: perfect, so w vanishes on constants.
inline bool coeff_fw_value_is_zero(const GaloisField&, GaloisField::Element) { return true; }

}  // namespace logfw::arith
