#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logfw/arith/prime.hpp"

namespace logfw::arith {

// F_q = F_p[z]/(g) with g a stored Conway polynomial when one is tabulated,
// otherwise the lexicographically first primitive polynomial of degree m.
// Elements are integers in [0, q) whose base-p digits are the coefficients
// of 1, z, z^2, ...; multiplication goes through log/antilog tables.
class GaloisField {
 public:
  using Element = std::uint32_t;
  static constexpr std::int64_t kMaxOrder = 1 << 20;

  GaloisField(const Prime& p, int m);

  const Prime& prime() const noexcept { return prime_; }
  std::int64_t characteristic() const noexcept { return prime_.value(); }
  int degree() const noexcept { return m_; }
  std::int64_t order() const noexcept { return q_; }
  // Coefficients g_0..g_m of the defining polynomial (g_m = 1).
  const std::vector<std::int64_t>& modulus() const noexcept { return tables_->modulus; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  // The class of z; equals from_int(0) + 1*z. For m = 1 this is a primitive root.
  Element generator() const noexcept { return tables_->exp[1 % (q_ - 1)]; }
  Element from_int(std::int64_t n) const noexcept { return static_cast<Element>(mod(n, prime_.value())); }
  Element from_digits(const std::vector<std::int64_t>& digits) const;
  std::vector<std::int64_t> digits(Element a) const;

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;
  Element frobenius(Element a) const noexcept { return pow(a, static_cast<std::uint64_t>(prime_.value())); }

  // Multiplicative position: exp(k) = g^k for the table generator.
  Element exp(std::int64_t k) const noexcept { return tables_->exp[static_cast<std::size_t>(mod(k, q_ - 1))]; }

  std::string to_string(Element a, const std::string& symbol = "z") const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.prime_ == b.prime_ && a.m_ == b.m_;
  }

 private:
  struct Tables {
    std::vector<std::int64_t> modulus;
    std::vector<Element> exp;
    std::vector<std::int64_t> log;
  };

  Prime prime_;
  int m_;
  std::int64_t q_;
  std::shared_ptr<const Tables> tables_;
};

// Tabulated Conway polynomial (low-to-high coefficients), empty if unknown.
std::vector<std::int64_t> conway_polynomial(std::int64_t p, int m);

}  // namespace logfw::arith
