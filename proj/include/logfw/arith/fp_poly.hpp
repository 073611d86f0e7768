#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logfw/arith/prime.hpp"

namespace logfw::arith {

// Sparse polynomial over F_p in at most three variables t1, t2, t3.
// Terms are kept in strictly decreasing lex order with coefficients in [1, p).
struct FpPoly {
  using Exp = std::array<std::uint16_t, 3>;
  struct Term {
    Exp e;
    std::int64_t c;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

// Arithmetic on FpPoly for a fixed p and variable count.
class FpPolyRing {
 public:
  static constexpr int kMaxVars = 3;

  FpPolyRing(const Prime& p, int nvars);

  std::int64_t p() const noexcept { return p_; }
  int nvars() const noexcept { return n_; }

  FpPoly constant(std::int64_t c) const;
  FpPoly variable(int j) const;
  FpPoly monomial(std::int64_t c, const FpPoly::Exp& e) const;

  FpPoly add(const FpPoly& a, const FpPoly& b) const;
  FpPoly sub(const FpPoly& a, const FpPoly& b) const;
  FpPoly neg(const FpPoly& a) const;
  FpPoly scale(const FpPoly& a, std::int64_t c) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly pow(const FpPoly& a, std::uint64_t e) const;

  // Quotient when b divides a exactly, otherwise nullopt.
  std::optional<FpPoly> divide_exact(const FpPoly& a, const FpPoly& b) const;
  // Greatest common divisor, normalized to lex-leading coefficient 1 (gcd(0,0) = 0).
  FpPoly gcd(const FpPoly& a, const FpPoly& b) const;
  FpPoly derivative(const FpPoly& a, int j) const;
  // Exponents multiplied by p; this is a -> a^p since coefficients lie in F_p.
  FpPoly frobenius(const FpPoly& a) const;

  bool is_constant(const FpPoly& a) const noexcept;
  std::int64_t leading_coefficient(const FpPoly& a) const noexcept;
  FpPoly make_monic(const FpPoly& a) const;

  std::string to_string(const FpPoly& a) const;
  std::string variable_name(int j) const;

 private:
  int top_variable(const FpPoly& a) const noexcept;
  int degree_in(const FpPoly& a, int v) const noexcept;
  FpPoly coefficient_in(const FpPoly& a, int v, int d) const;
  FpPoly content_in(const FpPoly& a, int v) const;
  FpPoly pseudo_remainder(const FpPoly& a, const FpPoly& b, int v) const;
  FpPoly times_var_power(const FpPoly& a, int v, int d) const;

  std::int64_t p_;
  int n_;
};

}  // namespace logfw::arith
