#pragma once

#include <cstdint>
#include <string>

namespace logfw::arith {

// A verified prime, small enough that p^2 fits comfortably in 32 bits.
class Prime {
 public:
  static constexpr std::int64_t kMax = 46337;

  explicit Prime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  std::int64_t squared() const noexcept { return p_ * p_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

// Least non-negative residue.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t gcd(std::int64_t a, std::int64_t b);

// q_p(n) = (n^p - n)/p mod p. Depends only on n mod p^2.
std::int64_t fermat_quotient(std::int64_t n, const Prime& p);

}  // namespace logfw::arith
