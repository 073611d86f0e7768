#include "logfw/arith/prime.hpp"

#include <numeric>

#include "logfw/error.hpp"

namespace logfw::arith {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (p > kMax) throw Unsupported("prime " + std::to_string(p) + " exceeds supported size");
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m) {
  std::int64_t result = 1 % m;
  std::int64_t b = mod(base, m);
  while (exp > 0) {
    if (exp & 1u) result = static_cast<std::int64_t>((static_cast<__int128>(result) * b) % m);
    b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % m);
    exp >>= 1u;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw InternalError("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return mod(old_s, m);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw IntegerOverflow("64-bit addition overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw IntegerOverflow("64-bit multiplication overflow");
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t fermat_quotient(std::int64_t n, const Prime& p) {
  const std::int64_t pp = p.squared();
  const std::int64_t r = mod(n, pp);
  const std::int64_t diff = mod(pow_mod(r, static_cast<std::uint64_t>(p.value()), pp) - r, pp);
  // n^p = n (mod p), so diff is a multiple of p.
  return mod(diff / p.value(), p.value());
}

}  // namespace logfw::arith
