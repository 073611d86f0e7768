#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace logfw::ring {

constexpr int kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  std::uint16_t operator[](int i) const noexcept { return e[static_cast<std::size_t>(i)]; }
  bool is_one() const noexcept { return deg == 0; }
  std::uint32_t support() const noexcept;

  static Monomial variable(int i);
  static Monomial from_exponents(const std::vector<int>& exps);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
};

// grevlex: total degree, ties broken by the reverse-lexicographic rule.
// eliminate_first: x_0 compared first, then grevlex on the remaining variables.
enum class MonomialOrder { grevlex, eliminate_first };

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept;

bool divides(const Monomial& a, const Monomial& b) noexcept;
Monomial operator*(const Monomial& a, const Monomial& b);
// Requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;
Monomial power(const Monomial& a, std::uint32_t k);

std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace logfw::ring
