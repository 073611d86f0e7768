#include "logfw/ring/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "logfw/error.hpp"

namespace logfw::ring {

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[static_cast<std::size_t>(i)] != 0) s |= 1u << i;
  return s;
}

Monomial Monomial::variable(int i) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  m.deg = 1;
  return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw Unsupported("more than 16 variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 0xFFFF) throw ValidationError("exponent out of range");
    m.e[i] = static_cast<std::uint16_t>(exps[i]);
    m.deg += static_cast<std::uint32_t>(exps[i]);
  }
  return m;
}

namespace {

int grevlex_tail(const Monomial& a, const Monomial& b, int first) noexcept {
  for (int i = kMaxVars - 1; i >= first; --i) {
    const auto x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) noexcept {
  if (order == MonomialOrder::eliminate_first) {
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0] ? -1 : 1;
    const auto da = a.deg - a.e[0], db = b.deg - b.e[0];
    if (da != db) return da < db ? -1 : 1;
    return grevlex_tail(a, b, 1);
  }
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  return grevlex_tail(a, b, 0);
}

bool divides(const Monomial& a, const Monomial& b) noexcept {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    const std::uint32_t s = std::uint32_t{a.e[i]} + b.e[i];
    if (s > 0xFFFF) throw IntegerOverflow("monomial exponent overflow");
    m.e[i] = static_cast<std::uint16_t>(s);
  }
  m.deg = a.deg + b.deg;
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < a.e.size(); ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  m.deg = a.deg - b.deg;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.support() & b.support()) == 0; }

Monomial power(const Monomial& a, std::uint32_t k) {
  Monomial m;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    const std::uint64_t s = std::uint64_t{a.e[i]} * k;
    if (s > 0xFFFF) throw IntegerOverflow("monomial exponent overflow");
    m.e[i] = static_cast<std::uint16_t>(s);
  }
  m.deg = a.deg * k;
  return m;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << names[i];
    if (m.e[i] > 1) out << "^" << m.e[i];
  }
  return out.str();
}

}  // namespace logfw::ring
