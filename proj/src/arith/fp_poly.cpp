#include "logfw/arith/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "logfw/error.hpp"

namespace logfw::arith {

namespace {

bool lex_greater(const FpPoly::Exp& a, const FpPoly::Exp& b) { return a > b; }

bool divides(const FpPoly::Exp& a, const FpPoly::Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

FpPoly::Exp exp_add(const FpPoly::Exp& a, const FpPoly::Exp& b) {
  FpPoly::Exp out{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = a[i] + b[i];
    if (s > 0xFFFF) throw IntegerOverflow("exponent overflow in F_p[t]");
    out[i] = static_cast<std::uint16_t>(s);
  }
  return out;
}

FpPoly::Exp exp_sub(const FpPoly::Exp& a, const FpPoly::Exp& b) {
  FpPoly::Exp out{};
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

}  // namespace

FpPolyRing::FpPolyRing(const Prime& p, int nvars) : p_(p.value()), n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw Unsupported("rational function fields support at most 3 variables");
}

FpPoly FpPolyRing::constant(std::int64_t c) const {
  FpPoly out;
  c = mod(c, p_);
  if (c != 0) out.terms.push_back({FpPoly::Exp{}, c});
  return out;
}

FpPoly FpPolyRing::variable(int j) const {
  FpPoly::Exp e{};
  e[static_cast<std::size_t>(j)] = 1;
  return monomial(1, e);
}

FpPoly FpPolyRing::monomial(std::int64_t c, const FpPoly::Exp& e) const {
  FpPoly out;
  c = mod(c, p_);
  if (c != 0) out.terms.push_back({e, c});
  return out;
}

FpPoly FpPolyRing::add(const FpPoly& a, const FpPoly& b) const {
  FpPoly out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() || (i < a.terms.size() && lex_greater(a.terms[i].e, b.terms[j].e))) {
      out.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || lex_greater(b.terms[j].e, a.terms[i].e)) {
      out.terms.push_back(b.terms[j++]);
    } else {
      const std::int64_t c = (a.terms[i].c + b.terms[j].c) % p_;
      if (c != 0) out.terms.push_back({a.terms[i].e, c});
      ++i;
      ++j;
    }
  }
  return out;
}

FpPoly FpPolyRing::neg(const FpPoly& a) const {
  FpPoly out = a;
  for (auto& t : out.terms) t.c = p_ - t.c;
  return out;
}

FpPoly FpPolyRing::sub(const FpPoly& a, const FpPoly& b) const { return add(a, neg(b)); }

FpPoly FpPolyRing::scale(const FpPoly& a, std::int64_t c) const {
  c = mod(c, p_);
  if (c == 0) return {};
  FpPoly out = a;
  for (auto& t : out.terms) t.c = t.c * c % p_;
  return out;
}

FpPoly FpPolyRing::mul(const FpPoly& a, const FpPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FpPoly::Term> raw;
  raw.reserve(a.terms.size() * b.terms.size());
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) raw.push_back({exp_add(s.e, t.e), s.c * t.c % p_});
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return lex_greater(x.e, y.e); });
  FpPoly out;
  for (const auto& t : raw) {
    if (!out.terms.empty() && out.terms.back().e == t.e) {
      out.terms.back().c = (out.terms.back().c + t.c) % p_;
      if (out.terms.back().c == 0) out.terms.pop_back();
    } else {
      out.terms.push_back(t);
    }
  }
  return out;
}

FpPoly FpPolyRing::pow(const FpPoly& a, std::uint64_t e) const {
  FpPoly result = constant(1);
  FpPoly base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1u;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::optional<FpPoly> FpPolyRing::divide_exact(const FpPoly& a, const FpPoly& b) const {
  if (b.is_zero()) throw InternalError("division by zero polynomial");
  FpPoly rem = a;
  FpPoly quot;
  const auto& lead = b.terms.front();
  const std::int64_t lead_inv = inv_mod(lead.c, p_);
  while (!rem.is_zero()) {
    const auto& t = rem.terms.front();
    if (!divides(lead.e, t.e)) return std::nullopt;
    const FpPoly q = monomial(t.c * lead_inv, exp_sub(t.e, lead.e));
    quot = add(quot, q);
    rem = sub(rem, mul(q, b));
  }
  return quot;
}

bool FpPolyRing::is_constant(const FpPoly& a) const noexcept {
  return a.terms.empty() || (a.terms.size() == 1 && a.terms.front().e == FpPoly::Exp{});
}

std::int64_t FpPolyRing::leading_coefficient(const FpPoly& a) const noexcept {
  return a.terms.empty() ? 0 : a.terms.front().c;
}

FpPoly FpPolyRing::make_monic(const FpPoly& a) const {
  if (a.is_zero()) return a;
  return scale(a, inv_mod(a.terms.front().c, p_));
}

int FpPolyRing::top_variable(const FpPoly& a) const noexcept {
  int v = -1;
  for (const auto& t : a.terms)
    for (int j = kMaxVars - 1; j > v; --j)
      if (t.e[static_cast<std::size_t>(j)] > 0) v = j;
  return v;
}

int FpPolyRing::degree_in(const FpPoly& a, int v) const noexcept {
  int d = -1;
  for (const auto& t : a.terms) d = std::max<int>(d, t.e[static_cast<std::size_t>(v)]);
  return d;
}

FpPoly FpPolyRing::coefficient_in(const FpPoly& a, int v, int d) const {
  FpPoly out;
  for (const auto& t : a.terms) {
    if (t.e[static_cast<std::size_t>(v)] != d) continue;
    auto e = t.e;
    e[static_cast<std::size_t>(v)] = 0;
    out = add(out, monomial(t.c, e));
  }
  return out;
}

FpPoly FpPolyRing::times_var_power(const FpPoly& a, int v, int d) const {
  FpPoly::Exp e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(d);
  return mul(a, monomial(1, e));
}

FpPoly FpPolyRing::content_in(const FpPoly& a, int v) const {
  FpPoly g;
  for (int d = degree_in(a, v); d >= 0; --d) {
    const FpPoly c = coefficient_in(a, v, d);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (is_constant(g)) break;
  }
  return g;
}

FpPoly FpPolyRing::pseudo_remainder(const FpPoly& a, const FpPoly& b, int v) const {
  const int db = degree_in(b, v);
  const FpPoly lb = coefficient_in(b, v, db);
  FpPoly r = a;
  int dr = degree_in(r, v);
  while (!r.is_zero() && dr >= db) {
    const FpPoly lr = coefficient_in(r, v, dr);
    r = sub(mul(lb, r), times_var_power(mul(lr, b), v, dr - db));
    dr = r.is_zero() ? -1 : degree_in(r, v);
  }
  return r;
}

FpPoly FpPolyRing::gcd(const FpPoly& a, const FpPoly& b) const {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (is_constant(a) || is_constant(b)) return constant(1);
  const int va = top_variable(a), vb = top_variable(b);
  const int v = std::max(va, vb);
  if (va < v) return gcd(a, content_in(b, v));
  if (vb < v) return gcd(content_in(a, v), b);

  const FpPoly ca = content_in(a, v), cb = content_in(b, v);
  const FpPoly gc = gcd(ca, cb);
  FpPoly x = *divide_exact(a, ca);
  FpPoly y = *divide_exact(b, cb);
  if (degree_in(x, v) < degree_in(y, v)) std::swap(x, y);
  while (!y.is_zero()) {
    FpPoly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    if (r.is_zero() || degree_in(r, v) <= 0) {
      y = r.is_zero() ? FpPoly{} : constant(1);
      if (!r.is_zero()) x = constant(1);
      break;
    }
    y = *divide_exact(r, content_in(r, v));
  }
  if (degree_in(x, v) > 0) x = *divide_exact(x, content_in(x, v));
  return make_monic(mul(gc, x));
}

FpPoly FpPolyRing::derivative(const FpPoly& a, int j) const {
  FpPoly out;
  for (const auto& t : a.terms) {
    const auto k = t.e[static_cast<std::size_t>(j)];
    if (k == 0 || k % p_ == 0) continue;
    auto e = t.e;
    e[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(k - 1);
    out = add(out, monomial(t.c * (k % p_), e));
  }
  return out;
}

FpPoly FpPolyRing::frobenius(const FpPoly& a) const {
  FpPoly out = a;
  for (auto& t : out.terms)
    for (auto& x : t.e) {
      const std::int64_t s = static_cast<std::int64_t>(x) * p_;
      if (s > 0xFFFF) throw IntegerOverflow("exponent overflow in F_p[t] Frobenius");
      x = static_cast<std::uint16_t>(s);
    }
  return out;
}

std::string FpPolyRing::variable_name(int j) const {
  if (n_ == 1) return "t";
  return "t" + std::to_string(j + 1);
}

std::string FpPolyRing::to_string(const FpPoly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms) {
    if (!first) out << "+";
    first = false;
    bool has_var = false;
    for (int j = 0; j < kMaxVars; ++j) has_var = has_var || t.e[static_cast<std::size_t>(j)] > 0;
    if (!has_var || t.c != 1) {
      out << t.c;
      if (has_var) out << "*";
    }
    bool first_var = true;
    for (int j = 0; j < kMaxVars; ++j) {
      const auto k = t.e[static_cast<std::size_t>(j)];
      if (k == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << variable_name(j);
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace logfw::arith
