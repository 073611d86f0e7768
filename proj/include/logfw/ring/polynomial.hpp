#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "logfw/error.hpp"
#include "logfw/ring/monomial.hpp"

namespace logfw::ring {

template <class C>
struct Term {
  Monomial m;
  typename C::Element c;
};

// Terms in strictly decreasing order for the owning ring's monomial order,
// coefficients nonzero.
template <class C>
struct Polynomial {
  std::vector<Term<C>> terms;
  bool is_zero() const noexcept { return terms.empty(); }
};

// Polynomial ring C[x_1..x_n]. C supplies Element and the usual
// zero/one/add/sub/neg/mul/pow/is_zero/equal/from_int/to_string operations.
template <class C>
class PolyRing {
 public:
  using Coeff = C;
  using Elem = typename C::Element;
  using Poly = Polynomial<C>;

  PolyRing(C coeffs, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex)
      : coeffs_(std::move(coeffs)), names_(std::move(names)), order_(order) {
    if (names_.size() > static_cast<std::size_t>(kMaxVars)) throw Unsupported("more than 16 variables");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw ValidationError("duplicate variable name '" + names_[i] + "'");
  }

  const C& coeffs() const noexcept { return coeffs_; }
  int nvars() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  MonomialOrder order() const noexcept { return order_; }
  PolyRing with_order(MonomialOrder order) const { return PolyRing(coeffs_, names_, order); }

  int compare(const Monomial& a, const Monomial& b) const noexcept { return ring::compare(a, b, order_); }
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  Poly zero() const { return {}; }
  Poly constant(const Elem& c) const {
    Poly out;
    if (!coeffs_.is_zero(c)) out.terms.push_back({Monomial{}, c});
    return out;
  }
  Poly from_int(std::int64_t n) const { return constant(coeffs_.from_int(n)); }
  Poly one() const { return constant(coeffs_.one()); }
  Poly variable(int i) const { return monomial(coeffs_.one(), Monomial::variable(i)); }
  Poly monomial(const Elem& c, const Monomial& m) const {
    Poly out;
    if (!coeffs_.is_zero(c)) out.terms.push_back({m, c});
    return out;
  }

  bool is_constant(const Poly& f) const noexcept { return f.terms.empty() || (f.terms.size() == 1 && f.terms[0].m.is_one()); }
  Elem constant_term(const Poly& f) const {
    if (!f.terms.empty() && f.terms.back().m.is_one()) return f.terms.back().c;
    return coeffs_.zero();
  }
  Elem coefficient(const Poly& f, const Monomial& m) const {
    for (const auto& t : f.terms)
      if (t.m == m) return t.c;
    return coeffs_.zero();
  }
  bool equal(const Poly& a, const Poly& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].m == b.terms[i].m) || !coeffs_.equal(a.terms[i].c, b.terms[i].c)) return false;
    return true;
  }

  Poly add(const Poly& a, const Poly& b) const { return combine(a, b, false); }
  Poly sub(const Poly& a, const Poly& b) const { return combine(a, b, true); }
  Poly neg(const Poly& a) const {
    Poly out = a;
    for (auto& t : out.terms) t.c = coeffs_.neg(t.c);
    return out;
  }
  Poly scale(const Poly& a, const Elem& c) const {
    if (coeffs_.is_zero(c)) return {};
    Poly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
      auto v = coeffs_.mul(t.c, c);
      if (!coeffs_.is_zero(v)) out.terms.push_back({t.m, std::move(v)});
    }
    return out;
  }
  // a * c * m
  Poly mul_term(const Poly& a, const Elem& c, const Monomial& m) const {
    if (coeffs_.is_zero(c)) return {};
    Poly out;
    out.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) {
      auto v = coeffs_.mul(t.c, c);
      if (!coeffs_.is_zero(v)) out.terms.push_back({t.m * m, std::move(v)});
    }
    return out;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term<C>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& s : a.terms)
      for (const auto& t : b.terms) raw.push_back({s.m * t.m, coeffs_.mul(s.c, t.c)});
    return collect(std::move(raw));
  }
  Poly pow(const Poly& a, std::uint64_t e) const {
    Poly result = one();
    Poly base = a;
    while (e > 0) {
      if (e & 1u) result = mul(result, base);
      e >>= 1u;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }
  Poly sum(const std::vector<Poly>& parts) const {
    std::vector<Term<C>> raw;
    for (const auto& p : parts) raw.insert(raw.end(), p.terms.begin(), p.terms.end());
    return collect(std::move(raw));
  }

  // Sort and merge arbitrary terms.
  Poly collect(std::vector<Term<C>> raw) const {
    std::sort(raw.begin(), raw.end(), [this](const auto& x, const auto& y) { return greater(x.m, y.m); });
    Poly out;
    out.terms.reserve(raw.size());
    for (auto& t : raw) {
      if (!out.terms.empty() && out.terms.back().m == t.m) {
        out.terms.back().c = coeffs_.add(out.terms.back().c, t.c);
      } else {
        if (!out.terms.empty() && coeffs_.is_zero(out.terms.back().c)) out.terms.pop_back();
        out.terms.push_back(std::move(t));
      }
    }
    if (!out.terms.empty() && coeffs_.is_zero(out.terms.back().c)) out.terms.pop_back();
    return out;
  }

  Poly partial(const Poly& f, int i) const {
    std::vector<Term<C>> raw;
    for (const auto& t : f.terms) {
      const auto k = t.m[i];
      if (k == 0) continue;
      auto c = coeffs_.mul(t.c, coeffs_.from_int(k));
      if (coeffs_.is_zero(c)) continue;
      Monomial m = t.m;
      m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(k - 1);
      m.deg -= 1;
      raw.push_back({m, std::move(c)});
    }
    return collect(std::move(raw));
  }

  // Apply coefficient-wise Frobenius and raise every monomial to the p-th power.
  Poly frobenius(const Poly& f, std::uint32_t p) const {
    Poly out;
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
      auto c = coeffs_.frobenius(t.c);
      if (!coeffs_.is_zero(c)) out.terms.push_back({power(t.m, p), std::move(c)});
    }
    return out;  // raising to the p-th power preserves any monomial order
  }

  // x_i -> images[i], evaluated in `target` through `coeff_map`.
  template <class D, class Map>
  Polynomial<D> substitute(const Poly& f, const PolyRing<D>& target, const std::vector<Polynomial<D>>& images,
                           Map coeff_map) const {
    std::vector<Polynomial<D>> parts;
    std::vector<std::vector<Polynomial<D>>> powers(static_cast<std::size_t>(nvars()));
    auto power_of = [&](int i, int k) -> const Polynomial<D>& {
      auto& cache = powers[static_cast<std::size_t>(i)];
      if (cache.empty()) cache.push_back(target.one());
      while (static_cast<int>(cache.size()) <= k) cache.push_back(target.mul(cache.back(), images[static_cast<std::size_t>(i)]));
      return cache[static_cast<std::size_t>(k)];
    };
    for (const auto& t : f.terms) {
      Polynomial<D> term = target.constant(coeff_map(t.c));
      for (int i = 0; i < nvars() && !term.is_zero(); ++i)
        if (t.m[i] > 0) term = target.mul(term, power_of(i, t.m[i]));
      parts.push_back(std::move(term));
    }
    return target.sum(parts);
  }
  Poly substitute(const Poly& f, const std::vector<Poly>& images) const {
    return substitute(f, *this, images, [](const Elem& c) { return c; });
  }

  // Same polynomial in another ring with the same variables (possibly a different order).
  template <class D, class Map>
  Polynomial<D> map_coefficients(const Poly& f, const PolyRing<D>& target, Map coeff_map) const {
    std::vector<Term<D>> raw;
    raw.reserve(f.terms.size());
    for (const auto& t : f.terms) raw.push_back({t.m, coeff_map(t.c)});
    return target.collect(std::move(raw));
  }
  Poly reorder(const Poly& f, const PolyRing& source) const {
    return source.map_coefficients(f, *this, [](const Elem& c) { return c; });
  }

  std::string to_string(const Poly& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms) {
      std::string c = coeffs_.to_string(t.c);
      bool negative = !c.empty() && c[0] == '-';
      if (!first) out << (negative ? " - " : " + ");
      else if (negative) out << "-";
      if (negative) c = c.substr(1);
      first = false;
      if (t.m.is_one()) {
        out << c;
      } else {
        if (c != "1") out << c << "*";
        out << ring::to_string(t.m, names_);
      }
    }
    return out.str();
  }

 private:
  Poly combine(const Poly& a, const Poly& b, bool subtract) const {
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      int cmp;
      if (i == a.terms.size()) cmp = -1;
      else if (j == b.terms.size()) cmp = 1;
      else cmp = compare(a.terms[i].m, b.terms[j].m);
      if (cmp > 0) {
        out.terms.push_back(a.terms[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms[j++];
        out.terms.push_back({t.m, subtract ? coeffs_.neg(t.c) : t.c});
      } else {
        auto c = subtract ? coeffs_.sub(a.terms[i].c, b.terms[j].c) : coeffs_.add(a.terms[i].c, b.terms[j].c);
        if (!coeffs_.is_zero(c)) out.terms.push_back({a.terms[i].m, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  C coeffs_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

}  // namespace logfw::ring
