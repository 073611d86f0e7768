#include "logfw/arith/galois_field.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "logfw/error.hpp"

namespace logfw::arith {

namespace {

using Digits = std::vector<std::int64_t>;

// Powers of z in F_p[z]/(g); empty result if z is not primitive.
std::vector<GaloisField::Element> powers_of_z(std::int64_t p, int m, const Digits& g, std::int64_t q) {
  auto encode = [&](const Digits& d) {
    std::int64_t v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + d[static_cast<std::size_t>(i)];
    return static_cast<GaloisField::Element>(v);
  };
  std::vector<GaloisField::Element> exp;
  exp.reserve(static_cast<std::size_t>(q - 1));
  Digits cur(static_cast<std::size_t>(m), 0);
  cur[0] = 1;
  for (std::int64_t k = 0; k < q - 1; ++k) {
    const auto v = encode(cur);
    if (k > 0 && v == 1) return {};
    exp.push_back(v);
    // cur *= z
    const std::int64_t top = cur[static_cast<std::size_t>(m - 1)];
    for (int i = m - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    for (int i = 0; i < m; ++i)
      cur[static_cast<std::size_t>(i)] = mod(cur[static_cast<std::size_t>(i)] - top * g[static_cast<std::size_t>(i)], p);
  }
  if (encode(cur) != 1) return {};
  return exp;
}

std::vector<GaloisField::Element> powers_of_root(std::int64_t p) {
  for (std::int64_t r = 1; r < p; ++r) {
    std::vector<GaloisField::Element> exp;
    std::int64_t cur = 1;
    bool primitive = true;
    for (std::int64_t k = 0; k < p - 1; ++k) {
      if (k > 0 && cur == 1) {
        primitive = false;
        break;
      }
      exp.push_back(static_cast<GaloisField::Element>(cur));
      cur = cur * r % p;
    }
    if (primitive) return exp;
  }
  return {1};
}

}  // namespace

std::vector<std::int64_t> conway_polynomial(std::int64_t p, int m) {
  static const std::map<std::pair<std::int64_t, int>, Digits> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 1, 4, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  auto it = table.find({p, m});
  return it == table.end() ? Digits{} : it->second;
}

GaloisField::GaloisField(const Prime& p, int m) : prime_(p), m_(m), q_(1) {
  if (m < 1) throw ValidationError("finite field degree must be >= 1");
  for (int i = 0; i < m; ++i) {
    q_ = checked_mul(q_, p.value());
    if (q_ > kMaxOrder) throw Unsupported("finite field of order p^m > 2^20");
  }
  auto tables = std::make_shared<Tables>();
  const std::int64_t pv = p.value();
  if (m == 1) {
    tables->modulus = {0, 1};
    tables->exp = powers_of_root(pv);
  } else {
    Digits g = conway_polynomial(pv, m);
    if (!g.empty()) tables->exp = powers_of_z(pv, m, g, q_);
    if (tables->exp.empty()) {
      // Search monic degree-m polynomials in lexicographic order of coefficients.
      for (std::int64_t code = 0; code < q_ && tables->exp.empty(); ++code) {
        g.assign(static_cast<std::size_t>(m) + 1, 0);
        std::int64_t c = code;
        for (int i = 0; i < m; ++i) {
          g[static_cast<std::size_t>(i)] = c % pv;
          c /= pv;
        }
        g[static_cast<std::size_t>(m)] = 1;
        if (g[0] == 0) continue;
        tables->exp = powers_of_z(pv, m, g, q_);
      }
      if (tables->exp.empty()) throw InternalError("no primitive polynomial found");
    }
    tables->modulus = g;
  }
  tables->log.assign(static_cast<std::size_t>(q_), -1);
  for (std::size_t k = 0; k < tables->exp.size(); ++k) tables->log[tables->exp[k]] = static_cast<std::int64_t>(k);
  tables_ = std::move(tables);
}

GaloisField::Element GaloisField::from_digits(const std::vector<std::int64_t>& digits) const {
  std::int64_t v = 0;
  const std::int64_t p = prime_.value();
  for (int i = m_ - 1; i >= 0; --i) {
    const std::int64_t d = static_cast<std::size_t>(i) < digits.size() ? mod(digits[static_cast<std::size_t>(i)], p) : 0;
    v = v * p + d;
  }
  // Digits beyond degree m - 1 are folded in through z^k.
  Element out = static_cast<Element>(v);
  for (std::size_t i = static_cast<std::size_t>(m_); i < digits.size(); ++i) {
    const Element c = from_int(digits[i]);
    if (c != 0) out = add(out, mul(c, pow(m_ == 1 ? Element{0} : static_cast<Element>(p), i)));
  }
  return out;
}

std::vector<std::int64_t> GaloisField::digits(Element a) const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(m_), 0);
  std::int64_t v = a;
  for (int i = 0; i < m_; ++i) {
    d[static_cast<std::size_t>(i)] = v % prime_.value();
    v /= prime_.value();
  }
  return d;
}

GaloisField::Element GaloisField::add(Element a, Element b) const noexcept {
  const std::int64_t p = prime_.value();
  if (m_ == 1) return static_cast<Element>((a + b) % p);
  std::int64_t out = 0, scale = 1;
  std::int64_t x = a, y = b;
  for (int i = 0; i < m_; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<Element>(out);
}

GaloisField::Element GaloisField::neg(Element a) const noexcept {
  const std::int64_t p = prime_.value();
  if (m_ == 1) return static_cast<Element>((p - a) % p);
  std::int64_t out = 0, scale = 1;
  std::int64_t x = a;
  for (int i = 0; i < m_; ++i) {
    out += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return static_cast<Element>(out);
}

GaloisField::Element GaloisField::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

GaloisField::Element GaloisField::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  const auto& t = *tables_;
  return t.exp[static_cast<std::size_t>((t.log[a] + t.log[b]) % (q_ - 1))];
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw InternalError("inverse of zero in F_q");
  const auto& t = *tables_;
  return t.exp[static_cast<std::size_t>((q_ - 1 - t.log[a]) % (q_ - 1))];
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& t = *tables_;
  const auto k = static_cast<std::uint64_t>(t.log[a]) * (e % static_cast<std::uint64_t>(q_ - 1));
  return t.exp[static_cast<std::size_t>(k % static_cast<std::uint64_t>(q_ - 1))];
}

std::string GaloisField::to_string(Element a, const std::string& symbol) const {
  if (m_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream out;
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
    const auto c = d[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    out << symbol;
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

}  // namespace logfw::arith
