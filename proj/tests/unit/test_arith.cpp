#include <random>
#include <set>

#include "doctest.h"
#include "logfw/arith/galois_field.hpp"
#include "logfw/arith/lift.hpp"
#include "logfw/arith/rational_function.hpp"
#include "logfw/error.hpp"

using namespace logfw;
using namespace logfw::arith;

namespace {

// P(X, Y) mod p from the binomial expansion sum_{0<k<p} (C(p,k)/p) X^k Y^{p-k}.
std::int64_t binomial_p(std::int64_t x, std::int64_t y, std::int64_t p) {
  std::int64_t total = 0, c = 1;
  for (std::int64_t k = 1; k < p; ++k) {
    c = c * (p - k + 1) / k;  // C(p, k), exact for small p
    total += (c / p % p) * pow_mod(x, static_cast<std::uint64_t>(k), p) % p * pow_mod(y, static_cast<std::uint64_t>(p - k), p);
    total %= p;
  }
  return mod(total, p);
}

// Schoolbook product in F_p[z]/(g), independent of the log tables.
std::vector<std::int64_t> slow_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                   const std::vector<std::int64_t>& g, std::int64_t p) {
  const std::size_t m = g.size() - 1;
  std::vector<std::int64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * m - 1; k >= m; --k) {
    const std::int64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) prod[k - m + i] = mod(prod[k - m + i] - c * g[i], p);
  }
  prod.resize(m);
  return prod;
}

}  // namespace

TEST_CASE("prime validation") {
  CHECK_THROWS_AS(Prime(4), ValidationError);
  CHECK_THROWS_AS(Prime(1), ValidationError);
  CHECK(Prime(7).squared() == 49);
}

TEST_CASE("fermat quotient values") {
  for (std::int64_t p : {2, 3, 5, 7, 11}) CHECK(fermat_quotient(1, Prime(p)) == 0);
  CHECK(fermat_quotient(3, Prime(2)) == 1);
  for (std::int64_t p : {2, 3, 5, 7, 11}) CHECK(fermat_quotient(p, Prime(p)) == p - 1);
  // Direct evaluation of (n^p - n)/p for small n.
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t n = -20; n <= 20; ++n) {
      __int128 np = 1;
      for (int i = 0; i < p; ++i) np *= n;
      const auto q = static_cast<std::int64_t>((np - n) / p);
      CHECK(fermat_quotient(n, Prime(p)) == mod(q, p));
    }
  }
}

TEST_CASE("fermat quotient is a logarithmic derivation") {
  std::mt19937_64 rng(7);
  for (std::int64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (int i = 0; i < 2000; ++i) {
      const std::int64_t m = static_cast<std::int64_t>(rng() % 2000) - 1000;
      const std::int64_t n = static_cast<std::int64_t>(rng() % 2000) - 1000;
      const std::int64_t lhs = fermat_quotient(m * n, p);
      const std::int64_t rhs = mod(pow_mod(m, pv, pv) * fermat_quotient(n, p) + pow_mod(n, pv, pv) * fermat_quotient(m, p), pv);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("p_sum_correction examples and binomial oracle") {
  CHECK(p_sum_correction(std::vector<std::int64_t>{1, 1}, Prime(3)) == 2);
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t a = -5; a < 30; ++a) CHECK(p_sum_correction(std::vector<std::int64_t>{a, 0}, Prime(p)) == 0);
  std::mt19937_64 rng(11);
  for (std::int64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % 10000), b = static_cast<std::int64_t>(rng() % 10000);
      CHECK(p_sum_correction(std::vector<std::int64_t>{a, b}, p) == binomial_p(a, b, pv));
    }
  }
}

TEST_CASE("P_n agrees on p-local rationals and their integer residues") {
  const Prime p(5);
  const PLocalRational a(3, 7, p), b(-2, 3, p), c(11, 1, p);
  const auto la = a.lift().residue(), lb = b.lift().residue(), lc = c.lift().residue();
  CHECK(p_sum_correction(std::vector<PLocalRational>{a, b, c}, p) == p_sum_correction(std::vector<std::int64_t>{la, lb, lc}, p));
  CHECK_THROWS_AS(PLocalRational(1, 5, p), ValidationError);
}

TEST_CASE("F_q field arithmetic matches schoolbook multiplication") {
  for (auto [pv, m] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
    const GaloisField f(Prime(pv), m);
    CHECK(f.order() == [&] { std::int64_t q = 1; for (int i = 0; i < m; ++i) q *= pv; return q; }());
    CHECK(f.modulus() == conway_polynomial(pv, m));
    const auto q = static_cast<GaloisField::Element>(f.order());
    const GaloisField::Element step = q > 64 ? 7 : 1;
    for (GaloisField::Element a = 0; a < q; a += step) {
      for (GaloisField::Element b = 0; b < q; b += step) {
        CHECK(f.digits(f.mul(a, b)) == slow_mul(f.digits(a), f.digits(b), f.modulus(), pv));
        CHECK(f.sub(f.add(a, b), b) == a);
      }
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, static_cast<std::uint64_t>(q)) == a);
    }
    CHECK(f.digits(f.generator()) == (m == 1 ? f.digits(f.generator()) : [&] { std::vector<std::int64_t> z(static_cast<std::size_t>(m), 0); z[1] = 1; return z; }()));
  }
}

TEST_CASE("F_q generator is primitive and frobenius is additive") {
  const GaloisField f(Prime(3), 2);
  std::set<GaloisField::Element> seen;
  for (int k = 0; k < 8; ++k) seen.insert(f.exp(k));
  CHECK(seen.size() == 8);
  for (GaloisField::Element a = 0; a < 9; ++a)
    for (GaloisField::Element b = 0; b < 9; ++b) CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
  CHECK(f.to_string(f.generator()) == "z");
}

TEST_CASE("multivariate gcd over F_p") {
  const FpPolyRing ring(Prime(3), 2);
  const FpPoly t1 = ring.variable(0), t2 = ring.variable(1), one = ring.constant(1);
  const FpPoly a = ring.add(t1, t2);
  const FpPoly b = ring.sub(t1, ring.mul(t2, t2));
  const FpPoly c = ring.add(ring.mul(t1, t2), one);
  const FpPoly g = ring.gcd(ring.mul(ring.mul(a, b), c), ring.mul(ring.mul(a, c), ring.pow(b, 2)));
  CHECK(g == ring.make_monic(ring.mul(ring.mul(a, b), c)));
  CHECK(ring.gcd(a, b) == one);
  CHECK(ring.divide_exact(ring.mul(a, b), b) == a);
  CHECK_FALSE(ring.divide_exact(a, b).has_value());
}

TEST_CASE("rational function field normal forms and quotient rule") {
  for (int r : {1, 2}) {
    const RationalFunctionField k(Prime(3), r);
    const auto t = k.variable(0);
    const auto inv_t = k.inv(t);
    CHECK(k.is_one(k.mul(t, inv_t)));
    // w(1/t) = -t^{-2p} w(t)
    const auto w = coeff_fw_value(k, inv_t);
    CHECK(k.equal(w[0], k.neg(k.inv(k.pow(t, 6)))));
    CHECK(k.is_zero(coeff_fw_value(k, k.one())[0]));
  }
}

TEST_CASE("coeff_fw_value on F_p(t) equals Frobenius of the partial derivative") {
  // In characteristic p the universal FW-derivation of F_p(t) is c -> sum_j (dc/dt_j)^p w(t_j).
  std::mt19937_64 rng(3);
  for (std::int64_t pv : {2, 3, 5}) {
    const RationalFunctionField k(Prime(pv), 2);
    const auto& ring = k.polynomials();
    auto random_poly = [&] {
      FpPoly f;
      for (int i = 0; i < 4; ++i)
        f = ring.add(f, ring.monomial(static_cast<std::int64_t>(rng() % pv), {static_cast<std::uint16_t>(rng() % 3), static_cast<std::uint16_t>(rng() % 3), 0}));
      return f;
    };
    for (int i = 0; i < 40; ++i) {
      FpPoly den = random_poly();
      if (den.is_zero()) den = ring.constant(1);
      const auto c = k.fraction(random_poly(), den);
      const auto w = coeff_fw_value(k, c);
      for (int j = 0; j < 2; ++j) CHECK(k.equal(w[static_cast<std::size_t>(j)], k.frobenius(k.derivative(c, j))));
    }
  }
}

TEST_CASE("lifting restrictions") {
  const GaloisField f4(Prime(2), 2);
  CHECK_THROWS_AS(p_sum_correction(f4, {1, 2}), NonLiftableCoefficient);
  const GaloisField f5(Prime(5), 1);
  CHECK(p_sum_correction(f5, {1, 1}) == 6 % 5);
  const RationalFunctionField k(Prime(3), 1);
  CHECK_THROWS_AS(p_sum_correction(k, {k.one()}), NonLiftableCoefficient);
}
