#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "logfw/budgets.hpp"
#include "logfw/ring/polynomial.hpp"

namespace logfw::ring {

// Full reduction of f by a list of polynomials over a field.
template <class F>
Polynomial<F> normal_form(const PolyRing<F>& ring, const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  const auto& k = ring.coeffs();
  std::vector<typename F::Element> lead_inv;
  lead_inv.reserve(basis.size());
  for (const auto& g : basis) lead_inv.push_back(k.inv(g.terms.front().c));
  Polynomial<F> rest = f;
  std::vector<Term<F>> done;
  while (!rest.is_zero()) {
    const Term<F>& lt = rest.terms.front();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& g = basis[i];
      if (!divides(g.terms.front().m, lt.m)) continue;
      const auto c = k.mul(lt.c, lead_inv[i]);
      rest = ring.sub(rest, ring.mul_term(g, c, quotient(lt.m, g.terms.front().m)));
      reduced = true;
      break;
    }
    if (!reduced) {
      done.push_back(lt);
      rest.terms.erase(rest.terms.begin());
    }
  }
  Polynomial<F> out;
  out.terms = std::move(done);
  return out;
}

template <class F>
Polynomial<F> make_monic(const PolyRing<F>& ring, const Polynomial<F>& f) {
  if (f.is_zero()) return f;
  return ring.scale(f, ring.coeffs().inv(f.terms.front().c));
}

// Reduced Groebner basis (monic, sorted by increasing leading monomial) via
// Buchberger's algorithm with the coprime and chain criteria.
template <class F>
std::vector<Polynomial<F>> groebner_basis(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens,
                                          const Budgets& budgets) {
  using Poly = Polynomial<F>;
  std::vector<Poly> g;
  for (const auto& f : gens) {
    Poly h = make_monic(ring, normal_form(ring, f, g));
    if (h.is_zero()) continue;
    if (h.terms.front().m.is_one()) return {ring.one()};
    g.push_back(std::move(h));
  }
  auto lm = [&](std::size_t i) -> const Monomial& { return g[i].terms.front().m; };

  std::set<std::pair<std::size_t, std::size_t>> queue, treated;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.insert({i, j});

  std::size_t processed = 0;
  while (!queue.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = queue.begin();
    Monomial best_lcm = lcm(lm(best->first), lm(best->second));
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it) {
      const Monomial l = lcm(lm(it->first), lm(it->second));
      if (ring.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    queue.erase(best);
    treated.insert({i, j});
    if (++processed > budgets.groebner_pairs) throw BudgetExceeded("Groebner pair budget exhausted");

    if (coprime(lm(i), lm(j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(lm(k), best_lcm)) continue;
      const auto ik = std::minmax(i, k), jk = std::minmax(j, k);
      chain = !queue.count({ik.first, ik.second}) && !queue.count({jk.first, jk.second});
    }
    if (chain) continue;

    const auto& k = ring.coeffs();
    Poly s = ring.sub(ring.mul_term(g[i], k.one(), quotient(best_lcm, lm(i))),
                      ring.mul_term(g[j], k.one(), quotient(best_lcm, lm(j))));
    Poly h = make_monic(ring, normal_form(ring, s, g));
    if (h.is_zero()) continue;
    if (h.terms.front().m.is_one()) return {ring.one()};
    g.push_back(std::move(h));
    const std::size_t n = g.size() - 1;
    for (std::size_t a = 0; a < n; ++a) queue.insert({a, n});
  }

  // Minimalize then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(lm(j), lm(i))) continue;
      redundant = !(lm(j) == lm(i)) || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    Poly r = normal_form(ring, tail, others);
    r.terms.insert(r.terms.begin(), minimal[i].terms.front());
    reduced.push_back(make_monic(ring, r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return ring.compare(a.terms.front().m, b.terms.front().m) < 0; });
  return reduced;
}

// An ideal with a lazily computed, cached reduced Groebner basis. Copies share
// the cache; the cache is filled at most once.
template <class F>
class Ideal {
 public:
  using Poly = Polynomial<F>;

  Ideal(PolyRing<F> ring, std::vector<Poly> gens, Budgets budgets = {})
      : ring_(std::move(ring)), gens_(std::move(gens)), budgets_(budgets), cache_(std::make_shared<Cache>()) {}

  const PolyRing<F>& ring() const noexcept { return ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  const std::vector<Poly>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(ring_, gens_, budgets_); });
    return cache_->basis;
  }
  Poly normal_form(const Poly& f) const { return ring::normal_form(ring_, f, groebner()); }
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const {
    const auto& g = groebner();
    return g.size() == 1 && g.front().terms.front().m.is_one();
  }
  bool same_as(const Ideal& other) const {
    const auto& a = groebner();
    const auto& b = other.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!ring_.equal(a[i], b[i])) return false;
    return true;
  }
  Ideal plus(const std::vector<Poly>& more) const {
    std::vector<Poly> g = gens_;
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(ring_, std::move(g), budgets_);
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
  };

  PolyRing<F> ring_;
  std::vector<Poly> gens_;
  Budgets budgets_;
  std::shared_ptr<Cache> cache_;
};

// Krull dimension of k[x]/I from the leading-term ideal: the largest set of
// variables containing the support of no leading monomial. Returns -1 for the
// unit ideal.
template <class F>
int ideal_dimension(const Ideal<F>& ideal) {
  if (ideal.is_unit_ideal()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.groebner()) supports.push_back(g.terms.front().m.support());
  const int n = ideal.ring().nvars();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto sup : supports)
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace logfw::ring
