#include "logfw/fwdiff/oracle.hpp"

#include <algorithm>
#include <map>

#include "logfw/ring/toric.hpp"

namespace logfw::fwdiff {

namespace {

using Vec = FiniteRing::Vec;
using Mat = std::vector<std::vector<std::int64_t>>;

std::int64_t md(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = md(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Linear map D(a) = L theta stored as d x P, row-major.
struct Linear {
  std::size_t d, cols;
  std::vector<std::int64_t> v;
  Linear(std::size_t d_, std::size_t c_) : d(d_), cols(c_), v(d_ * c_, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

Linear slot_map(std::size_t d, std::size_t cols, std::size_t slot) {
  Linear out(d, cols);
  for (std::size_t i = 0; i < d; ++i) out.at(i, slot * d + i) = 1;
  return out;
}

// acc += sign * A L (mod p)
void add_product(Linear& acc, const Mat& a, const Linear& l, std::int64_t sign, std::int64_t p) {
  for (std::size_t i = 0; i < acc.d; ++i)
    for (std::size_t k = 0; k < acc.d; ++k) {
      const auto c = md(sign * a[i][k], p);
      if (c == 0) continue;
      for (std::size_t j = 0; j < acc.cols; ++j) acc.at(i, j) = (acc.at(i, j) + c * l.at(k, j)) % p;
    }
}

void add_scaled(Linear& acc, const Linear& l, std::int64_t sign, std::int64_t p) {
  for (std::size_t i = 0; i < acc.v.size(); ++i) acc.v[i] = md(acc.v[i] + sign * l.v[i], p);
}

void insert_rows(EchelonSpace& space, const Linear& l, std::size_t& count) {
  for (std::size_t i = 0; i < l.d; ++i) {
    ++count;
    space.insert(std::vector<std::int64_t>(l.v.begin() + static_cast<std::ptrdiff_t>(i * l.cols),
                                           l.v.begin() + static_cast<std::ptrdiff_t>((i + 1) * l.cols)));
  }
}

bool divisible(const std::vector<int>& a, const std::vector<int>& by) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < by[i]) return false;
  return true;
}

std::vector<int> exponents(const ring::Monomial& m, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = m[i];
  return out;
}

}  // namespace

FiniteRing FiniteRing::from_prelog(const prelog::PrelogRing<arith::GaloisField>& p, const Budgets& budgets) {
  FiniteRing out;
  const auto& pr = p.ring();
  const auto& field = pr.field();
  out.field_ = field;
  out.p_ = field.characteristic();
  out.m_ = field.degree();
  out.nvars_ = pr.ring().nvars();
  out.s_ = p.is_mixed() ? 2 : 1;
  out.modulus_ = out.s_ == 2 ? out.p_ * out.p_ : out.p_;
  out.field_modulus_ = field.modulus();
  const bool has_z = out.m_ > 1;
  const int n_ext = out.nvars_ + (has_z ? 1 : 0);

  std::vector<std::vector<int>> leading;
  if (out.s_ == 1) {
    const arith::GaloisField fp(field.prime(), 1);
    auto names = pr.ring().names();
    if (has_z) names.push_back("z_");
    ring::PolyRing<arith::GaloisField> ext(fp, names);
    auto embed = [&](const Poly<arith::GaloisField>& f) {
      std::vector<ring::Term<arith::GaloisField>> raw;
      for (const auto& t : f.terms) {
        const auto digits = field.digits(t.c);
        for (std::size_t i = 0; i < digits.size(); ++i) {
          if (digits[i] == 0) continue;
          auto e = exponents(t.m, out.nvars_);
          if (has_z) e.push_back(static_cast<int>(i));
          raw.push_back({ring::Monomial::from_exponents(e), fp.from_int(digits[i])});
        }
      }
      return ext.collect(std::move(raw));
    };
    std::vector<Poly<arith::GaloisField>> gens;
    for (const auto& g : pr.ideal().groebner()) gens.push_back(embed(g));
    if (has_z) {
      std::vector<ring::Term<arith::GaloisField>> raw;
      for (std::size_t i = 0; i < out.field_modulus_.size(); ++i) {
        if (out.field_modulus_[i] == 0) continue;
        std::vector<int> e(static_cast<std::size_t>(n_ext), 0);
        e.back() = static_cast<int>(i);
        raw.push_back({ring::Monomial::from_exponents(e), fp.from_int(out.field_modulus_[i])});
      }
      gens.push_back(ext.collect(std::move(raw)));
    }
    out.ext_ideal_ = std::make_shared<const ring::Ideal<arith::GaloisField>>(ext, gens, budgets);
    for (const auto& g : out.ext_ideal_->groebner()) leading.push_back(exponents(g.terms.front().m, n_ext));
  } else {
    const auto& mixed = pr.mixed();
    const auto p2 = out.modulus_;
    for (const auto& g : mixed.lift_generators) {
      if (g.is_zero()) continue;
      if (g.terms.size() != 1 || md(g.terms[0].c, out.p_) == 0 || md(g.terms[0].c, p2) == 0)
        throw Unsupported("the finite model over Z/p^2 needs an ideal generated by p^2 and monomials");
      leading.push_back(exponents(g.terms[0].m, out.nvars_));
    }
    out.monomial_ideal_ = leading;
  }

  // standard monomials, closed under division, in breadth-first order
  std::vector<std::vector<int>> basis{std::vector<int>(static_cast<std::size_t>(n_ext), 0)};
  auto standard = [&](const std::vector<int>& e) {
    return std::none_of(leading.begin(), leading.end(), [&](const auto& l) { return divisible(e, l); });
  };
  if (!standard(basis[0])) throw ValidationError("the ring is zero");
  auto too_large = [&](std::size_t nb) {
    double size = 1;
    for (std::size_t i = 0; i < nb; ++i) size *= static_cast<double>(out.modulus_);
    return size > static_cast<double>(budgets.oracle_ring_size);
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int v = 0; v < n_ext; ++v) {
      auto e = basis[i];
      ++e[static_cast<std::size_t>(v)];
      if (!standard(e) || std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
      basis.push_back(e);
      if (too_large(basis.size()))
        throw OracleTooLarge("finite ring has more than " + std::to_string(budgets.oracle_ring_size) + " elements");
    }
  out.basis_ = basis;
  out.size_ = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) out.size_ *= static_cast<std::size_t>(out.modulus_);
  auto names = pr.ring().names();
  if (has_z) names.push_back("z");
  for (const auto& e : basis) {
    std::string label;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!label.empty()) label += "*";
      label += names[v] + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    }
    out.labels_.push_back(label.empty() ? "1" : label);
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec u(basis.size(), 0);
    u[j] = 1;
    out.unit_vectors_.push_back(std::move(u));
  }
  out.table_.assign(basis.size(), std::vector<Vec>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto e = basis[i];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] += basis[j][v];
      out.table_[i][j] = out.reduce_monomial(e);
    }
  return out;
}

Vec FiniteRing::reduce_monomial(const std::vector<int>& e) const {
  Vec out = zero();
  if (s_ == 2) {
    for (const auto& l : monomial_ideal_)
      if (divisible(e, l)) return out;
  } else {
    const auto& ext = ext_ideal_->ring();
    const auto nf = ext_ideal_->normal_form(ext.monomial(ext.coeffs().one(), ring::Monomial::from_exponents(e)));
    for (const auto& t : nf.terms) {
      const auto te = exponents(t.m, ext.nvars());
      const auto it = std::find(basis_.begin(), basis_.end(), te);
      if (it == basis_.end()) throw InternalError("normal form left the standard monomials");
      out[static_cast<std::size_t>(it - basis_.begin())] = ext.coeffs().digits(t.c)[0];
    }
    return out;
  }
  const auto it = std::find(basis_.begin(), basis_.end(), e);
  if (it == basis_.end()) throw InternalError("monomial outside the standard basis");
  out[static_cast<std::size_t>(it - basis_.begin())] = 1;
  return out;
}

Vec FiniteRing::one() const { return unit_vectors_[0]; }

Vec FiniteRing::add(const Vec& a, const Vec& b) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % modulus_;
  return out;
}

Vec FiniteRing::scale(const Vec& a, std::int64_t c) const {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = md(a[i] * c, modulus_);
  return out;
}

Vec FiniteRing::mul(const Vec& a, const Vec& b) const {
  Vec out = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const auto c = a[i] * b[j] % modulus_;
      const auto& t = table_[i][j];
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k]) out[k] = (out[k] + c * t[k]) % modulus_;
    }
  }
  return out;
}

Vec FiniteRing::pow(const Vec& a, std::uint64_t e) const {
  Vec out = one(), b = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = mul(out, b);
    if (e > 1) b = mul(b, b);
  }
  return out;
}

std::size_t FiniteRing::index(const Vec& a) const {
  std::size_t out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(md(a[i], modulus_));
  return out;
}

Vec FiniteRing::element(std::size_t idx) const {
  Vec out = zero();
  for (auto& d : out) {
    d = static_cast<std::int64_t>(idx % static_cast<std::size_t>(modulus_));
    idx /= static_cast<std::size_t>(modulus_);
  }
  return out;
}

Vec FiniteRing::generator(int i) const {
  std::vector<int> e(basis_[0].size(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return reduce_monomial(e);
}

Vec FiniteRing::from_fiber(const Poly<arith::GaloisField>& f) const {
  Vec out = zero();
  for (const auto& t : f.terms) {
    const auto digits = field_.digits(t.c);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) continue;
      auto e = exponents(t.m, nvars_);
      if (m_ > 1) e.push_back(static_cast<int>(i));
      out = add(out, scale(reduce_monomial(e), digits[i]));
    }
  }
  return out;
}

Vec FiniteRing::from_lift(const Poly<arith::ZModP2>& f) const {
  if (s_ != 2) throw InternalError("lifted polynomial on a ring of characteristic p");
  Vec out = zero();
  for (const auto& t : f.terms) out = add(out, scale(reduce_monomial(exponents(t.m, nvars_)), t.c));
  return out;
}

Vec FiniteRing::residue(const Vec& a) const {
  const auto z = field_.from_digits({0, 1});
  auto value = field_.zero();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (md(a[j], p_) == 0) continue;
    const auto& e = basis_[j];
    if (std::any_of(e.begin(), e.begin() + nvars_, [](int x) { return x > 0; })) continue;
    auto term = field_.from_int(a[j]);
    if (m_ > 1)
      for (int k = 0; k < e.back(); ++k) term = field_.mul(term, z);
    value = field_.add(value, term);
  }
  auto digits = field_.digits(value);
  digits.resize(static_cast<std::size_t>(m_), 0);
  return digits;
}

FiniteModule::FiniteModule(const FiniteRing& r, ModuleKind kind)
    : ring_(&r), kind_(kind), dim_(kind == ModuleKind::residue_field ? static_cast<std::size_t>(r.field_degree()) : r.basis_size()) {}

std::vector<std::vector<std::int64_t>> FiniteModule::action(const FiniteRing::Vec& a) const {
  const auto p = ring_->p();
  Mat out(dim_, std::vector<std::int64_t>(dim_, 0));
  if (kind_ == ModuleKind::ring_mod_p) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto col = ring_->mul(a, ring_->basis_element(j));
      for (std::size_t i = 0; i < dim_; ++i) out[i][j] = md(col[i], p);
    }
    return out;
  }
  // multiplication by the residue on F_q = F_p[z]/(g), column j = a * z^j
  FiniteRing::Vec zj = ring_->one();
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto col = ring_->residue(ring_->mul(a, zj));
    for (std::size_t i = 0; i < dim_; ++i) out[i][j] = md(col[i], p);
    if (ring_->field_degree() > 1) zj = ring_->mul(zj, ring_->generator(ring_->nvars()));
  }
  return out;
}

std::string module_name(ModuleKind kind) { return kind == ModuleKind::residue_field ? "k" : "R/pR"; }

std::vector<std::int64_t> EchelonSpace::reduce(std::vector<std::int64_t> v) const {
  for (auto& x : v) x = md(x, p_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) v[j] = md(v[j] - c * rows_[r][j], p_);
  }
  return v;
}

bool EchelonSpace::insert(std::vector<std::int64_t> v) {
  if (rows_.size() == n_) return false;
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  const auto inv = inv_mod_p(v[piv], p_);
  for (auto& x : v) x = x * inv % p_;
  for (auto& row : rows_) {
    const auto c = row[piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) row[j] = md(row[j] - c * v[j], p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonSpace::contains(std::vector<std::int64_t> v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool EchelonSpace::orthogonal(const std::vector<std::int64_t>& v) const {
  for (const auto& row : rows_) {
    std::int64_t dot = 0;
    for (std::size_t j = 0; j < n_; ++j) dot = (dot + row[j] * md(v[j], p_)) % p_;
    if (dot != 0) return false;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> EchelonSpace::annihilator() const {
  std::vector<bool> is_pivot(n_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> x(n_, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = md(-rows_[r][f], p_);
    out.push_back(std::move(x));
  }
  return out;
}

bool FDerOracleResult::is_derivation(const std::vector<std::int64_t>& params) const {
  return constraint_space.orthogonal(params);
}

FDerOracleResult brute_force_fder(const FiniteRing& r, const prelog::PrelogRing<arith::GaloisField>& p,
                                  const FiniteModule& m) {
  const auto prime = r.p();
  const std::size_t d = m.dimension();
  const auto& q = p.monoid();
  FDerOracleResult out;
  out.slots.nvars = r.nvars();
  out.slots.has_z = r.field_degree() > 1;
  out.slots.has_p = r.s() == 2;
  out.slots.ngens = static_cast<int>(q.generators().size());
  const std::size_t cols = out.slots.count() * d;
  out.parameters = cols;
  out.constraint_space = EchelonSpace(prime, cols);
  const std::size_t n = r.size();

  std::vector<Vec> elems(n);
  for (std::size_t a = 0; a < n; ++a) elems[a] = r.element(a);
  std::vector<Mat> act_pow(n);
  for (std::size_t a = 0; a < n; ++a) act_pow[a] = m.action(r.pow(elems[a], static_cast<std::uint64_t>(prime)));
  const Linear dp = out.slots.has_p ? slot_map(d, cols, out.slots.p()) : Linear(d, cols);

  // P(a, b) = sum_{0<k<p} (binom(p,k)/p) a^k b^(p-k), only needed over Z/p^2
  std::vector<std::vector<Vec>> powers;
  auto p_sum = [&](std::size_t a, std::size_t b) {
    Vec acc = r.zero();
    for (std::int64_t k = 1; k < prime; ++k)
      acc = r.add(acc, r.scale(r.mul(powers[a][static_cast<std::size_t>(k)], powers[b][static_cast<std::size_t>(prime - k)]),
                               binomial(prime, k) / prime));
    return acc;
  };
  if (out.slots.has_p) {
    powers.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      powers[a].push_back(r.one());
      for (std::int64_t k = 1; k < prime; ++k) powers[a].push_back(r.mul(powers[a].back(), elems[a]));
    }
  }

  // D on the monomial basis through the product rule, then on all elements
  // through the sum rule; D(0) = D(1) = 0 is forced by either axiom.
  std::vector<Linear> basis_d(r.basis_size(), Linear(d, cols));
  std::vector<std::size_t> basis_index(r.basis_size());
  for (std::size_t j = 0; j < r.basis_size(); ++j) basis_index[j] = r.index(r.basis_element(j));
  const int n_ext = r.nvars() + (out.slots.has_z ? 1 : 0);
  std::map<std::size_t, std::size_t> position;  // element index -> basis position
  for (std::size_t j = 0; j < r.basis_size(); ++j) position[basis_index[j]] = j;
  std::vector<bool> done(r.basis_size(), false);
  done[0] = true;
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t j = 1; j < r.basis_size(); ++j) {
      if (done[j]) continue;
      for (int v = 0; v < n_ext && !done[j]; ++v) {
        const auto gen = r.generator(v);
        // b_j = b' * v for a done basis element b'
        for (std::size_t k = 0; k < r.basis_size(); ++k) {
          if (!done[k] || r.mul(r.basis_element(k), gen) != r.basis_element(j)) continue;
          const auto slot = v < r.nvars() ? out.slots.var(v) : out.slots.z();
          Linear value(d, cols);
          add_product(value, m.action(r.pow(gen, static_cast<std::uint64_t>(prime))), basis_d[k], 1, prime);
          add_product(value, act_pow[basis_index[k]], slot_map(d, cols, slot), 1, prime);
          basis_d[j] = std::move(value);
          done[j] = progress = true;
          break;
        }
      }
    }
  }
  if (std::find(done.begin(), done.end(), false) != done.end()) throw InternalError("basis not reached by the product rule");

  std::vector<Linear> dval(n, Linear(d, cols));
  std::size_t stride = 1;
  std::vector<std::size_t> strides;
  for (std::size_t j = 0; j < r.basis_size(); ++j, stride *= static_cast<std::size_t>(r.modulus())) strides.push_back(stride);
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t j = 0;
    while ((a / strides[j]) % static_cast<std::size_t>(r.modulus()) == 0) ++j;
    const std::size_t prev = a - strides[j];
    Linear value = dval[prev];
    add_scaled(value, basis_d[j], 1, prime);
    if (out.slots.has_p) add_product(value, m.action(p_sum(prev, basis_index[j])), dp, -1, prime);
    dval[a] = std::move(value);
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (out.constraint_space.rank() == cols) break;
      const auto ab = r.index(r.mul(elems[a], elems[b]));
      Linear prod = dval[ab];
      add_product(prod, act_pow[b], dval[a], -1, prime);
      add_product(prod, act_pow[a], dval[b], -1, prime);
      insert_rows(out.constraint_space, prod, out.constraints);
      const auto sum = r.index(r.add(elems[a], elems[b]));
      Linear add = dval[sum];
      add_scaled(add, dval[a], -1, prime);
      add_scaled(add, dval[b], -1, prime);
      if (out.slots.has_p) add_product(add, m.action(p_sum(a, b)), dp, 1, prime);
      insert_rows(out.constraint_space, add, out.constraints);
    }
  }

  for (std::size_t i = 0; i < q.generators().size(); ++i) {
    const auto value = p.is_mixed() ? r.from_lift(p.alpha_lift()[i]) : r.from_fiber(p.alpha()[i]);
    Linear row = dval[r.index(value)];
    add_product(row, m.action(r.pow(value, static_cast<std::uint64_t>(prime))),
                slot_map(d, cols, out.slots.delta(static_cast<int>(i))), -1, prime);
    insert_rows(out.constraint_space, row, out.constraints);
  }
  for (const auto& u : ring::generator_relations(q)) {
    Linear row(d, cols);
    for (std::size_t i = 0; i < u.size(); ++i)
      add_scaled(row, slot_map(d, cols, out.slots.delta(static_cast<int>(i))), md(u[i], prime), prime);
    insert_rows(out.constraint_space, row, out.constraints);
  }
  out.dimension = cols - out.constraint_space.rank();
  return out;
}

HomResult hom_dimension(const FwPresentation<arith::GaloisField>& pres, const FiniteRing& r, const FiniteModule& m) {
  const std::size_t d = m.dimension(), g = pres.generators.size();
  EchelonSpace space(r.p(), g * d);
  for (const auto& row : pres.rows) {
    std::vector<Mat> acts;
    for (const auto& c : row.element.coeffs) acts.push_back(m.action(r.from_fiber(c)));
    for (std::size_t t = 0; t < d; ++t) {
      std::vector<std::int64_t> eq(g * d, 0);
      for (std::size_t j = 0; j < g; ++j)
        for (std::size_t u = 0; u < d; ++u) eq[j * d + u] = acts[j][t][u];
      space.insert(std::move(eq));
    }
  }
  HomResult out;
  out.basis = space.annihilator();
  out.dimension = out.basis.size();
  return out;
}

std::vector<std::int64_t> hom_to_parameters(const std::vector<std::int64_t>& theta,
                                            const FwPresentation<arith::GaloisField>& pres,
                                            const monoid::AffineMonoid& q, const OracleSlots& slots, std::size_t d) {
  const auto prime = pres.ring.coeffs().characteristic();
  const auto& layout = pres.layout;
  std::vector<std::int64_t> out(slots.count() * d, 0);
  auto copy = [&](std::size_t slot, std::size_t gen, std::int64_t c) {
    for (std::size_t u = 0; u < d; ++u) out[slot * d + u] = md(out[slot * d + u] + c * theta[gen * d + u], prime);
  };
  for (int i = 0; i < slots.nvars; ++i) copy(slots.var(i), layout.wvar(i), 1);
  if (slots.has_p) copy(slots.p(), layout.wp(), 1);
  for (int i = 0; i < slots.ngens; ++i) {
    const auto& c = q.generator_coords()[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < c.size(); ++b) copy(slots.delta(i), layout.wlog(static_cast<int>(b)), c[b]);
  }
  return out;
}

OracleComparison compare_with_oracle(const FwPresentation<arith::GaloisField>& pres, const monoid::AffineMonoid& q,
                                     const FiniteRing& r, const FiniteModule& m, const FDerOracleResult& fder) {
  OracleComparison out;
  out.fder_dimension = fder.dimension;
  const auto hom = hom_dimension(pres, r, m);
  out.hom_dimension = hom.dimension;
  out.hom_lands_in_fder = std::all_of(hom.basis.begin(), hom.basis.end(), [&](const auto& theta) {
    return fder.is_derivation(hom_to_parameters(theta, pres, q, fder.slots, m.dimension()));
  });
  return out;
}

namespace {

EchelonSpace relation_span(const FwPresentation<arith::GaloisField>& pres, const FiniteRing& r) {
  const std::size_t g = pres.generators.size(), nb = r.basis_size();
  EchelonSpace span(r.p(), g * nb);
  for (const auto& row : pres.rows) {
    std::vector<Vec> coeffs;
    for (const auto& c : row.element.coeffs) coeffs.push_back(r.from_fiber(c));
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<std::int64_t> v(g * nb, 0);
      for (std::size_t j = 0; j < g; ++j) {
        const auto prod = r.mul(r.basis_element(b), coeffs[j]);
        for (std::size_t t = 0; t < nb; ++t) v[j * nb + t] = prod[t];
      }
      span.insert(std::move(v));
    }
  }
  return span;
}

}  // namespace

bool same_relations(const FwPresentation<arith::GaloisField>& a, const FwPresentation<arith::GaloisField>& b,
                    const FiniteRing& r) {
  const auto sa = relation_span(a, r), sb = relation_span(b, r);
  if (sa.rank() != sb.rank()) return false;
  // equal rank and b's relations inside span(a)
  const std::size_t g = b.generators.size(), nb = r.basis_size();
  for (const auto& row : b.rows) {
    std::vector<std::int64_t> v(g * nb, 0);
    for (std::size_t j = 0; j < g; ++j) {
      const auto c = r.from_fiber(row.element.coeffs[j]);
      for (std::size_t t = 0; t < nb; ++t) v[j * nb + t] = c[t];
    }
    if (!sa.contains(std::move(v))) return false;
  }
  return true;
}

FwPresentation<arith::GaloisField> perturb(const FwPresentation<arith::GaloisField>& pres, std::size_t row,
                                           std::size_t column) {
  auto out = pres;
  auto& c = out.rows.at(row).element.coeffs.at(column);
  c = out.ideal.normal_form(out.ring.add(c, out.ring.one()));
  return out;
}

std::vector<Mutant> mutation_sweep(const FwPresentation<arith::GaloisField>& pres, const monoid::AffineMonoid& q,
                                   const FiniteRing& r, const FiniteModule& m, const FDerOracleResult& fder) {
  std::vector<Mutant> out;
  for (std::size_t i = 0; i < pres.rows.size(); ++i)
    for (std::size_t j = 0; j < pres.generators.size(); ++j) {
      Mutant mt{i, j, false, false};
      const auto mutated = perturb(pres, i, j);
      mt.equivalent = same_relations(pres, mutated, r);
      mt.detected = !compare_with_oracle(mutated, q, r, m, fder).agree();
      out.push_back(mt);
    }
  return out;
}

}  // namespace logfw::fwdiff
