#include "logfw/monoid/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "logfw/error.hpp"

namespace logfw::monoid {

namespace {

std::int64_t narrow(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) throw IntegerOverflow("lattice arithmetic overflow");
  return static_cast<std::int64_t>(x);
}

// row_a <- x*row_a + y*row_b ; row_b <- u*row_a + v*row_b (simultaneously)
void combine_rows(IntVec& ra, IntVec& rb, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
  for (std::size_t j = 0; j < ra.size(); ++j) {
    const __int128 a = ra[j], b = rb[j];
    ra[j] = narrow(a * x + b * y);
    rb[j] = narrow(a * u + b * v);
  }
}

void axpy(IntVec& target, const IntVec& src, std::int64_t c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = narrow(static_cast<__int128>(target[j]) - static_cast<__int128>(c) * src[j]);
}

// g = x*a + y*b with g = gcd(a, b) >= 0
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

IntMat identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& a, std::size_t rows, std::size_t cols) {
  IntMat t(cols, IntVec(rows, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

HermiteForm hermite_form(const IntMat& a, std::size_t cols) {
  HermiteForm out;
  out.h = a;
  for (auto& row : out.h)
    if (row.size() != cols) throw InternalError("ragged integer matrix");
  const std::size_t m = out.h.size();
  out.transform = identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (out.h[i][c] == 0) continue;
      const std::int64_t av = out.h[r][c], bv = out.h[i][c];
      std::int64_t x, y;
      const std::int64_t g = ext_gcd(av, bv, x, y);
      const std::int64_t u = -bv / g, v = av / g;
      combine_rows(out.h[r], out.h[i], x, y, u, v);
      combine_rows(out.transform[r], out.transform[i], x, y, u, v);
    }
    if (out.h[r][c] == 0) continue;
    if (out.h[r][c] < 0) {
      for (auto& e : out.h[r]) e = -e;
      for (auto& e : out.transform[r]) e = -e;
    }
    const std::int64_t piv = out.h[r][c];
    for (std::size_t i = 0; i < r; ++i) {
      const std::int64_t q = floor_div(out.h[i][c], piv);
      axpy(out.h[i], out.h[r], q);
      axpy(out.transform[i], out.transform[r], q);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMat lattice_basis(const IntMat& rows, std::size_t cols) {
  auto hf = hermite_form(rows, cols);
  hf.h.resize(hf.rank);
  return hf.h;
}

SmithForm smith_form(const IntMat& a, std::size_t cols) {
  const std::size_t m = a.size();
  IntMat d = a;
  IntMat left = identity(m);
  IntMat right = identity(cols);  // columns operations applied as row ops on the transpose
  IntMat right_t = identity(cols);
  std::vector<std::int64_t> diag;

  auto col_op = [&](std::size_t ca, std::size_t cb, std::int64_t x, std::int64_t y, std::int64_t u, std::int64_t v) {
    for (std::size_t i = 0; i < m; ++i) {
      const __int128 p = d[i][ca], q = d[i][cb];
      d[i][ca] = narrow(p * x + q * y);
      d[i][cb] = narrow(p * u + q * v);
    }
    combine_rows(right_t[ca], right_t[cb], x, y, u, v);
  };

  for (std::size_t t = 0; t < std::min(m, cols); ++t) {
    // pick the smallest nonzero entry of the trailing block
    std::size_t pi = m, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (best == 0 || std::llabs(d[i][j]) < best)) {
          best = std::llabs(d[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(d[t], d[pi]);
    std::swap(left[t], left[pi]);
    if (pj != t) col_op(t, pj, 0, 1, 1, 0);

    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        if (d[i][t] % d[t][t] == 0) {
          const std::int64_t q = d[i][t] / d[t][t];
          axpy(d[i], d[t], q);
          axpy(left[i], left[t], q);
          continue;
        }
        std::int64_t x, y;
        const std::int64_t av = d[t][t], bv = d[i][t];
        const std::int64_t g = ext_gcd(av, bv, x, y);
        combine_rows(d[t], d[i], x, y, -bv / g, av / g);
        combine_rows(left[t], left[i], x, y, -bv / g, av / g);
        changed = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        if (d[t][j] % d[t][t] == 0) {
          col_op(t, j, 1, 0, -(d[t][j] / d[t][t]), 1);
          continue;
        }
        std::int64_t x, y;
        const std::int64_t av = d[t][t], bv = d[t][j];
        const std::int64_t g = ext_gcd(av, bv, x, y);
        col_op(t, j, x, y, -bv / g, av / g);
        changed = true;
      }
      if (changed) continue;
      // divisibility: fold any non-multiple into row t and repeat
      bool folded = false;
      for (std::size_t i = t + 1; i < m && !folded; ++i)
        for (std::size_t j = t + 1; j < cols && !folded; ++j)
          if (d[i][j] % d[t][t] != 0) {
            axpy(d[t], d[i], -1);
            axpy(left[t], left[i], -1);
            folded = true;
          }
      if (!folded) break;
    }
    if (d[t][t] < 0) {
      for (auto& e : d[t]) e = -e;
      for (auto& e : left[t]) e = -e;
    }
    diag.push_back(d[t][t]);
  }
  right = transpose(right_t, cols, cols);
  return {left, right, diag};
}

IntMat integer_kernel(const IntMat& a, std::size_t cols) {
  if (a.empty()) return identity(cols);
  const auto sf = smith_form(a, cols);
  IntMat basis;
  for (std::size_t j = sf.diagonal.size(); j < cols; ++j) {
    IntVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = sf.right[i][j];
    basis.push_back(std::move(v));
  }
  return lattice_basis(basis, cols);
}

std::optional<IntVec> lattice_coordinates(const IntMat& rows, const IntVec& v, std::size_t cols) {
  const auto hf = hermite_form(rows, cols);
  IntVec rest = v;
  IntVec ch(rows.size(), 0);
  for (std::size_t r = 0; r < hf.rank; ++r) {
    const std::size_t c = hf.pivots[r];
    if (rest[c] % hf.h[r][c] != 0) return std::nullopt;
    ch[r] = rest[c] / hf.h[r][c];
    axpy(rest, hf.h[r], ch[r]);
  }
  if (!is_zero(rest)) return std::nullopt;
  // c = ch * U
  IntVec out(rows.size(), 0);
  for (std::size_t r = 0; r < hf.rank; ++r)
    for (std::size_t i = 0; i < rows.size(); ++i)
      out[i] = narrow(static_cast<__int128>(out[i]) + static_cast<__int128>(ch[r]) * hf.transform[r][i]);
  return out;
}

std::size_t rational_rank(const IntMat& rows, std::size_t cols) { return hermite_form(rows, cols).rank; }

IntMat unimodular_inverse(const IntMat& u) {
  const std::size_t n = u.size();
  auto hf = hermite_form(u, n);
  // U is unimodular so its HNF is the identity and the transform is U^{-1}.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (hf.h[i][j] != (i == j ? 1 : 0)) throw InternalError("matrix is not unimodular");
  return hf.transform;
}

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, std::llabs(x));
  if (g <= 1) return v;
  IntVec out(v);
  for (auto& x : out) x /= g;
  return out;
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return narrow(s);
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = narrow(static_cast<__int128>(a[i]) + b[i]);
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = narrow(static_cast<__int128>(a[i]) - b[i]);
  return out;
}

IntVec scale(const IntVec& a, std::int64_t c) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = narrow(static_cast<__int128>(a[i]) * c);
  return out;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  IntVec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

bool is_zero(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::string to_string(const IntVec& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

LatticeSplit split_sublattice(const IntMat& sub_rows, std::size_t k) {
  LatticeSplit out;
  const IntMat basis = lattice_basis(sub_rows, k);
  const std::size_t l = basis.size();
  IntMat q_inv;
  IntMat q;
  if (l == 0) {
    q = identity(k);
    q_inv = identity(k);
  } else {
    // basis (l x k): P B R = [D 0], so the row lattice is {z [D 0] R^{-1}}.
    const auto sf = smith_form(basis, k);
    for (auto d : sf.diagonal)
      if (d != 1) throw Unsupported("quotient lattice has torsion (unit group not saturated in Q^gp)");
    q = sf.right;
    q_inv = unimodular_inverse(q);
  }
  for (std::size_t j = l; j < k; ++j) {
    // rows of the lattice satisfy x R = z [D 0]; proj reads the trailing
    // coordinates of x R and lifts are the rows of R^{-1}.
    IntVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = q[i][j];
    out.proj.push_back(std::move(row));
    IntVec lift = q_inv[j];
    // canonical representative modulo the sublattice
    const auto hf = hermite_form(basis, k);
    for (std::size_t r = 0; r < hf.rank; ++r) {
      const std::size_t c = hf.pivots[r];
      axpy(lift, hf.h[r], floor_div(lift[c], hf.h[r][c]));
    }
    out.lifts.push_back(std::move(lift));
  }
  return out;
}

}  // namespace logfw::monoid
