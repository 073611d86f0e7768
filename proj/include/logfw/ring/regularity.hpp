#pragma once

#include <vector>

#include "logfw/arith/lift.hpp"
#include "logfw/ring/groebner.hpp"
#include "logfw/ring/linear_algebra.hpp"

namespace logfw::ring {

// Linear parts at the origin: row per generator, column per variable. Throws
// ValidationError if some generator does not vanish at the origin.
template <class F>
Matrix<F> linear_parts_at_origin(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens) {
  const auto& k = ring.coeffs();
  Matrix<F> rows;
  for (const auto& f : gens) {
    if (!k.is_zero(ring.constant_term(f)))
      throw ValidationError("the point does not lie on V(I): generator " + ring.to_string(f) + " has a nonzero value");
    std::vector<typename F::Element> row(static_cast<std::size_t>(ring.nvars()), k.zero());
    for (const auto& t : f.terms)
      if (t.m.deg == 1)
        for (int i = 0; i < ring.nvars(); ++i)
          if (t.m[i] == 1) row[static_cast<std::size_t>(i)] = t.c;
    rows.push_back(std::move(row));
  }
  return rows;
}

// Embedding dimension of the local ring at the origin: n - rank of the Jacobian there.
template <class F>
int embedding_dimension(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens) {
  const auto rows = linear_parts_at_origin(ring, gens);
  return ring.nvars() - static_cast<int>(rows.empty() ? 0 : matrix_rank(ring.coeffs(), rows));
}

struct RegularityResult {
  int dimension = 0;
  int embedding_dimension = 0;
  bool regular = false;
};

// Jacobian criterion at the origin: regular iff edim equals the dimension, with
// the dimension taken affinely (the ring is assumed equidimensional through
// the point).
template <class F>
RegularityResult is_regular_at_origin(const Ideal<F>& ideal) {
  RegularityResult out;
  out.dimension = ideal_dimension(ideal);
  if (out.dimension < 0) throw ValidationError("the ideal is the unit ideal");
  out.embedding_dimension = embedding_dimension(ideal.ring(), ideal.generators());
  out.regular = out.dimension == out.embedding_dimension;
  return out;
}

// Z_(p)-algebras given mod p^2: the cotangent space m/m^2 at (p, x) is spanned by
// p and the variables. A constant c with v_p(c) = 1 contributes (c/p) to the p
// column; linear terms with unit coefficients contribute to the variable columns.
inline int mixed_embedding_dimension(const PolyRing<arith::ZModP2>& ring,
                                     const std::vector<Polynomial<arith::ZModP2>>& gens) {
  const auto& zp2 = ring.coeffs();
  const std::int64_t p = zp2.prime().value();
  const arith::GaloisField fp(zp2.prime(), 1);
  Matrix<arith::GaloisField> rows;
  for (const auto& f : gens) {
    std::vector<arith::GaloisField::Element> row(static_cast<std::size_t>(ring.nvars()) + 1, 0);
    const auto c = ring.constant_term(f);
    if (c % p != 0)
      throw ValidationError("the point does not lie on V(I): generator " + ring.to_string(f) + " is a unit");
    row[0] = fp.from_int(c / p);
    for (const auto& t : f.terms)
      if (t.m.deg == 1)
        for (int i = 0; i < ring.nvars(); ++i)
          if (t.m[i] == 1) row[static_cast<std::size_t>(i) + 1] = fp.from_int(t.c);
    rows.push_back(std::move(row));
  }
  return ring.nvars() + 1 - static_cast<int>(rows.empty() ? 0 : matrix_rank(fp, rows));
}

// dim_k of Omega_{R/k} tensor k at the origin, from the presentation
// Omega = (sum R dx_i) / (df_j) with df_j = sum_i (df_j/dx_i) dx_i.
template <class F>
int kahler_rank_at_origin(const PolyRing<F>& ring, const std::vector<Polynomial<F>>& gens) {
  const auto& k = ring.coeffs();
  Matrix<F> rows;
  for (const auto& f : gens) {
    std::vector<typename F::Element> row;
    for (int i = 0; i < ring.nvars(); ++i) row.push_back(ring.constant_term(ring.partial(f, i)));
    rows.push_back(std::move(row));
  }
  return ring.nvars() - static_cast<int>(rows.empty() ? 0 : matrix_rank(k, rows));
}

}  // namespace logfw::ring
