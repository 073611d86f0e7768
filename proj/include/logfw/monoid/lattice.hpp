#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logfw::monoid {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite normal form: U * a = h with U unimodular. The nonzero rows
// of h come first, in echelon form with positive pivots and the entries above
// each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMat h;
  IntMat transform;  // U
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};
HermiteForm hermite_form(const IntMat& a, std::size_t cols);

// Nonzero rows of the HNF: a canonical basis of the row lattice.
IntMat lattice_basis(const IntMat& rows, std::size_t cols);

// left * a * right = diag(d_1, .., d_r, 0, ..) with d_i | d_{i+1}, d_i > 0.
struct SmithForm {
  IntMat left;
  IntMat right;
  std::vector<std::int64_t> diagonal;  // the nonzero d_i
};
SmithForm smith_form(const IntMat& a, std::size_t cols);

// Basis of the saturated lattice {x in Z^cols : a x = 0}.
IntMat integer_kernel(const IntMat& a, std::size_t cols);

// Integer coefficients c with sum_i c_i rows[i] = v, if v lies in the row lattice.
std::optional<IntVec> lattice_coordinates(const IntMat& rows, const IntVec& v, std::size_t cols);

std::size_t rational_rank(const IntMat& rows, std::size_t cols);
IntMat unimodular_inverse(const IntMat& u);

IntVec primitive(const IntVec& v);
std::int64_t dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, std::int64_t c);
IntVec mat_vec(const IntMat& m, const IntVec& v);
bool is_zero(const IntVec& v);
std::string to_string(const IntVec& v);

// A saturated sublattice S of Z^k and a complement: proj: Z^k -> Z^k/S = Z^{k-l}
// and lifts of the quotient basis. Raises Unsupported when Z^k/S has torsion.
struct LatticeSplit {
  IntMat proj;   // (k - l) x k
  IntMat lifts;  // k - l vectors in Z^k, proj(lifts[j]) = e_j
};
LatticeSplit split_sublattice(const IntMat& sub_rows, std::size_t k);

}  // namespace logfw::monoid
