#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logfw/budgets.hpp"
#include "logfw/monoid/lattice.hpp"

namespace logfw::monoid {

// A finitely generated submonoid of Z^d. Generators are sorted
// lexicographically, deduplicated, and the zero vector is dropped.
//
// Most geometry happens in Q^gp coordinates: Q^gp = Z^k via its HNF basis.
class AffineMonoid {
 public:
  AffineMonoid(int ambient_rank, std::vector<IntVec> generators, Budgets budgets = {});

  int ambient_rank() const noexcept { return d_; }
  const std::vector<IntVec>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const Budgets& budgets() const noexcept { return budgets_; }

  // Q^gp: HNF basis (rows in Z^d) and rank k.
  const IntMat& gp_basis() const noexcept { return gp_basis_; }
  int gp_rank() const noexcept { return static_cast<int>(gp_basis_.size()); }
  std::optional<IntVec> try_gp_coords(const IntVec& v) const;
  IntVec gp_coords(const IntVec& v) const;  // throws ValidationError outside Q^gp
  IntVec from_gp_coords(const IntVec& c) const;
  const IntMat& generator_coords() const noexcept { return gen_coords_; }

  // Facet normals of cone(Q) in gp coordinates (primitive, nonnegative on Q).
  const IntMat& facets() const noexcept { return facets_; }
  // Generators lying on every facet; they generate the unit group Q^x.
  const std::vector<bool>& unit_generators() const noexcept { return is_unit_gen_; }
  // HNF basis of Q^x in gp coordinates.
  const IntMat& unit_lattice() const noexcept { return unit_lattice_; }
  int unit_rank() const noexcept { return static_cast<int>(unit_lattice_.size()); }
  bool is_sharp() const noexcept { return unit_lattice_.empty(); }
  bool is_unit(const IntVec& v) const;

  bool contains(const IntVec& v) const;
  // n in N^m with sum n_i g_i = v, if v lies in Q.
  std::optional<std::vector<std::int64_t>> witness(const IntVec& v) const;

 private:
  std::optional<std::vector<std::int64_t>> unit_witness(const IntVec& coords) const;

  int d_;
  std::vector<IntVec> gens_;
  Budgets budgets_;
  IntMat gp_basis_;
  IntMat gen_coords_;
  IntMat facets_;
  IntVec facet_sum_;
  std::vector<bool> is_unit_gen_;
  IntMat unit_lattice_;
};

// Facets of the cone spanned by `gens` in Z^k (rank of gens must be k).
IntMat cone_facets(const IntMat& gens, std::size_t k);

}  // namespace logfw::monoid
