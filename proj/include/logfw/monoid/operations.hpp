#pragma once

#include <cstdint>
#include <vector>

#include "logfw/monoid/affine_monoid.hpp"

namespace logfw::monoid {

struct GpLattice {
  IntMat basis;
  int rank = 0;
};
GpLattice gp_lattice(const AffineMonoid& q);

// A homomorphism out of an affine monoid, given by a matrix acting on the
// domain's Q^gp coordinates, together with the images of the generators.
struct MonoidHom {
  IntMat matrix;  // codomain ambient rank x domain gp rank
  std::vector<IntVec> generator_images;

  IntVec apply_coords(const IntVec& gp_coords) const { return mat_vec(matrix, gp_coords); }
  IntVec apply(const AffineMonoid& domain, const IntVec& v) const { return apply_coords(domain.gp_coords(v)); }
};

// Q -> Q/Q^x. The sharp quotient lives in Z^{k-l}, k = rank Q^gp, l = rank Q^x.
struct Sharpening {
  AffineMonoid sharp;
  MonoidHom projection;
  LatticeSplit split;  // in Q^gp coordinates
};
Sharpening sharpen(const AffineMonoid& q);

// Section s: Q-bar -> Q of the sharpening map with pi(s(x)) = x, obtained from
// a lattice splitting of Q^gp -> Q-bar^gp. Every generator image is checked to
// lie in Q (SectionVerificationFailed otherwise).
MonoidHom section(const AffineMonoid& q, const Sharpening& sh);

// Generators of cone(Q) intersected with Q^gp. For pointed cones this is the
// Hilbert basis; otherwise a basis of the lineality lattice with both signs plus
// lifts of the Hilbert basis of the pointed quotient. Ambient coordinates.
std::vector<IntVec> hilbert_basis(const AffineMonoid& q);
AffineMonoid saturate(const AffineMonoid& q);
bool is_saturated(const AffineMonoid& q);

// A prime ideal of Q: the complement of a face. Membership of x is
// functional(x) > 0 in Q^gp coordinates.
struct MonoidPrime {
  std::uint64_t face_mask = 0;  // generators lying on the face
  IntVec functional;             // sum of the facet normals containing the face
  int face_rank = 0;             // rank of the face's generators

  bool contains(const AffineMonoid& q, const IntVec& v) const { return dot(functional, q.gp_coords(v)) > 0; }
};

// All primes, ordered by increasing size (the empty prime first, Q^+ last).
std::vector<MonoidPrime> spec(const AffineMonoid& q);
// Longest chain of primes, by brute force over the inclusion poset.
int dim_chain(const AffineMonoid& q);
// rank of Q-bar^gp.
int dim_rank(const AffineMonoid& q);

// Spec(Q) -> Spec(Q-bar), p -> pi(p), checked to be an order isomorphism.
bool spec_matches_sharpening(const AffineMonoid& q, const Sharpening& sh);

}  // namespace logfw::monoid
