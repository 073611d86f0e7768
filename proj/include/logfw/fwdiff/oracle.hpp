#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logfw/fwdiff/presentation.hpp"

namespace logfw::fwdiff {

// A finite local ring (Z/p^s)[X, z]/J with an explicit additive basis of
// monomials and a multiplication table. s = 1: R is the fiber ring of an
// Artinian prelog over F_q (z carries F_q = F_p[z]/(g) when m > 1). s = 2: a
// Z_(p)-algebra whose ideal is generated by p^2 and monomials.
class FiniteRing {
 public:
  using Vec = std::vector<std::int64_t>;

  static FiniteRing from_prelog(const prelog::PrelogRing<arith::GaloisField>& p, const Budgets& budgets = {});

  std::int64_t p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t basis_size() const noexcept { return basis_.size(); }
  std::size_t size() const noexcept { return size_; }
  int field_degree() const noexcept { return m_; }
  int nvars() const noexcept { return nvars_; }
  const std::vector<std::string>& basis_labels() const noexcept { return labels_; }

  Vec zero() const { return Vec(basis_.size(), 0); }
  Vec one() const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, std::int64_t c) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, std::uint64_t e) const;
  std::size_t index(const Vec& a) const;
  Vec element(std::size_t index) const;
  // Variable X_i (i < nvars) or z (i == nvars) as a ring element.
  Vec generator(int i) const;
  const Vec& basis_element(std::size_t j) const { return unit_vectors_[j]; }

  // Fiber polynomial (coefficients in F_q, local coordinates) as an element.
  Vec from_fiber(const Poly<arith::GaloisField>& f) const;
  // Polynomial mod p^2 (s = 2 only).
  Vec from_lift(const Poly<arith::ZModP2>& f) const;
  // Residue class in k = F_q, as F_p digits in the z basis.
  Vec residue(const Vec& a) const;

 private:
  std::int64_t p_ = 2;
  int s_ = 1;
  int m_ = 1;
  int nvars_ = 0;
  std::int64_t modulus_ = 2;
  std::size_t size_ = 1;
  std::vector<std::vector<int>> basis_;  // exponent vectors (X..., z)
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;  // table_[i][j] = b_i * b_j
  std::vector<Vec> unit_vectors_;
  std::vector<std::int64_t> field_modulus_;  // g(z), low to high
  std::vector<std::vector<int>> monomial_ideal_;  // s = 2
  std::shared_ptr<const ring::Ideal<arith::GaloisField>> ext_ideal_;  // s = 1
  arith::GaloisField field_{arith::Prime(2), 1};

  Vec reduce_monomial(const std::vector<int>& e) const;
};

// M = k or M = R/pR, as an F_p-vector space with the action of R.
enum class ModuleKind { residue_field, ring_mod_p };

class FiniteModule {
 public:
  FiniteModule(const FiniteRing& r, ModuleKind kind);
  std::size_t dimension() const noexcept { return dim_; }
  ModuleKind kind() const noexcept { return kind_; }
  // Matrix (dim x dim over F_p) of multiplication by a.
  std::vector<std::vector<std::int64_t>> action(const FiniteRing::Vec& a) const;

 private:
  const FiniteRing* ring_;
  ModuleKind kind_;
  std::size_t dim_;
};

std::string module_name(ModuleKind kind);

// F_p-linear subspace of F_p^n kept in reduced echelon form.
class EchelonSpace {
 public:
  EchelonSpace(std::int64_t p, std::size_t n) : p_(p), n_(n) {}
  // Adds a vector; returns true if it enlarged the span.
  bool insert(std::vector<std::int64_t> v);
  bool contains(std::vector<std::int64_t> v) const;
  // Whether r.v = 0 for every vector r of the span.
  bool orthogonal(const std::vector<std::int64_t>& v) const;
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return n_; }
  // Basis of the orthogonal complement {x : r.x = 0 for all rows r}.
  std::vector<std::vector<std::int64_t>> annihilator() const;

 private:
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const;
  std::int64_t p_;
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

// Unknown slots of the oracle, each an element of M.
struct OracleSlots {
  int nvars = 0;
  bool has_z = false;
  bool has_p = false;
  int ngens = 0;
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(nvars + (has_z ? 1 : 0) + (has_p ? 1 : 0) + ngens);
  }
  std::size_t var(int i) const noexcept { return static_cast<std::size_t>(i); }
  std::size_t z() const noexcept { return static_cast<std::size_t>(nvars); }
  std::size_t p() const noexcept { return static_cast<std::size_t>(nvars + (has_z ? 1 : 0)); }
  std::size_t delta(int i) const noexcept { return static_cast<std::size_t>(nvars + (has_z ? 1 : 0) + (has_p ? 1 : 0) + i); }
};

struct FDerOracleResult {
  std::size_t dimension = 0;    // dim_{F_p} FDer_(R,Q,alpha)(M)
  std::size_t parameters = 0;   // F_p-dimension of the parameter space
  std::size_t constraints = 0;  // equations generated
  OracleSlots slots;
  EchelonSpace constraint_space{2, 0};

  // Whether a parameter vector is a log FW-derivation.
  bool is_derivation(const std::vector<std::int64_t>& params) const;
};

// Solves the FW-derivation axioms directly: D is determined by its values on
// X_i, z and p (and delta on the generators of Q); D(a) for every a in R is
// derived from these through the axioms, after which both axioms are imposed
// on all pairs (a, b), the log axiom on the generators of Q and additivity of
// delta on the relation lattice.
FDerOracleResult brute_force_fder(const FiniteRing& r, const prelog::PrelogRing<arith::GaloisField>& p,
                                  const FiniteModule& m);

struct HomResult {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> basis;  // theta in M^g, generator-major
};

// Hom_R(coker of the presentation, M) over F_p.
HomResult hom_dimension(const FwPresentation<arith::GaloisField>& pres, const FiniteRing& r, const FiniteModule& m);

// theta -> oracle parameters: D(X_i) = theta(WVar(i)), D(p) = theta(WP),
// D(z) = 0, delta(g) = sum_b c_b theta(WLog(b)) for g = sum_b c_b e_b.
std::vector<std::int64_t> hom_to_parameters(const std::vector<std::int64_t>& theta,
                                            const FwPresentation<arith::GaloisField>& pres,
                                            const monoid::AffineMonoid& q, const OracleSlots& slots, std::size_t dim);

struct OracleComparison {
  std::size_t fder_dimension = 0;
  std::size_t hom_dimension = 0;
  bool hom_lands_in_fder = false;  // every theta gives a derivation
  bool agree() const noexcept { return fder_dimension == hom_dimension && hom_lands_in_fder; }
};

// Hom(FOmega, M) against FDer(M); the presentation must be for the monoid q as given.
OracleComparison compare_with_oracle(const FwPresentation<arith::GaloisField>& pres, const monoid::AffineMonoid& q,
                                     const FiniteRing& r, const FiniteModule& m, const FDerOracleResult& fder);

// Whether two presentations on the same generators have the same relation submodule of (R/pR)^g.
bool same_relations(const FwPresentation<arith::GaloisField>& a, const FwPresentation<arith::GaloisField>& b,
                    const FiniteRing& r);

// Adds 1 to the coefficient of generator `column` in relation `row`.
FwPresentation<arith::GaloisField> perturb(const FwPresentation<arith::GaloisField>& pres, std::size_t row,
                                           std::size_t column);

struct Mutant {
  std::size_t row = 0;
  std::size_t column = 0;
  bool equivalent = false;  // same relation submodule, so no test can see it
  bool detected = false;
};

// Every single-coefficient perturbation, checked against the oracle.
std::vector<Mutant> mutation_sweep(const FwPresentation<arith::GaloisField>& pres, const monoid::AffineMonoid& q,
                                   const FiniteRing& r, const FiniteModule& m, const FDerOracleResult& fder);

}  // namespace logfw::fwdiff
