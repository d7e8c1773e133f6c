#pragma once

#include <span>
#include <string>
#include <vector>

#include "algebroid/complex.hpp"
#include "algebroid/matrix.hpp"

namespace algebroid {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = Σ_k c^k_{ij} e_k. Only i < j is stored; antisymmetry is
/// structural.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0, std::string name = {});

  static LieAlgebra abelian(std::size_t n, std::string name = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sets [e_i, e_j]. For i > j the negated coefficients are stored at
  /// (j, i). Throws Error(ValidationFailed) for i == j or bad sizes.
  void set_bracket(std::size_t i, std::size_t j, RationalVector coeffs);

  /// [e_i, e_j] for any i, j.
  RationalVector basis_bracket(std::size_t i, std::size_t j) const;
  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  RationalVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::string name_;
  std::vector<RationalVector> brackets_;  // i < j, pair-major; empty means zero
};

/// True iff the Jacobi identity holds on all basis triples.
bool check_jacobi(const LieAlgebra& g);

/// Matrix of ad_{e_i}: column j holds [e_i, e_j].
RationalMatrix ad_matrix(const LieAlgebra& g, std::size_t i);

/// Structure constants in the basis given by the columns of `change`
/// (an invertible dim x dim matrix).
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change);

/// Action of a Lie algebra on E = Q^{dim_E}: ρ_i = action[i].
class Representation {
 public:
  /// Checks shapes only; flatness is check_representation's job.
  Representation(LieAlgebra algebra, std::size_t dim_E, std::vector<RationalMatrix> action);

  static Representation trivial(const LieAlgebra& g, std::size_t dim_E = 1);
  static Representation adjoint(const LieAlgebra& g);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim_E() const noexcept { return dim_E_; }
  const std::vector<RationalMatrix>& action() const noexcept { return action_; }
  const RationalMatrix& rho(std::size_t i) const { return action_[i]; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra algebra_;
  std::size_t dim_E_;
  std::vector<RationalMatrix> action_;
};

/// ρ_{[e_i,e_j]} = [ρ_i, ρ_j] for all i < j.
bool check_representation(const Representation& r);

/// The same module in the basis given by the columns of `change`.
Representation change_basis(const Representation& r, const RationalMatrix& change);

/// Chevalley–Eilenberg differential on ∧^p g* with trivial coefficients.
RationalMatrix form_differential(const LieAlgebra& g, std::size_t p);

/// d_p : E ⊗ ∧^p g* -> E ⊗ ∧^{p+1} g*.
///
/// Basis of E ⊗ ∧^p g*: position(I) * dim_E + a for the form e^I and the
/// a-th basis vector of E, with I running over the lexicographic basis.
/// The matrix is
///
///     d_p = D_p ⊗ id_E + Σ_i W_i ⊗ ρ_i
///
/// where D_p is the trivial-coefficient differential (d e^k = -Σ_{a<b}
/// c^k_{ab} e^a ∧ e^b extended as a graded derivation) and W_i is
/// left wedge by e^i. In degree 0 and 1 this reproduces
/// dω(x) = ρ_x ω and dω(x,y) = ρ_x ω(y) - ρ_y ω(x) - ω([x,y]).
///
/// Throws Error(DegreeOutOfRange) for p > dim g.
RationalMatrix ce_differential(const Representation& r, std::size_t p);

/// Validates the algebra and the representation, then assembles the full
/// complex with degrees dim_E * C(n, p).
CochainComplex ce_complex(const Representation& r);

CohomologyReport lie_cohomology(const Representation& r, RankMethod method = RankMethod::Exact);

}  // namespace algebroid
