#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebroid/liealg.hpp"

namespace algebroid {

/// Linear map H : g × g -> g, stored as a dim × 2·dim matrix acting on (x, y).
/// The unit is the zero vector.
struct HStructure {
  LieAlgebra algebra;
  RationalMatrix map;
};

/// The addition map (x, y) ↦ x + y, i.e. [I | I].
HStructure addition_map(const LieAlgebra& g);

/// Unit law H(0,x) = H(x,0) = x and the morphism property
/// H([u, v]) = [H u, H v] on g ⊕ g, both checked exactly.
bool check_h_structure(const HStructure& h);

/// Graded bialgebra data on cohomology H = ⊕_r H^r, given in bases.
///
/// coproduct[r] maps H^r into ⊕_{i=0..r} H^i ⊗ H^{r-i}; the (i, r-i) block
/// starts at block_offset(r, i) and indexes x^i_a ⊗ x^{r-i}_b by
/// a * dims[r-i] + b. product[i][j] maps H^i ⊗ H^j (same indexing) into
/// H^{i+j}, and is left empty when i + j exceeds the top degree. The first
/// basis vector of H^0 is the unit; the counit projects onto it.
struct GradedCoalgebra {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;
  std::vector<RationalMatrix> coproduct;
  std::vector<std::vector<RationalMatrix>> product;

  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
  std::size_t block_offset(std::size_t r, std::size_t i) const;
  std::size_t tensor_dim(std::size_t r) const;
};

/// Δ = (Künneth iso) ∘ H^* for an H-structure on an abelian Lie algebra,
/// where cohomology is all of ∧•g*. Throws Error(NotAbelian) otherwise.
GradedCoalgebra pullback_coproduct(const HStructure& h);

/// pullback_coproduct of the addition map: Δ(ω) = ω⊗1 + 1⊗ω on degree-one
/// generators, extended multiplicatively.
GradedCoalgebra addition_coproduct(const LieAlgebra& g);

/// Per degree, a basis of {x : Δx = x⊗1 + 1⊗x}.
std::vector<std::vector<RationalVector>> primitives(const GradedCoalgebra& c);

struct HopfReport {
  bool counit = false;
  bool coassociative = false;
  bool multiplicative = false;
  bool antipode = false;
  /// S_r : H^r -> H^r, built degree by degree from S(1) = 1 and
  /// S(x) = -Σ S(x') x'' over the terms of Δx other than x ⊗ 1.
  std::vector<RationalMatrix> antipode_matrices;

  bool ok() const { return counit && coassociative && multiplicative && antipode; }
};

HopfReport hopf_report(const GradedCoalgebra& c);

/// Counit axioms, coassociativity, Δ multiplicative for the graded tensor
/// product, and a two-sided antipode.
bool verify_hopf(const GradedCoalgebra& c);

/// Odd degrees d_1 <= ... <= d_k with Π (1 + t^{d_i}) = Σ betti[r] t^r, or
/// nullopt when no such factorization exists. Throws
/// Error(ValidationFailed) unless betti[0] == 1.
std::optional<std::vector<std::size_t>> exterior_structure_check(const std::vector<std::size_t>& betti);

}  // namespace algebroid
