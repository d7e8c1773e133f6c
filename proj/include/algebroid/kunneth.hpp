#pragma once

#include <cstdint>
#include <vector>

#include "algebroid/circle.hpp"
#include "algebroid/complex.hpp"
#include "algebroid/liealg.hpp"

namespace algebroid {

/// g ⊕ h with g's basis first; cross brackets vanish.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// E ⊠ F over g ⊕ h: ρ_(x,0) = ρ^E_x ⊗ id, ρ_(0,y) = id ⊗ ρ^F_y, with E ⊗ F
/// indexed by e * dim_F + f.
Representation tensor_rep(const Representation& e, const Representation& f);

/// A × g for a Lie algebra g over a point: g joins the zero-anchor factor.
/// The truncated complex of the result at window N is the graded tensor
/// product of A's truncated complex with the Chevalley–Eilenberg complex of g.
CircleAlgebroid product_with_lie_algebra(const CircleAlgebroid& a, const LieAlgebra& g);

/// Graded tensor product: degree r is ⊕_p A^p ⊗ B^{r-p} (p increasing,
/// entry a * dim B^{r-p} + b), with d(ω ⊠ δ) = dω ⊠ δ + (-1)^p ω ⊠ dδ.
CochainComplex tensor_product(const CochainComplex& a, const CochainComplex& b);

/// ω ⊠ δ as a vector of tensor_product(a, b) in degree p + q.
RationalVector cross_product(const CochainComplex& a, std::size_t p, std::span<const Rational> omega,
                             const CochainComplex& b, std::size_t q, std::span<const Rational> delta);

/// π_g^*ω ∧ π_h^*δ in ∧^{p+q}(g ⊕ h)*, for ω over ∧^p of a dim_g space and δ
/// over ∧^q of a dim_h space.
RationalVector external_wedge(std::span<const Rational> omega, std::size_t p, std::size_t dim_g,
                              std::span<const Rational> delta, std::size_t q, std::size_t dim_h);

/// (a * b)[r] = Σ_{i+j=r} a[i] b[j].
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

struct KunnethRow {
  std::size_t degree = 0;
  std::size_t product = 0;
  std::size_t expected = 0;
};

struct KunnethCheck {
  bool holds = false;
  bool euler_multiplicative = false;
  std::vector<KunnethRow> table;
};

/// Compares the product Betti vector with the convolution of the factors'.
KunnethCheck kunneth_verify(const CohomologyReport& product, const CohomologyReport& a, const CohomologyReport& b);

}  // namespace algebroid
