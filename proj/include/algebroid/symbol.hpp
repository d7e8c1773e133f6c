#pragma once

#include <vector>

#include "algebroid/complex.hpp"
#include "algebroid/rank.hpp"

namespace algebroid {

/// Linear data of an algebroid at one point x: the fiber A_x, the anchor
/// a_x : A_x -> T_xM as a dim_M × dim_A matrix, and the rank of E_x.
struct FiberData {
  std::size_t dim_A = 0;
  std::size_t dim_M = 0;
  RationalMatrix anchor;
  std::size_t dim_E = 1;

  /// Throws Error(ValidationFailed) if the anchor shape disagrees with the dimensions.
  void validate() const;
};

/// E_x ⊗ ∧^r A_x^* -> E_x ⊗ ∧^{r+1} A_x^*, ω ↦ a^*(α) ∧ ω, with E_x indexed
/// fastest (form position * dim_E + e).
CochainComplex symbol_complex(const FiberData& f, std::span<const Rational> alpha);

struct ExactnessReport {
  /// exact[r]: rank(d_r) + rank(d_{r-1}) == dim C^r, with d_{-1} and d_top zero.
  std::vector<bool> exact;
  bool overall = false;
};

/// Throws Error(ChainConditionViolated) if some d_{r+1} d_r is nonzero.
ExactnessReport exactness_check(const CochainComplex& c, RankMethod method = RankMethod::Exact);

/// (Σ_p (-1)^p C(rank_L, p)) · rank_E.
Integer euler_form_factor(std::size_t rank_L, std::size_t rank_E);

}  // namespace algebroid
