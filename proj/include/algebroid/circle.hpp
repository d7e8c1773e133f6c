#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "algebroid/complex.hpp"
#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"
#include "algebroid/liealg.hpp"
#include "algebroid/trigpoly.hpp"

namespace algebroid {

/// A = S¹ × R with anchor f ↦ p f ∂_t and bracket [f, g] = p (f g' - g f').
struct Rank1Anchor {
  TrigPoly p;
  friend bool operator==(const Rank1Anchor&, const Rank1Anchor&) = default;
};

/// Action algebroid g ⋉ S¹ for φ(e_i) = phi[i] ∂_t.
struct ActionData {
  LieAlgebra g;
  std::vector<TrigPoly> phi;
  friend bool operator==(const ActionData&, const ActionData&) = default;
};

/// φ is a Lie algebra homomorphism into vector fields on S¹:
/// [phi_i, phi_j] = Σ_k c^k_{ij} phi_k for all i < j.
bool check_action(const LieAlgebra& g, const std::vector<TrigPoly>& phi);

/// Lie algebroid over S¹ with trigonometric-polynomial anchor, optionally
/// multiplied by a Lie algebra that acts by zero (the product with a Lie
/// algebroid over a point).
class CircleAlgebroid {
 public:
  static CircleAlgebroid rank1(TrigPoly p);
  /// Throws Error(ValidationFailed) unless g is a Lie algebra and
  /// check_action passes.
  static CircleAlgebroid action(LieAlgebra g, std::vector<TrigPoly> phi);

  const std::variant<Rank1Anchor, ActionData>& kind() const noexcept { return kind_; }
  bool is_rank1() const noexcept { return std::holds_alternative<Rank1Anchor>(kind_); }

  /// Factor with zero anchor; dimension 0 unless built by a product.
  const LieAlgebra& fiber_factor() const noexcept { return fiber_; }
  CircleAlgebroid with_fiber_factor(LieAlgebra fiber) const;

  /// The anchored part as an action: Rank1Anchor p is R acting by (p).
  ActionData anchored_action() const;

  /// Maximal degree among anchor coefficients.
  std::size_t anchor_degree() const;

  /// Rank of the bundle: anchored generators plus the fiber factor.
  std::size_t rank() const;

  friend bool operator==(const CircleAlgebroid&, const CircleAlgebroid&) = default;

 private:
  CircleAlgebroid(std::variant<Rank1Anchor, ActionData> kind, LieAlgebra fiber)
      : kind_(std::move(kind)), fiber_(std::move(fiber)) {}

  std::variant<Rank1Anchor, ActionData> kind_;
  LieAlgebra fiber_;
};

/// Surjectivity of the anchor at every point of S¹, decided exactly:
/// Rank1Anchor iff p has no zero, action iff Σ phi_i² has no zero.
bool is_transitive(const CircleAlgebroid& a);

/// Finite-window surrogate of Γ(∧•A*).
///
/// With h the anchored algebra (dim h), k the fiber factor (dim k) and d the
/// anchor degree, degree r is
///
///     ⊕_{p+q=r} ∧^p h* ⊗ V_{N+p·d} ⊗ ∧^q k*
///
/// ordered by p, then (position of I in the lexicographic basis, window
/// coordinate), then position of J. Multiplication by anchor coefficients
/// raises trig degree by at most d per anchored form index, so every window
/// map is exact and d² = 0 holds on the nose.
struct TruncatedComplex {
  std::size_t base_window = 0;  // N
  std::size_t anchor_degree = 0;
  std::size_t anchored_dim = 0;
  std::size_t fiber_dim = 0;
  CochainComplex complex;

  /// Window m = N + p·d used by anchored form degree p.
  std::size_t window(std::size_t p) const { return base_window + p * anchor_degree; }

  /// Position in degree p+q of e^I ⊗ (window coordinate w) ⊗ e^J.
  std::size_t position(const MultiIndex& anchored, std::size_t window_coord, const MultiIndex& fiber) const;
};

/// Throws Error(ValidationFailed) for N = 0.
TruncatedComplex truncated_complex(const CircleAlgebroid& a, std::size_t N);

struct SweepEntry {
  std::size_t N = 0;
  CohomologyReport report;
};

struct SweepResult {
  std::vector<SweepEntry> table;
  bool stabilized = false;
  /// Values at the largest N.
  CohomologyReport report;
};

/// Betti numbers at every N in [N_min, N_max]; stabilized iff the Betti
/// vector is constant over the last three windows. Windows are computed on
/// up to worker_count() threads and merged in N order.
SweepResult truncation_sweep(const CircleAlgebroid& a, std::size_t N_min, std::size_t N_max,
                             RankMethod method = RankMethod::Exact);

class NotStabilizedError : public Error {
 public:
  explicit NotStabilizedError(std::vector<SweepEntry> table);
  const std::vector<SweepEntry>& table() const noexcept { return table_; }

 private:
  std::vector<SweepEntry> table_;
};

/// truncation_sweep that requires stabilization. Throws
/// Error(ValidationFailed) unless N_max >= N_min + 2, and
/// NotStabilizedError carrying the per-N table when the last three Betti
/// vectors differ.
SweepResult stabilized_cohomology(const CircleAlgebroid& a, std::size_t N_min, std::size_t N_max,
                                  RankMethod method = RankMethod::Exact);

}  // namespace algebroid
