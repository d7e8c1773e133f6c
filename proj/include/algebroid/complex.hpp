#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "algebroid/matrix.hpp"
#include "algebroid/rank.hpp"

namespace algebroid {

/// Finite cochain complex C^0 -> C^1 -> ... -> C^top.
/// differentials[p] : C^p -> C^{p+1} has cols = degrees[p], rows = degrees[p+1].
struct CochainComplex {
  std::vector<std::size_t> degrees;
  std::vector<RationalMatrix> differentials;

  std::size_t top() const { return degrees.empty() ? 0 : degrees.size() - 1; }

  /// Throws Error(ValidationFailed) unless there are degrees.size()-1
  /// differentials of matching shapes.
  void validate_shapes() const;

  /// First p with d_{p+1} d_p != 0, if any.
  std::optional<std::size_t> chain_condition_failure() const;
};

struct CohomologyReport {
  std::vector<std::size_t> betti;
  std::int64_t euler = 0;
  std::vector<std::size_t> degrees;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

/// Alternating sum of the entries.
std::int64_t alternating_sum(const std::vector<std::size_t>& values);

/// Betti numbers and Euler characteristic. Throws
/// Error(ChainConditionViolated) if some consecutive differentials do not
/// compose to zero.
CohomologyReport complex_cohomology(const CochainComplex& c, RankMethod method = RankMethod::Exact);

/// True iff v (a vector in C^p) is a cocycle.
bool is_cocycle(const CochainComplex& c, std::size_t p, std::span<const Rational> v);

/// True iff v is a cocycle that is not a coboundary.
bool is_nontrivial_class(const CochainComplex& c, std::size_t p, std::span<const Rational> v);

}  // namespace algebroid
