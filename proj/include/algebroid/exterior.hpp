#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "algebroid/matrix.hpp"

namespace algebroid {

/// Strictly increasing subset of {0..ambient_dim-1}; labels the basis form
/// e^{i_1} ∧ ... ∧ e^{i_p} of ∧^p V*.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws Error(ValidationFailed) unless indices are strictly increasing
  /// and below ambient_dim.
  MultiIndex(std::vector<std::uint32_t> indices, std::size_t ambient_dim);

  const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t degree() const noexcept { return indices_.size(); }
  std::uint64_t mask() const noexcept;
  bool contains(std::uint32_t i) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<std::uint32_t> indices_;
  std::size_t ambient_dim_ = 0;
};

struct SignedIndex {
  int sign = 1;
  MultiIndex index;
};

/// All C(n,p) p-subsets of {0..n-1} in lexicographic order.
std::vector<MultiIndex> basis(std::size_t n, std::size_t p);

/// a ∧ b with the Koszul sign of the merge permutation, or nullopt when the
/// two share an index.
std::optional<SignedIndex> wedge(const MultiIndex& a, const MultiIndex& b);

/// Σ_{p=0}^{r} (-1)^p C(r,p).
Integer alternating_binomial_sum(std::size_t r);

Integer binomial(std::size_t n, std::size_t k);
std::size_t binomial_size(std::size_t n, std::size_t k);

/// Lexicographic basis of ∧^p with O(1) position lookup.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t n, std::size_t p);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t degree() const noexcept { return p_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<MultiIndex>& elements() const noexcept { return elements_; }

  /// Position of the given index; it must belong to this basis.
  std::size_t position(const MultiIndex& m) const;

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<MultiIndex> elements_;
  std::unordered_map<std::uint64_t, std::size_t> position_;
};

/// Matrix of ω ↦ β ∧ ω from ∧^p V* to ∧^{p+1} V*, β a covector of length n.
RationalMatrix left_wedge_matrix(std::span<const Rational> beta, std::size_t p);

/// Wedge product of coordinate vectors over basis(n,p) and basis(n,q).
RationalVector wedge_forms(std::span<const Rational> a, std::size_t p, std::span<const Rational> b,
                           std::size_t q, std::size_t n);

}  // namespace algebroid
