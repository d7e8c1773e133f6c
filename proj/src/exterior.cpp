#include "algebroid/exterior.hpp"

#include <algorithm>
#include <string>

#include "algebroid/error.hpp"

namespace algebroid {

MultiIndex::MultiIndex(std::vector<std::uint32_t> indices, std::size_t ambient_dim)
    : indices_(std::move(indices)), ambient_dim_(ambient_dim) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] >= ambient_dim_ || (k > 0 && indices_[k - 1] >= indices_[k])) {
      throw Error(ErrorCode::ValidationFailed, "multi-index must be strictly increasing and below " +
                                                   std::to_string(ambient_dim_));
    }
  }
  if (ambient_dim_ > 64) throw Error(ErrorCode::ValidationFailed, "ambient dimension above 64");
}

std::uint64_t MultiIndex::mask() const noexcept {
  std::uint64_t m = 0;
  for (auto i : indices_) m |= std::uint64_t{1} << i;
  return m;
}

bool MultiIndex::contains(std::uint32_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::vector<MultiIndex> basis(std::size_t n, std::size_t p) {
  std::vector<MultiIndex> out;
  if (p > n) return out;
  std::vector<std::uint32_t> current(p);
  for (std::size_t k = 0; k < p; ++k) current[k] = static_cast<std::uint32_t>(k);
  while (true) {
    out.emplace_back(current, n);
    // advance to the lexicographic successor
    std::size_t k = p;
    while (k > 0 && current[k - 1] == n - p + (k - 1)) --k;
    if (k == 0) break;
    ++current[k - 1];
    for (std::size_t j = k; j < p; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::optional<SignedIndex> wedge(const MultiIndex& a, const MultiIndex& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::ValidationFailed, "wedge of indices with different ambient dimensions");
  if (a.mask() & b.mask()) return std::nullopt;
  // Sorting a·b by adjacent transpositions takes one swap per pair (i in a,
  // j in b) with i > j.
  std::size_t inversions = 0;
  for (auto i : a.indices())
    for (auto j : b.indices())
      if (i > j) ++inversions;
  std::vector<std::uint32_t> merged;
  merged.reserve(a.degree() + b.degree());
  std::merge(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
             std::back_inserter(merged));
  return SignedIndex{inversions % 2 == 0 ? 1 : -1, MultiIndex(std::move(merged), a.ambient_dim())};
}

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::size_t binomial_size(std::size_t n, std::size_t k) { return binomial(n, k).get_ui(); }

Integer alternating_binomial_sum(std::size_t r) {
  Integer sum = 0;
  for (std::size_t p = 0; p <= r; ++p) {
    if (p % 2 == 0) sum += binomial(r, p);
    else sum -= binomial(r, p);
  }
  return sum;
}

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t p) : n_(n), p_(p), elements_(basis(n, p)) {
  position_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) position_.emplace(elements_[i].mask(), i);
}

std::size_t ExteriorBasis::position(const MultiIndex& m) const {
  const auto it = position_.find(m.mask());
  if (it == position_.end() || m.degree() != p_)
    throw Error(ErrorCode::ValidationFailed, "multi-index not in this exterior basis");
  return it->second;
}

RationalMatrix left_wedge_matrix(std::span<const Rational> beta, std::size_t p) {
  const std::size_t n = beta.size();
  const ExteriorBasis source(n, p);
  const ExteriorBasis target(n, p + 1);
  RationalMatrix m(target.size(), source.size());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (beta[i] == 0) continue;
    const MultiIndex ei({i}, n);
    for (std::size_t col = 0; col < source.size(); ++col) {
      if (auto w = wedge(ei, source[col])) {
        m(target.position(w->index), col) += w->sign * beta[i];
      }
    }
  }
  return m;
}

RationalVector wedge_forms(std::span<const Rational> a, std::size_t p, std::span<const Rational> b,
                           std::size_t q, std::size_t n) {
  const ExteriorBasis left(n, p);
  const ExteriorBasis right(n, q);
  const ExteriorBasis target(n, p + q);
  if (a.size() != left.size() || b.size() != right.size())
    throw Error(ErrorCode::ValidationFailed, "form coordinates do not match the exterior basis");
  RationalVector out(target.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (b[j] == 0) continue;
      if (auto w = wedge(left[i], right[j])) out[target.position(w->index)] += w->sign * a[i] * b[j];
    }
  }
  return out;
}

}  // namespace algebroid
