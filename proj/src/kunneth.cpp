#include "algebroid/kunneth.hpp"

#include <algorithm>

#include "algebroid/exterior.hpp"

namespace algebroid {

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim() + h.dim();
  std::string name;
  if (!g.name().empty() || !h.name().empty()) name = g.name() + "+" + h.name();
  LieAlgebra out(n, std::move(name));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      RationalVector c(n);
      const auto b = g.basis_bracket(i, j);
      std::copy(b.begin(), b.end(), c.begin());
      out.set_bracket(i, j, std::move(c));
    }
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      RationalVector c(n);
      const auto b = h.basis_bracket(i, j);
      std::copy(b.begin(), b.end(), c.begin() + static_cast<std::ptrdiff_t>(g.dim()));
      out.set_bracket(g.dim() + i, g.dim() + j, std::move(c));
    }
  }
  return out;
}

Representation tensor_rep(const Representation& e, const Representation& f) {
  std::vector<RationalMatrix> action;
  const auto id_e = RationalMatrix::identity(e.dim_E());
  const auto id_f = RationalMatrix::identity(f.dim_E());
  for (const auto& rho : e.action()) action.push_back(kron(rho, id_f));
  for (const auto& rho : f.action()) action.push_back(kron(id_e, rho));
  return Representation(direct_sum(e.algebra(), f.algebra()), e.dim_E() * f.dim_E(), std::move(action));
}

CircleAlgebroid product_with_lie_algebra(const CircleAlgebroid& a, const LieAlgebra& g) {
  return a.with_fiber_factor(direct_sum(a.fiber_factor(), g));
}

namespace {

struct TensorLayout {
  // offsets[r][p] for A^p ⊗ B^{r-p}
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> sizes;
};

TensorLayout tensor_layout(const CochainComplex& a, const CochainComplex& b) {
  TensorLayout layout;
  const std::size_t na = a.degrees.size();
  const std::size_t nb = b.degrees.size();
  if (na == 0 || nb == 0) return layout;
  const std::size_t top = (na - 1) + (nb - 1);
  layout.offsets.assign(top + 1, std::vector<std::size_t>(na, 0));
  layout.sizes.assign(top + 1, 0);
  for (std::size_t r = 0; r <= top; ++r) {
    for (std::size_t p = 0; p < na && p <= r; ++p) {
      layout.offsets[r][p] = layout.sizes[r];
      if (r - p < nb) layout.sizes[r] += a.degrees[p] * b.degrees[r - p];
    }
  }
  return layout;
}

}  // namespace

CochainComplex tensor_product(const CochainComplex& a, const CochainComplex& b) {
  a.validate_shapes();
  b.validate_shapes();
  const TensorLayout layout = tensor_layout(a, b);
  CochainComplex out;
  out.degrees = layout.sizes;
  const std::size_t na = a.degrees.size();
  const std::size_t nb = b.degrees.size();
  for (std::size_t r = 0; r + 1 < layout.sizes.size(); ++r) {
    RationalMatrix d(layout.sizes[r + 1], layout.sizes[r]);
    for (std::size_t p = 0; p < na && p <= r; ++p) {
      const std::size_t q = r - p;
      if (q >= nb) continue;
      const std::size_t col = layout.offsets[r][p];
      if (p + 1 < na) {
        place_block(d, layout.offsets[r + 1][p + 1], col,
                    kron(a.differentials[p], RationalMatrix::identity(b.degrees[q])));
      }
      if (q + 1 < nb) {
        RationalMatrix block = kron(RationalMatrix::identity(a.degrees[p]), b.differentials[q]);
        if (p % 2 == 1) block *= Rational(-1);
        place_block(d, layout.offsets[r + 1][p], col, block);
      }
    }
    out.differentials.push_back(std::move(d));
  }
  return out;
}

RationalVector cross_product(const CochainComplex& a, std::size_t p, std::span<const Rational> omega,
                             const CochainComplex& b, std::size_t q, std::span<const Rational> delta) {
  const TensorLayout layout = tensor_layout(a, b);
  RationalVector out(layout.sizes.at(p + q));
  const std::size_t offset = layout.offsets[p + q][p];
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i] == 0) continue;
    for (std::size_t j = 0; j < delta.size(); ++j) out[offset + i * delta.size() + j] = omega[i] * delta[j];
  }
  return out;
}

RationalVector external_wedge(std::span<const Rational> omega, std::size_t p, std::size_t dim_g,
                              std::span<const Rational> delta, std::size_t q, std::size_t dim_h) {
  const std::size_t n = dim_g + dim_h;
  const auto embed = [n](std::span<const Rational> v, std::size_t degree, std::size_t dim, std::uint32_t shift) {
    const ExteriorBasis small(dim, degree);
    const ExteriorBasis big(n, degree);
    RationalVector out(big.size());
    for (std::size_t i = 0; i < small.size(); ++i) {
      if (v[i] == 0) continue;
      std::vector<std::uint32_t> idx = small[i].indices();
      for (auto& x : idx) x += shift;
      out[big.position(MultiIndex(idx, n))] = v[i];
    }
    return out;
  };
  const auto left = embed(omega, p, dim_g, 0);
  const auto right = embed(delta, q, dim_h, static_cast<std::uint32_t>(dim_g));
  return wedge_forms(left, p, right, q, n);
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

KunnethCheck kunneth_verify(const CohomologyReport& product, const CohomologyReport& a, const CohomologyReport& b) {
  const auto expected = convolve(a.betti, b.betti);
  KunnethCheck check;
  check.holds = true;
  const std::size_t n = std::max(expected.size(), product.betti.size());
  for (std::size_t r = 0; r < n; ++r) {
    KunnethRow row{r, r < product.betti.size() ? product.betti[r] : 0, r < expected.size() ? expected[r] : 0};
    if (row.product != row.expected) check.holds = false;
    check.table.push_back(row);
  }
  check.euler_multiplicative = product.euler == a.euler * b.euler;
  return check;
}

}  // namespace algebroid
