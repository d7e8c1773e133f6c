#include "algebroid/liealg.hpp"

#include <algorithm>
#include <string>

#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"

namespace algebroid {

namespace {

// Sign of the permutation sorting `seq`; 0 when an index repeats.
int sort_sign(std::vector<std::uint32_t>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), brackets_(dim < 2 ? 0 : dim * (dim - 1) / 2) {}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) { return LieAlgebra(n, std::move(name)); }

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // i < j; rows of the strict upper triangle laid out one after another
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, RationalVector coeffs) {
  if (i == j || i >= dim_ || j >= dim_) {
    throw Error(ErrorCode::ValidationFailed,
                "bracket indices (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for dim " +
                    std::to_string(dim_));
  }
  if (coeffs.size() != dim_) throw Error(ErrorCode::ValidationFailed, "bracket coefficient vector has wrong length");
  if (i > j) {
    std::swap(i, j);
    for (auto& c : coeffs) c = -c;
  }
  if (is_zero(coeffs)) coeffs.clear();
  brackets_[pair_index(i, j)] = std::move(coeffs);
}

RationalVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  RationalVector out(dim_);
  if (i == j) return out;
  const bool flip = i > j;
  const auto& stored = brackets_[flip ? pair_index(j, i) : pair_index(i, j)];
  if (stored.empty()) return out;
  for (std::size_t k = 0; k < dim_; ++k) out[k] = flip ? Rational(-stored[k]) : stored[k];
  return out;
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  const auto& stored = brackets_[i < j ? pair_index(i, j) : pair_index(j, i)];
  if (stored.empty()) return 0;
  return i < j ? stored[k] : Rational(-stored[k]);
}

RationalVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      const auto& stored = brackets_[i < j ? pair_index(i, j) : pair_index(j, i)];
      if (stored.empty()) continue;
      const Rational f = (i < j ? 1 : -1) * x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (stored[k] != 0) out[k] += f * stored[k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(brackets_.begin(), brackets_.end(), [](const RationalVector& v) { return v.empty(); });
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim_ == b.dim_ && a.name_ == b.name_ && a.brackets_ == b.brackets_;
}

bool check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalVector total(n);
        const auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
          const auto inner = g.basis_bracket(a, b);
          RationalVector ec(n);
          ec[c] = 1;
          const auto outer = g.bracket(inner, ec);
          for (std::size_t m = 0; m < n; ++m) total[m] += outer[m];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        if (!is_zero(total)) return false;
      }
    }
  }
  return true;
}

RationalMatrix ad_matrix(const LieAlgebra& g, std::size_t i) {
  RationalMatrix m(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const auto col = g.basis_bracket(i, j);
    for (std::size_t k = 0; k < g.dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

namespace {

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::ValidationFailed, "change of basis must be square");
  RationalMatrix a(n, 2 * n);
  place_block(a, 0, 0, m);
  place_block(a, 0, n, RationalMatrix::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::ValidationFailed, "change of basis is singular");
    if (pivot != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(c, j), a(pivot, j));
    const Rational inv = 1 / a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, n + j);
  return out;
}

}  // namespace

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& change) {
  const std::size_t n = g.dim();
  const RationalMatrix inv = inverse(change);
  LieAlgebra out(n, g.name());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto old_coords = g.bracket(change.column(i), change.column(j));
      out.set_bracket(i, j, inv.apply(old_coords));
    }
  }
  return out;
}

Representation::Representation(LieAlgebra algebra, std::size_t dim_E, std::vector<RationalMatrix> action)
    : algebra_(std::move(algebra)), dim_E_(dim_E), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) {
    throw Error(ErrorCode::ValidationFailed, "representation has " + std::to_string(action_.size()) +
                                                 " action matrices for an algebra of dim " +
                                                 std::to_string(algebra_.dim()));
  }
  for (const auto& m : action_) {
    if (m.rows() != dim_E_ || m.cols() != dim_E_)
      throw Error(ErrorCode::ValidationFailed, "action matrix is not dim_E x dim_E");
  }
}

Representation Representation::trivial(const LieAlgebra& g, std::size_t dim_E) {
  return Representation(g, dim_E, std::vector<RationalMatrix>(g.dim(), RationalMatrix(dim_E, dim_E)));
}

Representation Representation::adjoint(const LieAlgebra& g) {
  std::vector<RationalMatrix> action;
  action.reserve(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(ad_matrix(g, i));
  return Representation(g, g.dim(), std::move(action));
}

bool check_representation(const Representation& r) {
  const auto& g = r.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const auto b = g.basis_bracket(i, j);
      RationalMatrix lhs(r.dim_E(), r.dim_E());
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (b[k] != 0) lhs += b[k] * r.rho(k);
      if (!(lhs == commutator(r.rho(i), r.rho(j)))) return false;
    }
  }
  return true;
}

Representation change_basis(const Representation& r, const RationalMatrix& change) {
  const std::size_t n = r.algebra().dim();
  std::vector<RationalMatrix> action;
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix m(r.dim_E(), r.dim_E());
    for (std::size_t j = 0; j < n; ++j)
      if (change(j, i) != 0) m += change(j, i) * r.rho(j);
    action.push_back(std::move(m));
  }
  return Representation(change_basis(r.algebra(), change), r.dim_E(), std::move(action));
}

RationalMatrix form_differential(const LieAlgebra& g, std::size_t p) {
  const std::size_t n = g.dim();
  const ExteriorBasis source(n, p);
  const ExteriorBasis target(n, p + 1);
  RationalMatrix d(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& idx = source[col].indices();
    for (std::size_t m = 0; m < idx.size(); ++m) {
      const int position_sign = (m % 2 == 0) ? 1 : -1;
      // d e^k = -Σ_{a<b} c^k_{ab} e^a ∧ e^b, inserted at slot m
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
          const Rational c = g.structure_constant(a, b, idx[m]);
          if (c == 0) continue;
          std::vector<std::uint32_t> seq(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(m));
          seq.push_back(a);
          seq.push_back(b);
          seq.insert(seq.end(), idx.begin() + static_cast<std::ptrdiff_t>(m) + 1, idx.end());
          const int s = sort_sign(seq);
          if (s == 0) continue;
          d(target.position(MultiIndex(seq, n)), col) -= position_sign * s * c;
        }
      }
    }
  }
  return d;
}

RationalMatrix ce_differential(const Representation& r, std::size_t p) {
  const auto& g = r.algebra();
  const std::size_t n = g.dim();
  if (p > n) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree " + std::to_string(p) + " exceeds algebra dimension " + std::to_string(n));
  }
  RationalMatrix d = kron(form_differential(g, p), RationalMatrix::identity(r.dim_E()));
  for (std::size_t i = 0; i < n; ++i) {
    if (r.rho(i).is_zero()) continue;
    RationalVector ei(n);
    ei[i] = 1;
    d += kron(left_wedge_matrix(ei, p), r.rho(i));
  }
  return d;
}

CochainComplex ce_complex(const Representation& r) {
  const auto& g = r.algebra();
  if (!check_jacobi(g)) throw Error(ErrorCode::ValidationFailed, "Jacobi identity fails for '" + g.name() + "'");
  if (!check_representation(r))
    throw Error(ErrorCode::ValidationFailed, "representation is not flat: rho([x,y]) != [rho(x), rho(y)]");
  const std::size_t n = g.dim();
  CochainComplex c;
  for (std::size_t p = 0; p <= n; ++p) c.degrees.push_back(r.dim_E() * binomial_size(n, p));
  for (std::size_t p = 0; p < n; ++p) c.differentials.push_back(ce_differential(r, p));
  return c;
}

CohomologyReport lie_cohomology(const Representation& r, RankMethod method) {
  return complex_cohomology(ce_complex(r), method);
}

}  // namespace algebroid
