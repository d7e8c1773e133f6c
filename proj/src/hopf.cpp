#include "algebroid/hopf.hpp"

#include <array>
#include <map>

#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"
#include "algebroid/kunneth.hpp"
#include "algebroid/rank.hpp"

namespace algebroid {

HStructure addition_map(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RationalMatrix m(n, 2 * n);
  place_block(m, 0, 0, RationalMatrix::identity(n));
  place_block(m, 0, n, RationalMatrix::identity(n));
  return {g, std::move(m)};
}

bool check_h_structure(const HStructure& h) {
  const std::size_t n = h.algebra.dim();
  if (h.map.rows() != n || h.map.cols() != 2 * n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational expected = i == j ? 1 : 0;
      if (h.map(i, j) != expected || h.map(i, n + j) != expected) return false;
    }
  }
  const LieAlgebra doubled = direct_sum(h.algebra, h.algebra);
  for (std::size_t a = 0; a < 2 * n; ++a) {
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      const auto lhs = h.map.apply(doubled.basis_bracket(a, b));
      const auto rhs = h.algebra.bracket(h.map.column(a), h.map.column(b));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::size_t GradedCoalgebra::block_offset(std::size_t r, std::size_t i) const {
  std::size_t offset = 0;
  for (std::size_t k = 0; k < i; ++k) offset += dims[k] * dims[r - k];
  return offset;
}

std::size_t GradedCoalgebra::tensor_dim(std::size_t r) const { return block_offset(r, r + 1); }

namespace {

std::string form_label(const MultiIndex& m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (auto i : m.indices()) {
    if (!out.empty()) out += "^";
    out += "w" + std::to_string(i);
  }
  return out;
}

void fill_exterior_product(GradedCoalgebra& c, std::size_t n) {
  c.product.assign(n + 1, std::vector<RationalMatrix>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    const ExteriorBasis left(n, i);
    for (std::size_t j = 0; i + j <= n; ++j) {
      const ExteriorBasis right(n, j);
      const ExteriorBasis target(n, i + j);
      RationalMatrix m(target.size(), left.size() * right.size());
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b)
          if (auto w = wedge(left[a], right[b])) m(target.position(w->index), a * right.size() + b) = w->sign;
      c.product[i][j] = std::move(m);
    }
  }
}

}  // namespace

GradedCoalgebra pullback_coproduct(const HStructure& h) {
  const LieAlgebra& g = h.algebra;
  if (!g.is_abelian())
    throw Error(ErrorCode::NotAbelian, "no compatible H-structure: '" + g.name() + "' is not abelian");
  const std::size_t n = g.dim();
  if (h.map.rows() != n || h.map.cols() != 2 * n)
    throw Error(ErrorCode::ValidationFailed, "H-structure map must be dim x 2 dim");

  GradedCoalgebra c;
  for (std::size_t r = 0; r <= n; ++r) {
    c.dims.push_back(binomial_size(n, r));
    std::vector<std::string> labels;
    for (const auto& m : basis(n, r)) labels.push_back(form_label(m));
    c.labels.push_back(std::move(labels));
  }
  fill_exterior_product(c, n);

  // H^*(e^k) = Σ_a H(k, a) ε^a on (g ⊕ g)*
  std::vector<RationalVector> pulled(n);
  for (std::size_t k = 0; k < n; ++k) pulled[k] = RationalVector(h.map.row(k).begin(), h.map.row(k).end());

  for (std::size_t r = 0; r <= n; ++r) {
    const ExteriorBasis source(n, r);
    const ExteriorBasis doubled(2 * n, r);
    RationalMatrix delta(c.tensor_dim(r), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      RationalVector image{1};
      std::size_t degree = 0;
      for (auto k : source[col].indices()) {
        image = wedge_forms(image, degree, pulled[k], 1, 2 * n);
        ++degree;
      }
      // Künneth: e^K with K = I ∪ (J + n) corresponds to e^I ⊗ e^J
      for (std::size_t pos = 0; pos < doubled.size(); ++pos) {
        if (image[pos] == 0) continue;
        std::vector<std::uint32_t> left, right;
        for (auto idx : doubled[pos].indices()) {
          if (idx < n) left.push_back(idx);
          else right.push_back(static_cast<std::uint32_t>(idx - n));
        }
        const std::size_t i = left.size();
        const ExteriorBasis lb(n, i);
        const ExteriorBasis rb(n, r - i);
        const std::size_t row =
            c.block_offset(r, i) + lb.position(MultiIndex(left, n)) * rb.size() + rb.position(MultiIndex(right, n));
        delta(row, col) += image[pos];
      }
    }
    c.coproduct.push_back(std::move(delta));
  }
  return c;
}

GradedCoalgebra addition_coproduct(const LieAlgebra& g) { return pullback_coproduct(addition_map(g)); }

std::vector<std::vector<RationalVector>> primitives(const GradedCoalgebra& c) {
  if (c.dims.empty() || c.dims[0] != 1)
    throw Error(ErrorCode::ValidationFailed, "primitives need a connected coalgebra (dim H^0 = 1)");
  std::vector<std::vector<RationalVector>> out;
  for (std::size_t r = 0; r < c.dims.size(); ++r) {
    RationalMatrix m = c.coproduct[r];
    // subtract x ⊗ 1 and 1 ⊗ x
    for (std::size_t a = 0; a < c.dims[r]; ++a) {
      m(c.block_offset(r, r) + a, a) -= 1;
      m(c.block_offset(r, 0) + a, a) -= 1;
    }
    out.push_back(kernel_basis(m));
  }
  return out;
}

namespace {

using Triple = std::array<std::size_t, 6>;  // (i, j, k, a, b, c)

void add_term(std::map<Triple, Rational>& acc, const Triple& key, const Rational& v) {
  auto& slot = acc[key];
  slot += v;
  if (slot == 0) acc.erase(key);
}

struct Term {
  std::size_t left_degree;
  std::size_t left;
  std::size_t right;
  Rational coeff;
};

// Terms of Δ applied to a vector x in H^r.
std::vector<Term> coproduct_terms(const GradedCoalgebra& c, std::size_t r, std::span<const Rational> x) {
  const RationalVector image = c.coproduct[r].apply(x);
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= r; ++i) {
    const std::size_t off = c.block_offset(r, i);
    const std::size_t width = c.dims[r - i];
    for (std::size_t a = 0; a < c.dims[i]; ++a)
      for (std::size_t b = 0; b < width; ++b) {
        const Rational& v = image[off + a * width + b];
        if (v != 0) terms.push_back({i, a, b, v});
      }
  }
  return terms;
}

RationalVector unit_vector(std::size_t n, std::size_t k) {
  RationalVector v(n);
  v[k] = 1;
  return v;
}

RationalVector multiply(const GradedCoalgebra& c, std::size_t i, std::span<const Rational> x, std::size_t j,
                        std::span<const Rational> y) {
  RationalVector xy(x.size() * y.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) xy[a * y.size() + b] = x[a] * y[b];
  return c.product[i][j].apply(xy);
}

bool check_counit(const GradedCoalgebra& c) {
  if (c.dims.empty() || c.dims[0] != 1) return false;
  for (std::size_t r = 0; r < c.dims.size(); ++r) {
    for (std::size_t x = 0; x < c.dims[r]; ++x) {
      for (std::size_t row = 0; row < c.dims[r]; ++row) {
        const Rational expected = row == x ? 1 : 0;
        // (ε ⊗ id)Δ picks the (0, r) block, (id ⊗ ε)Δ the (r, 0) block
        if (c.coproduct[r](c.block_offset(r, 0) + row, x) != expected) return false;
        if (c.coproduct[r](c.block_offset(r, r) + row, x) != expected) return false;
      }
    }
  }
  return true;
}

bool check_coassociative(const GradedCoalgebra& c) {
  for (std::size_t r = 0; r < c.dims.size(); ++r) {
    for (std::size_t x = 0; x < c.dims[r]; ++x) {
      std::map<Triple, Rational> left, right;
      for (const auto& t : coproduct_terms(c, r, unit_vector(c.dims[r], x))) {
        const std::size_t i = t.left_degree;
        for (const auto& u : coproduct_terms(c, i, unit_vector(c.dims[i], t.left)))
          add_term(left, {u.left_degree, i - u.left_degree, r - i, u.left, u.right, t.right}, t.coeff * u.coeff);
        for (const auto& u : coproduct_terms(c, r - i, unit_vector(c.dims[r - i], t.right)))
          add_term(right, {i, u.left_degree, r - i - u.left_degree, t.left, u.left, u.right}, t.coeff * u.coeff);
      }
      if (left != right) return false;
    }
  }
  return true;
}

bool check_multiplicative(const GradedCoalgebra& c) {
  const std::size_t top = c.top();
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; i + j <= top; ++j) {
      for (std::size_t x = 0; x < c.dims[i]; ++x) {
        for (std::size_t y = 0; y < c.dims[j]; ++y) {
          const auto ex = unit_vector(c.dims[i], x);
          const auto ey = unit_vector(c.dims[j], y);
          const RationalVector lhs = c.coproduct[i + j].apply(multiply(c, i, ex, j, ey));
          RationalVector rhs(c.tensor_dim(i + j));
          for (const auto& s : coproduct_terms(c, i, ex)) {
            for (const auto& t : coproduct_terms(c, j, ey)) {
              // (x1 ⊗ x2)(y1 ⊗ y2) = (-1)^{|x2||y1|} x1 y1 ⊗ x2 y2
              const std::size_t d1 = s.left_degree + t.left_degree;
              const std::size_t d2 = (i - s.left_degree) + (j - t.left_degree);
              const bool odd = ((i - s.left_degree) * t.left_degree) % 2 == 1;
              const Rational coeff = odd ? Rational(-s.coeff * t.coeff) : Rational(s.coeff * t.coeff);
              const auto first = multiply(c, s.left_degree, unit_vector(c.dims[s.left_degree], s.left), t.left_degree,
                                          unit_vector(c.dims[t.left_degree], t.left));
              const auto second =
                  multiply(c, i - s.left_degree, unit_vector(c.dims[i - s.left_degree], s.right), j - t.left_degree,
                           unit_vector(c.dims[j - t.left_degree], t.right));
              const std::size_t off = c.block_offset(d1 + d2, d1);
              for (std::size_t a = 0; a < first.size(); ++a) {
                if (first[a] == 0) continue;
                for (std::size_t b = 0; b < second.size(); ++b)
                  if (second[b] != 0) rhs[off + a * second.size() + b] += coeff * first[a] * second[b];
              }
            }
          }
          if (lhs != rhs) return false;
        }
      }
    }
  }
  return true;
}

// μ(S ⊗ id)Δ when left is true, μ(id ⊗ S)Δ otherwise, applied to basis x of H^r.
RationalVector convolve_with_antipode(const GradedCoalgebra& c, const std::vector<RationalMatrix>& s, std::size_t r,
                                      std::size_t x, bool left) {
  RationalVector out(c.dims[r]);
  for (const auto& t : coproduct_terms(c, r, unit_vector(c.dims[r], x))) {
    const std::size_t i = t.left_degree;
    RationalVector a = unit_vector(c.dims[i], t.left);
    RationalVector b = unit_vector(c.dims[r - i], t.right);
    if (left) a = s[i].apply(a);
    else b = s[r - i].apply(b);
    const auto prod = multiply(c, i, a, r - i, b);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t.coeff * prod[k];
  }
  return out;
}

}  // namespace

HopfReport hopf_report(const GradedCoalgebra& c) {
  HopfReport report;
  report.counit = check_counit(c);
  if (!report.counit) return report;  // the antipode recursion relies on the counit blocks
  report.coassociative = check_coassociative(c);
  report.multiplicative = check_multiplicative(c);

  auto& s = report.antipode_matrices;
  s.push_back(RationalMatrix::identity(c.dims[0]));
  for (std::size_t r = 1; r < c.dims.size(); ++r) {
    RationalMatrix sr(c.dims[r], c.dims[r]);
    for (std::size_t x = 0; x < c.dims[r]; ++x) {
      RationalVector value(c.dims[r]);
      for (const auto& t : coproduct_terms(c, r, unit_vector(c.dims[r], x))) {
        const std::size_t i = t.left_degree;
        if (i == r) continue;  // the x ⊗ 1 term carries S(x) itself
        const auto prod = multiply(c, i, s[i].apply(unit_vector(c.dims[i], t.left)), r - i,
                                   unit_vector(c.dims[r - i], t.right));
        for (std::size_t k = 0; k < value.size(); ++k) value[k] -= t.coeff * prod[k];
      }
      for (std::size_t k = 0; k < value.size(); ++k) sr(k, x) = value[k];
    }
    s.push_back(std::move(sr));
  }

  report.antipode = true;
  for (std::size_t r = 0; r < c.dims.size() && report.antipode; ++r) {
    for (std::size_t x = 0; x < c.dims[r]; ++x) {
      const RationalVector expected = r == 0 ? unit_vector(1, 0) : RationalVector(c.dims[r]);
      if (convolve_with_antipode(c, s, r, x, true) != expected ||
          convolve_with_antipode(c, s, r, x, false) != expected) {
        report.antipode = false;
        break;
      }
    }
  }
  return report;
}

bool verify_hopf(const GradedCoalgebra& c) { return hopf_report(c).ok(); }

std::optional<std::vector<std::size_t>> exterior_structure_check(const std::vector<std::size_t>& betti) {
  if (betti.empty() || betti[0] != 1)
    throw Error(ErrorCode::ValidationFailed, "exterior structure needs betti[0] = 1");
  std::vector<Integer> poly(betti.begin(), betti.end());
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  std::vector<std::size_t> generators;
  while (poly.size() > 1) {
    // the lowest positive degree present must be a generator
    std::size_t d = 1;
    while (poly[d] == 0) ++d;
    if (d % 2 == 0 || poly[d] < 0) return std::nullopt;
    // divide by 1 + t^d
    std::vector<Integer> quotient(poly.size() - d);
    std::vector<Integer> rest = poly;
    for (std::size_t k = 0; k < quotient.size(); ++k) {
      quotient[k] = rest[k];
      rest[k + d] -= rest[k];
      rest[k] = 0;
    }
    for (const auto& x : rest)
      if (x != 0) return std::nullopt;
    for (const auto& x : quotient)
      if (x < 0) return std::nullopt;
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    poly = std::move(quotient);
    generators.push_back(d);
  }
  return generators;
}

}  // namespace algebroid
