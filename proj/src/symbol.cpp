#include "algebroid/symbol.hpp"

#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"

namespace algebroid {

void FiberData::validate() const {
  if (anchor.rows() != dim_M || anchor.cols() != dim_A) {
    throw Error(ErrorCode::ValidationFailed, "anchor must be dim_M x dim_A (" + std::to_string(dim_M) + " x " +
                                                 std::to_string(dim_A) + ")");
  }
  if (dim_E == 0) throw Error(ErrorCode::ValidationFailed, "dim_E must be positive");
}

CochainComplex symbol_complex(const FiberData& f, std::span<const Rational> alpha) {
  f.validate();
  if (alpha.size() != f.dim_M)
    throw Error(ErrorCode::ValidationFailed, "covector needs " + std::to_string(f.dim_M) + " entries");
  // a^*(α) = α ∘ a_x, a covector on A_x
  const RationalVector beta = f.anchor.transpose().apply(alpha);
  const auto id_e = RationalMatrix::identity(f.dim_E);
  CochainComplex c;
  for (std::size_t r = 0; r <= f.dim_A; ++r) c.degrees.push_back(binomial_size(f.dim_A, r) * f.dim_E);
  for (std::size_t r = 0; r < f.dim_A; ++r) c.differentials.push_back(kron(left_wedge_matrix(beta, r), id_e));
  return c;
}

ExactnessReport exactness_check(const CochainComplex& c, RankMethod method) {
  c.validate_shapes();
  if (auto failure = c.chain_condition_failure()) throw Error(ErrorCode::ChainConditionViolated, "d^2 != 0 at degree " + std::to_string(*failure));
  std::vector<std::size_t> ranks;
  for (const auto& d : c.differentials) ranks.push_back(rank(d, method));
  ExactnessReport report;
  report.overall = true;
  for (std::size_t r = 0; r < c.degrees.size(); ++r) {
    const std::size_t out = r < ranks.size() ? ranks[r] : 0;
    const std::size_t in = r > 0 ? ranks[r - 1] : 0;
    const bool ok = out + in == c.degrees[r];
    report.exact.push_back(ok);
    if (!ok) report.overall = false;
  }
  return report;
}

Integer euler_form_factor(std::size_t rank_L, std::size_t rank_E) {
  return alternating_binomial_sum(rank_L) * Integer(static_cast<unsigned long>(rank_E));
}

}  // namespace algebroid
