#include "algebroid/complex.hpp"

#include <string>

#include "algebroid/error.hpp"
#include "algebroid/parallel.hpp"

namespace algebroid {

void CochainComplex::validate_shapes() const {
  const std::size_t expected = degrees.empty() ? 0 : degrees.size() - 1;
  if (differentials.size() != expected) {
    throw Error(ErrorCode::ValidationFailed,
                "complex has " + std::to_string(degrees.size()) + " degrees but " +
                    std::to_string(differentials.size()) + " differentials");
  }
  for (std::size_t p = 0; p < differentials.size(); ++p) {
    const auto& d = differentials[p];
    if (d.cols() != degrees[p] || d.rows() != degrees[p + 1]) {
      throw Error(ErrorCode::ValidationFailed,
                  "differential d_" + std::to_string(p) + " has shape " + std::to_string(d.rows()) + "x" +
                      std::to_string(d.cols()) + ", expected " + std::to_string(degrees[p + 1]) + "x" +
                      std::to_string(degrees[p]));
    }
  }
}

std::optional<std::size_t> CochainComplex::chain_condition_failure() const {
  for (std::size_t p = 0; p + 1 < differentials.size(); ++p) {
    if (!(differentials[p + 1] * differentials[p]).is_zero()) return p;
  }
  return std::nullopt;
}

std::int64_t alternating_sum(const std::vector<std::size_t>& values) {
  std::int64_t sum = 0;
  for (std::size_t p = 0; p < values.size(); ++p) {
    const auto v = static_cast<std::int64_t>(values[p]);
    sum += (p % 2 == 0) ? v : -v;
  }
  return sum;
}

CohomologyReport complex_cohomology(const CochainComplex& c, RankMethod method) {
  c.validate_shapes();
  if (auto p = c.chain_condition_failure()) {
    throw Error(ErrorCode::ChainConditionViolated,
                "d_" + std::to_string(*p + 1) + " * d_" + std::to_string(*p) + " != 0");
  }

  const auto ranks = parallel_map<std::size_t>(
      c.differentials.size(), [&](std::size_t p) { return rank(c.differentials[p], method); });

  CohomologyReport report;
  report.degrees = c.degrees;
  report.betti.resize(c.degrees.size());
  for (std::size_t p = 0; p < c.degrees.size(); ++p) {
    const std::size_t out_rank = p < ranks.size() ? ranks[p] : 0;
    const std::size_t in_rank = p > 0 ? ranks[p - 1] : 0;
    report.betti[p] = c.degrees[p] - out_rank - in_rank;
  }
  report.euler = alternating_sum(report.betti);
  return report;
}

bool is_cocycle(const CochainComplex& c, std::size_t p, std::span<const Rational> v) {
  if (p >= c.differentials.size()) return true;
  return is_zero(c.differentials[p].apply(v));
}

bool is_nontrivial_class(const CochainComplex& c, std::size_t p, std::span<const Rational> v) {
  if (!is_cocycle(c, p, v)) return false;
  if (p == 0) return !is_zero(RationalVector(v.begin(), v.end()));
  return !in_column_space(c.differentials[p - 1], v);
}

}  // namespace algebroid
