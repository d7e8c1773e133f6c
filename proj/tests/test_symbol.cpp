#include <doctest.h>

#include "algebroid/circle.hpp"
#include "algebroid/error.hpp"
#include "algebroid/symbol.hpp"
#include "generators.hpp"

using namespace algebroid;

namespace {

FiberData fiber(std::size_t dim_A, std::size_t dim_M, RationalMatrix anchor, std::size_t dim_E = 1) {
  return FiberData{dim_A, dim_M, std::move(anchor), dim_E};
}

RationalVector nonzero_covector(std::mt19937_64& rng, std::size_t n) {
  RationalVector a(n);
  while (is_zero(a))
    for (auto& x : a) x = gen::rational(rng);
  return a;
}

// dim_M × dim_A with full row rank: [I | X] with columns shuffled by an invertible map.
RationalMatrix surjective(std::mt19937_64& rng, std::size_t dim_M, std::size_t dim_A) {
  RationalMatrix a = gen::matrix(rng, dim_M, dim_A, 40);
  for (std::size_t i = 0; i < dim_M; ++i)
    for (std::size_t j = 0; j < dim_M; ++j) a(i, j) = i == j ? 1 : 0;
  return gen::invertible(rng, dim_M) * a * gen::invertible(rng, dim_A);
}

}  // namespace

TEST_CASE("symbol complex shapes") {
  const auto one = symbol_complex(fiber(1, 1, RationalMatrix{{1}}), RationalVector{1});
  CHECK(one.degrees == std::vector<std::size_t>{1, 1});
  CHECK(one.differentials[0] == RationalMatrix{{1}});

  const auto sl2 = symbol_complex(fiber(3, 1, RationalMatrix{{1, 1, 0}}), RationalVector{1});
  CHECK(sl2.degrees == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(sl2.differentials[0] == RationalMatrix{{1}, {1}, {0}});
  // β = e^0 + e^1 on (01),(02),(12) from e^0,e^1,e^2
  CHECK(sl2.differentials[1] == RationalMatrix{{-1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
  CHECK_FALSE(sl2.chain_condition_failure());

  const auto zero = symbol_complex(fiber(3, 2, RationalMatrix(2, 3), 2), RationalVector{0, 0});
  CHECK(zero.degrees == std::vector<std::size_t>{2, 6, 6, 2});
  for (const auto& d : zero.differentials) CHECK(d.is_zero());

  CHECK_THROWS_AS(symbol_complex(fiber(2, 1, RationalMatrix(2, 2)), RationalVector{1}), Error);
  CHECK_THROWS_AS(symbol_complex(fiber(2, 1, RationalMatrix(1, 2)), RationalVector{1, 2}), Error);
}

TEST_CASE("exactness on the named cases") {
  CHECK(exactness_check(symbol_complex(fiber(3, 1, RationalMatrix{{1, 1, 0}}), RationalVector{1})).overall);
  const auto alpha_zero = exactness_check(symbol_complex(fiber(3, 1, RationalMatrix{{1, 1, 0}}), RationalVector{0}));
  CHECK_FALSE(alpha_zero.overall);
  CHECK(alpha_zero.exact == std::vector<bool>{false, false, false, false});
  CHECK_FALSE(exactness_check(symbol_complex(fiber(1, 1, RationalMatrix{{0}}), RationalVector{1})).overall);
}

TEST_CASE("exactness_check rejects non-complexes") {
  CochainComplex c;
  c.degrees = {1, 1, 1};
  c.differentials = {RationalMatrix{{1}}, RationalMatrix{{1}}};
  try {
    exactness_check(c);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ChainConditionViolated);
  }
}

TEST_CASE("surjective anchors give exact symbol complexes for every nonzero covector") {
  auto rng = gen::engine(0x5a5a);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim_M = 1 + trial % 3;
    const std::size_t dim_A = dim_M + trial % 3;
    const std::size_t dim_E = 1 + trial % 2;
    const auto f = fiber(dim_A, dim_M, surjective(rng, dim_M, dim_A), dim_E);
    const auto alpha = nonzero_covector(rng, dim_M);
    CAPTURE(trial);
    const auto report = exactness_check(symbol_complex(f, alpha));
    CHECK(report.overall);
    // scaling α keeps exactness
    RationalVector scaled = alpha;
    const Rational s = Rational(-7, 3) * Rational(1 + trial);
    for (auto& x : scaled) x *= s;
    CHECK(exactness_check(symbol_complex(f, scaled)).overall == report.overall);
    // α = 0 is never exact
    CHECK_FALSE(exactness_check(symbol_complex(f, RationalVector(dim_M))).overall);
  }
}

TEST_CASE("exactness is scale invariant also when it fails") {
  auto rng = gen::engine(0x5a5b);
  for (int trial = 0; trial < 30; ++trial) {
    // rank-deficient anchor: β may vanish
    RationalMatrix a(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      a(0, j) = gen::rational(rng);
      a(1, j) = 2 * a(0, j);
    }
    const auto f = fiber(3, 2, a);
    const RationalVector alpha{2, -1};  // kills the image of a*
    const auto r = exactness_check(symbol_complex(f, alpha));
    CHECK_FALSE(r.overall);
    CHECK(exactness_check(symbol_complex(f, RationalVector{-4, 2})).exact == r.exact);
  }
}

TEST_CASE("Euler form factor") {
  CHECK(euler_form_factor(0, 1) == 1);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(euler_form_factor(0, k) == static_cast<long>(k));
  CHECK(euler_form_factor(2, 3) == 0);
  for (std::size_t l = 0; l <= 10; ++l)
    for (std::size_t e = 1; e <= 4; ++e) CHECK((euler_form_factor(l, e) == 0) == (l >= 1));
}

TEST_CASE("rank-one anchor fibers along the circle") {
  // fiber at t: anchor (p(t)); exact iff p(t) != 0. Sample t = kπ/2.
  for (const auto& p : {TrigPoly::sin(1), TrigPoly::sin(2), TrigPoly(1), TrigPoly::cos(1) + TrigPoly(2)}) {
    for (long k = 0; k < 4; ++k) {
      const Rational value = p.at_quarter_turn(k);
      const auto f = fiber(1, 1, RationalMatrix{{value}});
      CAPTURE(format_trig(p));
      CAPTURE(k);
      CHECK(exactness_check(symbol_complex(f, RationalVector{1})).overall == (value != 0));
    }
  }
}
