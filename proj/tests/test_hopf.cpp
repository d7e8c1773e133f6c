#include <doctest.h>

#include "algebroid/circle.hpp"
#include "algebroid/error.hpp"
#include "algebroid/hopf.hpp"
#include "generators.hpp"

using namespace algebroid;

namespace {

using Degrees = std::optional<std::vector<std::size_t>>;

RationalMatrix blocks(const RationalMatrix& left, const RationalMatrix& right) {
  RationalMatrix m(left.rows(), left.cols() + right.cols());
  place_block(m, 0, 0, left);
  place_block(m, 0, left.cols(), right);
  return m;
}

}  // namespace

TEST_CASE("H-structures on Lie algebras") {
  CHECK(check_h_structure(addition_map(LieAlgebra::abelian(2))));
  CHECK_FALSE(check_h_structure(addition_map(gen::catalog_algebra("su2"))));
  const auto i2 = RationalMatrix::identity(2);
  CHECK_FALSE(check_h_structure({LieAlgebra::abelian(2), blocks(i2, Rational(2) * i2)}));
  CHECK_FALSE(check_h_structure({LieAlgebra::abelian(2), RationalMatrix(2, 3)}));
  for (const auto& name : gen::catalog_names()) {
    const auto g = gen::catalog_algebra(name);
    CAPTURE(name);
    CHECK(check_h_structure(addition_map(g)) == g.is_abelian());
  }
}

TEST_CASE("addition is the only H-structure on an abelian algebra") {
  auto rng = gen::engine(0x4040);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto id = RationalMatrix::identity(n);
    RationalMatrix left = id, right = id;
    // perturb one block in most trials
    if (trial % 3 != 0) (trial % 2 ? left : right) += gen::matrix(rng, n, n, 70);
    const HStructure h{LieAlgebra::abelian(n), blocks(left, right)};
    CHECK(check_h_structure(h) == (h.map == addition_map(LieAlgebra::abelian(n)).map));
  }
}

TEST_CASE("addition coproducts") {
  const auto r1 = addition_coproduct(LieAlgebra::abelian(1));
  CHECK(r1.dims == std::vector<std::size_t>{1, 1});
  // rows: 1⊗ω, then ω⊗1
  CHECK(r1.coproduct[1] == RationalMatrix{{1}, {1}});
  CHECK(r1.labels[1] == std::vector<std::string>{"w0"});

  const auto r2 = addition_coproduct(LieAlgebra::abelian(2));
  CHECK(r2.dims == std::vector<std::size_t>{1, 2, 1});
  // Δ(ω0∧ω1) = 1⊗ω01 + ω0⊗ω1 - ω1⊗ω0 + ω01⊗1
  CHECK(r2.coproduct[2] == RationalMatrix{{1}, {0}, {1}, {-1}, {0}, {1}});
  CHECK(r2.labels[2] == std::vector<std::string>{"w0^w1"});

  const auto zero = addition_coproduct(LieAlgebra(0));
  CHECK(zero.dims == std::vector<std::size_t>{1});
  CHECK(zero.coproduct[0] == RationalMatrix{{1}});

  try {
    addition_coproduct(gen::catalog_algebra("su2"));
    FAIL("expected NOT_ABELIAN");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAbelian);
  }
}

TEST_CASE("primitives") {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto c = addition_coproduct(LieAlgebra::abelian(n));
    const auto prim = primitives(c);
    REQUIRE(prim.size() == n + 1);
    for (std::size_t r = 0; r <= n; ++r) CHECK(prim[r].size() == (r == 1 ? n : 0));
  }
  // ω0∧ω1 is not primitive
  const auto r2 = addition_coproduct(LieAlgebra::abelian(2));
  RationalVector expected(r2.tensor_dim(2));
  expected[0] = 1;
  expected[5] = 1;
  CHECK(r2.coproduct[2].apply(RationalVector{1}) != expected);
}

TEST_CASE("wedges of primitives span the cohomology") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto c = addition_coproduct(LieAlgebra::abelian(n));
    const auto prim = primitives(c)[1];
    // products of r primitives span degree r
    std::vector<RationalVector> current{RationalVector{1}};
    for (std::size_t r = 1; r <= n; ++r) {
      std::vector<RationalVector> next;
      for (const auto& x : current) {
        for (const auto& p : prim) {
          RationalVector xp(x.size() * p.size());
          for (std::size_t a = 0; a < x.size(); ++a)
            for (std::size_t b = 0; b < p.size(); ++b) xp[a * p.size() + b] = x[a] * p[b];
          next.push_back(c.product[r - 1][1].apply(xp));
        }
      }
      CHECK(rank(RationalMatrix::from_columns(next, c.dims[r])) == c.dims[r]);
      current = std::move(next);
    }
  }
}

TEST_CASE("Hopf axioms for addition coproducts") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto c = addition_coproduct(LieAlgebra::abelian(n));
    const auto report = hopf_report(c);
    CHECK(report.counit);
    CHECK(report.coassociative);
    CHECK(report.multiplicative);
    CHECK(report.antipode);
    CHECK(verify_hopf(c));
    for (std::size_t r = 0; r <= n; ++r)
      CHECK(report.antipode_matrices[r] == Rational(r % 2 ? -1 : 1) * RationalMatrix::identity(c.dims[r]));
  }
}

TEST_CASE("broken coproducts fail") {
  auto c = addition_coproduct(LieAlgebra::abelian(1));
  c.coproduct[1](0, 0) = 0;  // Δ(ω) = ω⊗1 only
  CHECK_FALSE(hopf_report(c).counit);
  CHECK_FALSE(verify_hopf(c));

  auto d = addition_coproduct(LieAlgebra::abelian(2));
  d.coproduct[2](3, 0) = 1;  // Δ(ω0∧ω1) with +ω1⊗ω0
  const auto report = hopf_report(d);
  CHECK(report.counit);
  CHECK_FALSE(report.multiplicative);
  CHECK_FALSE(verify_hopf(d));
}

TEST_CASE("exterior structure from Betti numbers") {
  CHECK(exterior_structure_check({1, 1}) == Degrees(std::vector<std::size_t>{1}));
  CHECK(exterior_structure_check({1, 0, 0, 1}) == Degrees(std::vector<std::size_t>{3}));
  CHECK(exterior_structure_check({1, 2, 2, 1}) == std::nullopt);
  CHECK(exterior_structure_check({1, 2, 1}) == Degrees(std::vector<std::size_t>{1, 1}));
  CHECK(exterior_structure_check({1, 4, 6, 4, 1}) == Degrees(std::vector<std::size_t>{1, 1, 1, 1}));
  CHECK(exterior_structure_check({1, 0, 0, 2, 0, 0, 1}) == Degrees(std::vector<std::size_t>{3, 3}));
  CHECK(exterior_structure_check({1, 1, 0, 1, 1}) == Degrees(std::vector<std::size_t>{1, 3}));
  CHECK(exterior_structure_check({1, 1, 0}) == Degrees(std::vector<std::size_t>{1}));
  CHECK(exterior_structure_check({1}) == Degrees(std::vector<std::size_t>{}));
  CHECK(exterior_structure_check({1, 0, 1}) == std::nullopt);
  CHECK(exterior_structure_check({1, 3}) == std::nullopt);
  CHECK_THROWS_AS(exterior_structure_check({2, 1}), Error);
  CHECK_THROWS_AS(exterior_structure_check({}), Error);
}

TEST_CASE("the circle group") {
  // H(TS¹) from the sweep is an exterior algebra on one degree-1 class, and
  // the coproduct on [dt] is the one of R under addition.
  const auto sweep = stabilized_cohomology(CircleAlgebroid::rank1(TrigPoly(1)), 3, 6);
  CHECK(exterior_structure_check(sweep.report.betti) == Degrees(std::vector<std::size_t>{1}));
  const auto c = addition_coproduct(LieAlgebra::abelian(1, "dt"));
  CHECK(c.dims == sweep.report.betti);
  CHECK(c.coproduct[1] == RationalMatrix{{1}, {1}});  // Δ[dt] = 1⊗[dt] + [dt]⊗1
  CHECK(verify_hopf(c));
}
