#include <doctest.h>

#include "algebroid/exterior.hpp"
#include "algebroid/kunneth.hpp"
#include "generators.hpp"

using namespace algebroid;

namespace {

const TrigPoly one(1);

LieAlgebra named(LieAlgebra g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

RationalVector unit(std::size_t n, std::size_t k) {
  RationalVector v(n);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("direct sums") {
  const auto su2 = gen::catalog_algebra("su2");
  CHECK(named(direct_sum(su2, LieAlgebra(0)), "su2") == su2);
  CHECK(direct_sum(LieAlgebra::abelian(1), LieAlgebra::abelian(1)) == LieAlgebra::abelian(2));
  const auto ss = direct_sum(su2, su2);
  CHECK(ss.dim() == 6);
  CHECK(check_jacobi(ss));
  CHECK(ss.basis_bracket(3, 4) == RationalVector{0, 0, 0, 0, 0, 1});
  CHECK(ss.basis_bracket(0, 4) == RationalVector(6));
  CHECK(ss.basis_bracket(1, 2) == RationalVector{1, 0, 0, 0, 0, 0});
  for (const auto& a : gen::catalog_names())
    for (const auto& b : gen::catalog_names()) CHECK(check_jacobi(direct_sum(gen::catalog_algebra(a), gen::catalog_algebra(b))));
}

TEST_CASE("tensor representations") {
  const auto su2 = gen::catalog_algebra("su2");
  const auto r1 = LieAlgebra::abelian(1);
  const auto tt = tensor_rep(Representation::trivial(su2), Representation::trivial(r1));
  CHECK(tt == Representation::trivial(direct_sum(su2, r1)));

  const auto ad = Representation::adjoint(su2);
  const auto adt = tensor_rep(ad, Representation::trivial(r1));
  CHECK(adt.dim_E() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(adt.rho(i) == ad.rho(i));
  CHECK(adt.rho(3).is_zero());
  CHECK(check_representation(adt));

  const auto adad = tensor_rep(ad, ad);
  CHECK(adad.dim_E() == 9);
  CHECK(adad.algebra().dim() == 6);
  CHECK(check_representation(adad));
  CHECK(adad.rho(4) == kron(RationalMatrix::identity(3), ad.rho(1)));
}

TEST_CASE("products with a Lie algebra") {
  const auto p1 = CircleAlgebroid::rank1(one);
  for (std::size_t N = 1; N <= 3; ++N) {
    const auto plain = truncated_complex(p1, N).complex;
    const auto with_zero = truncated_complex(product_with_lie_algebra(p1, LieAlgebra(0)), N).complex;
    CHECK(plain.degrees == with_zero.degrees);
    CHECK(plain.differentials == with_zero.differentials);

    const auto with_su2 = truncated_complex(product_with_lie_algebra(p1, gen::catalog_algebra("su2")), N).complex;
    std::vector<std::size_t> expected;
    for (std::size_t r = 0; r <= 4; ++r) expected.push_back((2 * N + 1) * binomial_size(4, r));
    CHECK(with_su2.degrees == expected);
  }
  const auto sin_r = truncated_complex(product_with_lie_algebra(CircleAlgebroid::rank1(TrigPoly::sin(1)), LieAlgebra::abelian(1)), 3);
  CHECK(sin_r.complex.degrees == std::vector<std::size_t>{7, 9 + 7, 9});
  CHECK_FALSE(sin_r.complex.chain_condition_failure());
}

TEST_CASE("the product complex is the graded tensor product") {
  const auto sl2 = gen::catalog_algebra("sl2");
  const std::vector<CircleAlgebroid> bases{
      CircleAlgebroid::rank1(one), CircleAlgebroid::rank1(TrigPoly::sin(1)),
      CircleAlgebroid::action(sl2, {one, TrigPoly::cos(2), TrigPoly::sin(2)})};
  const std::vector<LieAlgebra> fibers{gen::catalog_algebra("su2"), gen::catalog_algebra("aff1"), LieAlgebra::abelian(1)};
  for (const auto& a : bases) {
    for (const auto& g : fibers) {
      for (std::size_t N = 1; N <= 2; ++N) {
        const auto direct = truncated_complex(product_with_lie_algebra(a, g), N).complex;
        const auto tensor = tensor_product(truncated_complex(a, N).complex, ce_complex(Representation::trivial(g)));
        CHECK(direct.degrees == tensor.degrees);
        CHECK(direct.differentials == tensor.differentials);
        CHECK_FALSE(tensor.chain_condition_failure());
      }
    }
  }
}

TEST_CASE("kunneth_verify") {
  const auto su2 = lie_cohomology(Representation::trivial(gen::catalog_algebra("su2")));
  const auto ss = lie_cohomology(Representation::trivial(direct_sum(gen::catalog_algebra("su2"), gen::catalog_algebra("su2"))));
  CHECK(ss.betti == std::vector<std::size_t>{1, 0, 0, 2, 0, 0, 1});
  auto check = kunneth_verify(ss, su2, su2);
  CHECK(check.holds);
  CHECK(check.euler_multiplicative);
  CHECK(check.table.size() == 7);

  const auto p1 = CircleAlgebroid::rank1(one);
  const auto product = stabilized_cohomology(product_with_lie_algebra(p1, gen::catalog_algebra("su2")), 3, 6).report;
  CHECK(product.betti == std::vector<std::size_t>{1, 1, 0, 1, 1});
  CHECK(kunneth_verify(product, stabilized_cohomology(p1, 3, 6).report, su2).holds);

  const CohomologyReport unit{{1}, 1, {1}};
  CHECK(kunneth_verify(su2, su2, unit).holds);
  CohomologyReport wrong = ss;
  wrong.betti[3] = 1;
  check = kunneth_verify(wrong, su2, su2);
  CHECK_FALSE(check.holds);
  CHECK(check.table[3].product == 1);
  CHECK(check.table[3].expected == 2);
  CHECK(convolve({1, 1}, {1, 0, 0, 1}) == std::vector<std::size_t>{1, 1, 0, 1, 1});
}

TEST_CASE("convolution identity for all catalog pairs") {
  const auto& names = gen::catalog_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i; j < names.size(); ++j) {
      const auto g = gen::catalog_algebra(names[i]), h = gen::catalog_algebra(names[j]);
      if (g.dim() + h.dim() > 7) continue;
      CAPTURE(names[i]);
      CAPTURE(names[j]);
      const auto check = kunneth_verify(lie_cohomology(Representation::trivial(direct_sum(g, h))),
                                        lie_cohomology(Representation::trivial(g)),
                                        lie_cohomology(Representation::trivial(h)));
      CHECK(check.holds);
      CHECK(check.euler_multiplicative);
    }
  }
}

TEST_CASE("convolution identity with coefficients") {
  auto rng = gen::engine(0x6b6b);
  std::vector<std::pair<Representation, Representation>> pairs{
      {gen::catalog_rep("h3", "h3_adjoint"), Representation::trivial(gen::catalog_algebra("aff1"))},
      {gen::catalog_rep("h3", "h3_adjoint"), gen::catalog_rep("aff1", "aff1_adjoint")},
      {gen::catalog_rep("su2", "su2_adjoint"), Representation::trivial(LieAlgebra::abelian(1), 2)},
      {Representation::trivial(LieAlgebra(0), 2), gen::catalog_rep("h3", "h3_adjoint")},
  };
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = gen::semidirect(rng, 2 + trial % 2);
    const auto h = gen::semidirect(rng, 2);
    pairs.emplace_back(gen::semidirect_module(rng, g, 2), gen::semidirect_module(rng, h, 1 + trial % 2));
  }
  for (const auto& [e, f] : pairs) {
    const auto product = tensor_rep(e, f);
    REQUIRE(check_representation(product));
    const auto check = kunneth_verify(lie_cohomology(product), lie_cohomology(e), lie_cohomology(f));
    CHECK(check.holds);
    CHECK(check.euler_multiplicative);
  }
}

TEST_CASE("tensor_product of complexes matches the direct sum CE complex in cohomology") {
  const auto g = gen::catalog_algebra("h3"), h = gen::catalog_algebra("aff1");
  const auto tensor = tensor_product(ce_complex(Representation::trivial(g)), ce_complex(Representation::trivial(h)));
  CHECK_FALSE(tensor.chain_condition_failure());
  CHECK(complex_cohomology(tensor).betti == lie_cohomology(Representation::trivial(direct_sum(g, h))).betti);
}

TEST_CASE("products of classes") {
  const auto su2 = gen::catalog_algebra("su2");
  const auto cs = ce_complex(Representation::trivial(su2));
  const RationalVector vol{1};  // e^{012}
  const RationalVector exact_two = cs.differentials[1].apply(RationalVector{1, 0, 0});  // d e^0
  REQUIRE(is_nontrivial_class(cs, 3, vol));
  REQUIRE(is_cocycle(cs, 2, exact_two));
  REQUIRE_FALSE(is_nontrivial_class(cs, 2, exact_two));

  SUBCASE("su2 + su2 through the wedge in the sum") {
    const auto sum = ce_complex(Representation::trivial(direct_sum(su2, su2)));
    CHECK(is_nontrivial_class(sum, 6, external_wedge(vol, 3, 3, vol, 3, 3)));
    const auto mixed = external_wedge(exact_two, 2, 3, vol, 3, 3);
    CHECK(is_cocycle(sum, 5, mixed));
    CHECK_FALSE(is_nontrivial_class(sum, 5, mixed));
  }
  SUBCASE("su2 + su2 through the tensor product complex") {
    const auto t = tensor_product(cs, cs);
    CHECK(is_nontrivial_class(t, 6, cross_product(cs, 3, vol, cs, 3, vol)));
    const auto mixed = cross_product(cs, 2, exact_two, cs, 3, vol);
    CHECK(is_cocycle(t, 5, mixed));
    CHECK_FALSE(is_nontrivial_class(t, 5, mixed));
  }
  SUBCASE("rank-one anchor p = 1 times su2") {
    const std::size_t N = 3;
    const auto circle = truncated_complex(CircleAlgebroid::rank1(one), N).complex;
    const auto dt = unit(circle.degrees[1], 0);  // 1·e^t
    REQUIRE(is_nontrivial_class(circle, 1, dt));
    const auto exact_one = circle.differentials[0].apply(unit(circle.degrees[0], 1));  // d(cos t)
    REQUIRE_FALSE(is_nontrivial_class(circle, 1, exact_one));
    const auto product = truncated_complex(product_with_lie_algebra(CircleAlgebroid::rank1(one), su2), N).complex;
    CHECK(is_nontrivial_class(product, 4, cross_product(circle, 1, dt, cs, 3, vol)));
    const auto one_form = unit(circle.degrees[0], 0);  // the constant 1 in degree 0
    CHECK(is_nontrivial_class(product, 3, cross_product(circle, 0, one_form, cs, 3, vol)));
    const auto mixed = cross_product(circle, 1, exact_one, cs, 3, vol);
    CHECK(is_cocycle(product, 4, mixed));
    CHECK_FALSE(is_nontrivial_class(product, 4, mixed));
  }
}
