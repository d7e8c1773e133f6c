#include <doctest.h>

#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"
#include "generators.hpp"

using namespace algebroid;

namespace {
MultiIndex mi(std::vector<std::uint32_t> v, std::size_t n) { return MultiIndex(std::move(v), n); }
}  // namespace

TEST_CASE("basis enumeration") {
  const auto b = basis(3, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == mi({0, 1}, 3));
  CHECK(b[1] == mi({0, 2}, 3));
  CHECK(b[2] == mi({1, 2}, 3));
  CHECK(basis(5, 0).size() == 1);
  CHECK(basis(5, 0)[0].degree() == 0);
  CHECK(basis(2, 3).empty());
  CHECK(basis(0, 0).size() == 1);
}

TEST_CASE("basis sizes are binomial and lexicographic up to n = 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t p = 0; p <= n; ++p) {
      const auto b = basis(n, p);
      CHECK(b.size() == binomial_size(n, p));
      CHECK(Integer(static_cast<unsigned long>(b.size())) == binomial(n, p));
      for (std::size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
      const ExteriorBasis eb(n, p);
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(eb.position(b[i]) == i);
    }
  }
}

TEST_CASE("multi-index validation") {
  CHECK_THROWS_AS(mi({1, 0}, 3), Error);
  CHECK_THROWS_AS(mi({0, 0}, 3), Error);
  CHECK_THROWS_AS(mi({3}, 3), Error);
  CHECK(mi({0, 2}, 3).contains(2));
  CHECK_FALSE(mi({0, 2}, 3).contains(1));
}

TEST_CASE("wedge signs") {
  auto w = wedge(mi({0}, 2), mi({1}, 2));
  REQUIRE(w);
  CHECK(w->sign == 1);
  CHECK(w->index == mi({0, 1}, 2));
  w = wedge(mi({1}, 2), mi({0}, 2));
  REQUIRE(w);
  CHECK(w->sign == -1);
  CHECK(w->index == mi({0, 1}, 2));
  CHECK_FALSE(wedge(mi({0, 1}, 2), mi({1}, 2)));
  // e^1 ∧ e^{0,2}: one transposition
  w = wedge(mi({1}, 3), mi({0, 2}, 3));
  REQUIRE(w);
  CHECK(w->sign == -1);
}

TEST_CASE("wedge is graded commutative and associative") {
  const std::size_t n = 6;
  auto rng = gen::engine(0xe7e7);
  std::uniform_int_distribution<std::uint64_t> mask(0, (1u << n) - 1);
  const auto from_mask = [&](std::uint64_t m) {
    std::vector<std::uint32_t> v;
    for (std::uint32_t i = 0; i < n; ++i)
      if (m >> i & 1) v.push_back(i);
    return mi(v, n);
  };
  for (int trial = 0; trial < 400; ++trial) {
    const auto a = from_mask(mask(rng)), b = from_mask(mask(rng)), c = from_mask(mask(rng));
    const auto ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab.has_value() == ba.has_value());
    if (ab) {
      const int koszul = (a.degree() * b.degree()) % 2 ? -1 : 1;
      CHECK(ab->index == ba->index);
      CHECK(ab->sign == koszul * ba->sign);
    }
    std::optional<SignedIndex> left, right;
    if (ab) left = wedge(ab->index, c);
    if (const auto bc = wedge(b, c)) right = wedge(a, bc->index);
    CHECK(left.has_value() == right.has_value());
    if (left && right) {
      CHECK(left->index == right->index);
      CHECK(left->sign * ab->sign == right->sign * wedge(b, c)->sign);
    }
  }
}

TEST_CASE("alternating binomial sums") {
  CHECK(alternating_binomial_sum(0) == 1);
  CHECK(alternating_binomial_sum(1) == 0);
  CHECK(alternating_binomial_sum(7) == 0);
  for (std::size_t r = 1; r <= 64; ++r) CHECK(alternating_binomial_sum(r) == 0);
  CHECK(binomial(64, 32) == Integer("1832624140942590534"));
}

TEST_CASE("left wedge matrix and wedge_forms agree") {
  auto rng = gen::engine(0xe7e8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    RationalVector beta(n);
    for (auto& x : beta) x = gen::rational(rng);
    for (std::size_t p = 0; p < n; ++p) {
      const auto m = left_wedge_matrix(beta, p);
      CHECK(m.rows() == binomial_size(n, p + 1));
      CHECK(m.cols() == binomial_size(n, p));
      RationalVector omega(binomial_size(n, p));
      for (auto& x : omega) x = gen::rational(rng);
      CHECK(m.apply(omega) == wedge_forms(beta, 1, omega, p, n));
      // β ∧ β = 0
      if (p + 1 < n) CHECK((left_wedge_matrix(beta, p + 1) * m).is_zero());
    }
  }
}
