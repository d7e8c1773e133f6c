#include "algebroid/rank.hpp"

#include <array>
#include <utility>

namespace algebroid {

namespace {

// Scales each row by the lcm of its denominators so the row is integral.
std::vector<std::vector<Integer>> integral_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const Rational& x : m.row(r)) {
      if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x == 0) continue;
      Integer scaled = l / Integer(x.get_den());
      out[r][c] = scaled * Integer(x.get_num());
    }
  }
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    std::size_t best = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::size_t size = bit_size(a[i][c]);
      if (pivot == rows || size < best) {
        pivot = i;
        best = size;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Every intermediate value is a minor of the input, so the division
        // by the previous pivot is exact.
        Integer v = p * a[i][j];
        if (f != 0 && a[r][j] != 0) v -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::uint64_t mod_reduce(const Integer& x, std::uint64_t prime) {
  Integer q = x % static_cast<unsigned long>(prime);
  if (q < 0) q += static_cast<unsigned long>(prime);
  return q.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t prime) {
  std::uint64_t result = 1;
  base %= prime;
  while (exp) {
    if (exp & 1) result = result * base % prime;
    base = base * base % prime;
    exp >>= 1;
  }
  return result;
}

std::size_t rank_mod_prime(const std::vector<std::vector<Integer>>& rows, std::size_t cols,
                           std::uint64_t prime) {
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = rows[i][j] == 0 ? 0 : mod_reduce(rows[i][j], prime);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const std::uint64_t inv = mod_pow(a[r][c], prime - 2, prime);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c] * inv % prime;
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + prime - f * a[r][j] % prime) % prime;
      }
    }
    ++r;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = a.rows();
    std::size_t best = 0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const std::size_t size = bit_size(a(i, c));
      if (pivot == a.rows() || size < best) {
        pivot = i;
        best = size;
      }
    }
    if (pivot == a.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

constexpr std::array<std::uint64_t, 3> kPrimes = {2147483647ULL, 2147483629ULL, 2147483587ULL};

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return bareiss_rank(integral_rows(m), m.cols());
}

std::size_t rank(const RationalMatrix& m, RankMethod method) {
  return method == RankMethod::Exact ? rank(m) : modular_rank(m);
}

std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

std::size_t cokernel_dim(const RationalMatrix& m) { return m.rows() - rank(m); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_column_space(const RationalMatrix& m, std::span<const Rational> v) {
  RationalMatrix augmented(m.rows(), m.cols() + 1);
  place_block(augmented, 0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) augmented(r, m.cols()) = v[r];
  return rank(augmented) == rank(m);
}

std::span<const std::uint64_t> default_rank_primes() { return kPrimes; }

std::size_t modular_rank(const RationalMatrix& m, std::span<const std::uint64_t> primes) {
  if (m.empty()) return 0;
  const auto rows = integral_rows(m);
  std::size_t best = 0;
  for (auto p : primes) best = std::max(best, rank_mod_prime(rows, m.cols(), p));
  return best;
}

std::size_t modular_rank(const RationalMatrix& m) { return modular_rank(m, kPrimes); }

}  // namespace algebroid
