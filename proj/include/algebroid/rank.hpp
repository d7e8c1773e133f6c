#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "algebroid/matrix.hpp"

namespace algebroid {

enum class RankMethod {
  Exact,    // fraction-free elimination over Z
  Modular,  // max of ranks modulo a fixed set of 31-bit primes
};

/// Exact rank over Q. Rows are cleared of denominators and reduced by
/// fraction-free (Bareiss) elimination. Pivot: smallest bit size in the
/// current column, ties to the lowest row index.
std::size_t rank(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m, RankMethod method);

std::size_t kernel_dim(const RationalMatrix& m);
std::size_t cokernel_dim(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form (free variable set to 1).
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// True iff v lies in the column space of m.
bool in_column_space(const RationalMatrix& m, std::span<const Rational> v);

/// Default primes for the modular path.
std::span<const std::uint64_t> default_rank_primes();

/// Rank modulo each prime; returns the maximum. Always a lower bound for the
/// rational rank, equal to it unless every prime divides some maximal minor.
std::size_t modular_rank(const RationalMatrix& m, std::span<const std::uint64_t> primes);
std::size_t modular_rank(const RationalMatrix& m);

}  // namespace algebroid
