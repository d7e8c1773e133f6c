#pragma once

#include <vector>

#include "algebroid/rational.hpp"

namespace algebroid {

/// Dense univariate polynomial over Q, coefficient k multiplies u^k.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RationalVector coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const RationalVector& coeffs() const noexcept { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational operator()(const Rational& u) const;

  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  RationalVector coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Number of distinct real roots, by a Sturm sequence of the square-free part.
std::size_t count_real_roots(const Polynomial& p);

}  // namespace algebroid
