#pragma once

#include <span>
#include <string>
#include <string_view>

#include "algebroid/polynomial.hpp"
#include "algebroid/rational.hpp"

namespace algebroid {

/// Real trigonometric polynomial c0 + Σ_k (a_k cos kt + b_k sin kt) with
/// rational coefficients. Stored trimmed: degree() is minimal and the zero
/// polynomial has degree 0.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(Rational constant);
  TrigPoly(Rational constant, RationalVector cos_coeffs, RationalVector sin_coeffs);

  static TrigPoly cos(std::size_t k, Rational coeff = 1);
  static TrigPoly sin(std::size_t k, Rational coeff = 1);

  /// Coordinates in the window basis (1, cos t, sin t, ..., cos mt, sin mt).
  static TrigPoly from_window(std::span<const Rational> coords);

  const Rational& constant() const noexcept { return constant_; }
  /// a_k for k >= 1 (zero past the degree).
  Rational cos_coeff(std::size_t k) const;
  Rational sin_coeff(std::size_t k) const;
  const RationalVector& cos_coeffs() const noexcept { return cos_; }
  const RationalVector& sin_coeffs() const noexcept { return sin_; }
  std::size_t degree() const noexcept { return cos_.size(); }
  bool is_zero() const noexcept { return constant_ == 0 && cos_.empty(); }

  /// Window coordinates of length 2m+1. Throws if degree() > m.
  RationalVector window(std::size_t m) const;

  /// Exact value at t = kπ/2.
  Rational at_quarter_turn(long k) const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(const Rational& s, TrigPoly a);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  void trim();

  Rational constant_ = 0;
  RationalVector cos_;  // cos_[k-1] = a_k
  RationalVector sin_;  // sin_[k-1] = b_k, same length as cos_
};

/// Dimension 2m+1 of the window V_m.
inline std::size_t window_dim(std::size_t m) { return 2 * m + 1; }

/// Product via product-to-sum identities.
TrigPoly trig_mul(const TrigPoly& f, const TrigPoly& g);

TrigPoly trig_derivative(const TrigPoly& f);

/// Coefficient of the vector-field bracket [u∂_t, v∂_t] = (u v' - v u') ∂_t.
TrigPoly vf_bracket(const TrigPoly& u, const TrigPoly& v);

/// (1+u^2)^deg p · p(t) under u = tan(t/2): a polynomial whose real roots
/// are exactly the zeros of p in (-π, π).
Polynomial weierstrass_numerator(const TrigPoly& p);

/// True iff p vanishes somewhere on the circle (decided exactly).
bool has_zero_on_circle(const TrigPoly& p);

/// Number of zeros of p on [0, 2π). Throws Error(ValidationFailed) for the
/// zero polynomial and Error(NonsimpleZero) if p and p' share a zero.
std::size_t count_simple_zeros(const TrigPoly& p);

/// "c0 + a1*cos(1t) + b1*sin(1t) + ..." listing non-zero terms only; the
/// constant is always printed.
std::string format_trig(const TrigPoly& p);

/// Inverse of format_trig. Terms may appear in any order and may omit the
/// coefficient; " - " is accepted as a separator. Throws Error(ParseError).
TrigPoly parse_trig(std::string_view text);

}  // namespace algebroid
