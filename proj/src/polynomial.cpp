#include "algebroid/polynomial.hpp"

#include "algebroid/error.hpp"

namespace algebroid {

Polynomial::Polynomial(RationalVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(RationalVector{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  RationalVector v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& u) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  RationalVector d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, Polynomial a) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ValidationFailed, "polynomial division by zero");
  Polynomial remainder = a;
  RationalVector quotient(a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0);
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(remainder.degree() - b.degree());
    const Rational factor = remainder.leading() / b.leading();
    quotient[shift] = factor;
    remainder -= Polynomial::monomial(factor, shift) * b;
  }
  return {Polynomial(std::move(quotient)), std::move(remainder)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (1 / a.leading()) * a;
}

namespace {

int sign(const Rational& x) { return sgn(x); }

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ValidationFailed, "zero polynomial has infinitely many roots");
  if (p.degree() == 0) return 0;
  // Square-free part: p / gcd(p, p').
  const Polynomial g = gcd(p, p.derivative());
  const Polynomial f = divide(p, g).quotient;
  if (f.degree() <= 0) return 0;

  std::vector<Polynomial> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    Polynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  std::vector<int> at_minus, at_plus;
  for (const auto& q : chain) {
    const int lead = sign(q.leading());
    at_plus.push_back(lead);
    at_minus.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_minus) - sign_changes(at_plus);
}

}  // namespace algebroid
