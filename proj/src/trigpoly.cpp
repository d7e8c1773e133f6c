#include "algebroid/trigpoly.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "algebroid/error.hpp"
#include "algebroid/exterior.hpp"

namespace algebroid {

TrigPoly::TrigPoly(Rational constant) : constant_(std::move(constant)) {}

TrigPoly::TrigPoly(Rational constant, RationalVector cos_coeffs, RationalVector sin_coeffs)
    : constant_(std::move(constant)), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
  const std::size_t n = std::max(cos_.size(), sin_.size());
  cos_.resize(n);
  sin_.resize(n);
  trim();
}

TrigPoly TrigPoly::cos(std::size_t k, Rational coeff) {
  if (k == 0) return TrigPoly(coeff);
  RationalVector c(k);
  c[k - 1] = std::move(coeff);
  return TrigPoly(0, std::move(c), {});
}

TrigPoly TrigPoly::sin(std::size_t k, Rational coeff) {
  if (k == 0) return {};
  RationalVector s(k);
  s[k - 1] = std::move(coeff);
  return TrigPoly(0, {}, std::move(s));
}

TrigPoly TrigPoly::from_window(std::span<const Rational> coords) {
  if (coords.empty() || coords.size() % 2 == 0)
    throw Error(ErrorCode::ValidationFailed, "window coordinates must have odd length");
  const std::size_t m = coords.size() / 2;
  RationalVector c(m), s(m);
  for (std::size_t k = 1; k <= m; ++k) {
    c[k - 1] = coords[2 * k - 1];
    s[k - 1] = coords[2 * k];
  }
  return TrigPoly(coords[0], std::move(c), std::move(s));
}

void TrigPoly::trim() {
  while (!cos_.empty() && cos_.back() == 0 && sin_.back() == 0) {
    cos_.pop_back();
    sin_.pop_back();
  }
}

Rational TrigPoly::cos_coeff(std::size_t k) const { return (k >= 1 && k <= cos_.size()) ? cos_[k - 1] : Rational(0); }
Rational TrigPoly::sin_coeff(std::size_t k) const { return (k >= 1 && k <= sin_.size()) ? sin_[k - 1] : Rational(0); }

RationalVector TrigPoly::window(std::size_t m) const {
  if (degree() > m) {
    throw Error(ErrorCode::ValidationFailed,
                "degree " + std::to_string(degree()) + " does not fit window " + std::to_string(m));
  }
  RationalVector out(window_dim(m));
  out[0] = constant_;
  for (std::size_t k = 1; k <= degree(); ++k) {
    out[2 * k - 1] = cos_[k - 1];
    out[2 * k] = sin_[k - 1];
  }
  return out;
}

Rational TrigPoly::at_quarter_turn(long k) const {
  // cos(jkπ/2), sin(jkπ/2) cycle through (1,0), (0,1), (-1,0), (0,-1)
  static constexpr int kCos[4] = {1, 0, -1, 0};
  static constexpr int kSin[4] = {0, 1, 0, -1};
  Rational value = constant_;
  for (std::size_t j = 1; j <= degree(); ++j) {
    const long phase = ((static_cast<long>(j) * k) % 4 + 4) % 4;
    value += kCos[phase] * cos_[j - 1] + kSin[phase] * sin_[j - 1];
  }
  return value;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  constant_ += o.constant_;
  const std::size_t n = std::max(degree(), o.degree());
  cos_.resize(n);
  sin_.resize(n);
  for (std::size_t k = 0; k < o.degree(); ++k) {
    cos_[k] += o.cos_[k];
    sin_[k] += o.sin_[k];
  }
  trim();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += Rational(-1) * o; }

TrigPoly operator*(const Rational& s, TrigPoly a) {
  a.constant_ *= s;
  for (auto& c : a.cos_) c *= s;
  for (auto& c : a.sin_) c *= s;
  a.trim();
  return a;
}

namespace {

// Accumulates c·cos(kt) or c·sin(kt) for a signed frequency k.
struct Accumulator {
  Rational constant = 0;
  RationalVector cos, sin;

  explicit Accumulator(std::size_t degree) : cos(degree), sin(degree) {}

  void add_cos(long k, const Rational& c) {
    const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
    if (a == 0) constant += c;
    else cos[a - 1] += c;
  }
  void add_sin(long k, const Rational& c) {
    if (k == 0) return;
    if (k < 0) sin[static_cast<std::size_t>(-k) - 1] -= c;
    else sin[static_cast<std::size_t>(k) - 1] += c;
  }
  TrigPoly finish() { return TrigPoly(constant, std::move(cos), std::move(sin)); }
};

}  // namespace

TrigPoly trig_mul(const TrigPoly& f, const TrigPoly& g) {
  Accumulator acc(f.degree() + g.degree());
  const Rational half(1, 2);
  // frequency 0 terms are folded in as cos(0t) = 1, sin(0t) = 0
  for (std::size_t a = 0; a <= f.degree(); ++a) {
    const Rational fa = a == 0 ? f.constant() : f.cos_coeff(a);
    const Rational fb = f.sin_coeff(a);
    for (std::size_t b = 0; b <= g.degree(); ++b) {
      const Rational ga = b == 0 ? g.constant() : g.cos_coeff(b);
      const Rational gb = g.sin_coeff(b);
      const long sum = static_cast<long>(a + b);
      const long diff = static_cast<long>(a) - static_cast<long>(b);
      if (fa != 0 && ga != 0) {  // cos a cos b
        acc.add_cos(diff, half * fa * ga);
        acc.add_cos(sum, half * fa * ga);
      }
      if (fb != 0 && gb != 0) {  // sin a sin b
        acc.add_cos(diff, half * fb * gb);
        acc.add_cos(sum, -half * fb * gb);
      }
      if (fb != 0 && ga != 0) {  // sin a cos b
        acc.add_sin(sum, half * fb * ga);
        acc.add_sin(diff, half * fb * ga);
      }
      if (fa != 0 && gb != 0) {  // cos a sin b
        acc.add_sin(sum, half * fa * gb);
        acc.add_sin(-diff, half * fa * gb);
      }
    }
  }
  return acc.finish();
}

TrigPoly trig_derivative(const TrigPoly& f) {
  RationalVector c(f.degree()), s(f.degree());
  for (std::size_t k = 1; k <= f.degree(); ++k) {
    const auto kk = static_cast<unsigned long>(k);
    c[k - 1] = f.sin_coeff(k) * kk;
    s[k - 1] = -f.cos_coeff(k) * kk;
  }
  return TrigPoly(0, std::move(c), std::move(s));
}

TrigPoly vf_bracket(const TrigPoly& u, const TrigPoly& v) {
  return trig_mul(u, trig_derivative(v)) - trig_mul(v, trig_derivative(u));
}

Polynomial weierstrass_numerator(const TrigPoly& p) {
  const std::size_t d = p.degree();
  const Polynomial one_plus_u2(RationalVector{1, 0, 1});
  std::vector<Polynomial> powers{Polynomial::constant(1)};
  for (std::size_t k = 1; k <= d; ++k) powers.push_back(powers.back() * one_plus_u2);

  Polynomial q = p.constant() * powers[d];
  for (std::size_t k = 1; k <= d; ++k) {
    // (1 + iu)^{2k} = Σ_j C(2k, j) i^j u^j
    RationalVector re(2 * k + 1), im(2 * k + 1);
    for (std::size_t j = 0; j <= 2 * k; ++j) {
      const Rational c(binomial(2 * k, j));
      const bool negative = (j / 2) % 2 == 1;
      if (j % 2 == 0) re[j] = negative ? Rational(-c) : c;
      else im[j] = negative ? Rational(-c) : c;
    }
    const Polynomial term = p.cos_coeff(k) * Polynomial(re) + p.sin_coeff(k) * Polynomial(im);
    q += term * powers[d - k];
  }
  return q;
}

namespace {

Rational value_at_pi(const TrigPoly& p) { return p.at_quarter_turn(2); }

}  // namespace

bool has_zero_on_circle(const TrigPoly& p) {
  if (p.is_zero()) return true;
  if (value_at_pi(p) == 0) return true;
  return count_real_roots(weierstrass_numerator(p)) > 0;
}

std::size_t count_simple_zeros(const TrigPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ValidationFailed, "zero trigonometric polynomial has no isolated zeros");
  const Polynomial q = weierstrass_numerator(p);
  const Polynomial common = gcd(q, q.derivative());
  if (common.degree() > 0 && count_real_roots(common) > 0)
    throw Error(ErrorCode::NonsimpleZero, "'" + format_trig(p) + "' has a multiple zero in (-pi, pi)");
  std::size_t zeros = count_real_roots(q);
  if (value_at_pi(p) == 0) {
    if (value_at_pi(trig_derivative(p)) == 0)
      throw Error(ErrorCode::NonsimpleZero, "'" + format_trig(p) + "' has a multiple zero at t = pi");
    ++zeros;
  }
  return zeros;
}

std::string format_trig(const TrigPoly& p) {
  std::string out = format_rational(p.constant());
  for (std::size_t k = 1; k <= p.degree(); ++k) {
    if (p.cos_coeff(k) != 0) out += " + " + format_rational(p.cos_coeff(k)) + "*cos(" + std::to_string(k) + "t)";
    if (p.sin_coeff(k) != 0) out += " + " + format_rational(p.sin_coeff(k)) + "*sin(" + std::to_string(k) + "t)";
  }
  return out;
}

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

TrigPoly parse_term(std::string_view term, std::string_view whole) {
  const auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "trig polynomial '" + std::string(whole) + "': " + why);
  };
  term = trim_view(term);
  if (term.empty()) throw fail("empty term");
  Rational coeff = 1;
  std::string_view func = term;
  if (const auto star = term.find('*'); star != std::string_view::npos) {
    coeff = parse_rational(term.substr(0, star));
    func = trim_view(term.substr(star + 1));
  } else if (term.find('(') == std::string_view::npos) {
    return TrigPoly(parse_rational(term));
  } else if (term.front() == '-') {
    coeff = -1;
    func = trim_view(term.substr(1));
  }
  const bool is_cos = func.starts_with("cos(");
  const bool is_sin = func.starts_with("sin(");
  if ((!is_cos && !is_sin) || !func.ends_with("t)")) throw fail("expected cos(kt) or sin(kt) in '" + std::string(term) + "'");
  const std::string_view freq = func.substr(4, func.size() - 6);
  if (freq.empty() || !std::all_of(freq.begin(), freq.end(), [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw fail("bad frequency in '" + std::string(term) + "'");
  const std::size_t k = std::stoul(std::string(freq));
  return is_cos ? TrigPoly::cos(k, coeff) : TrigPoly::sin(k, coeff);
}

}  // namespace

TrigPoly parse_trig(std::string_view text) {
  std::string normalized;
  normalized.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // binary minus "a - b" becomes "a + -b"
    if (text[i] == '-' && i > 0 && i + 1 < text.size() && text[i - 1] == ' ' && text[i + 1] == ' ') {
      normalized += "+ -";
      ++i;
      continue;
    }
    normalized += text[i];
  }
  TrigPoly out;
  std::size_t start = 0;
  std::size_t terms = 0;
  while (start <= normalized.size()) {
    const auto plus = normalized.find('+', start);
    const auto end = plus == std::string::npos ? normalized.size() : plus;
    out += parse_term(std::string_view(normalized).substr(start, end - start), text);
    ++terms;
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (terms == 0) throw Error(ErrorCode::ParseError, "empty trig polynomial");
  return out;
}

}  // namespace algebroid
