#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

/// Dense univariate polynomial over the rationals; coefficient k multiplies z^k.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients)
      : Polynomial(std::vector<Rational>(coefficients)) {}

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  /// c * z^k
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// z - root
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of z^k, zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  /// Zero for the zero polynomial.
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Rational(1); }

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;

  /// q(z) = p(z + alpha).
  Polynomial shift(const Rational& alpha) const;

  /// Euclidean division; throws Error("division-by-zero") for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a *= c.inverse(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in variable `var`, e.g. "z^2 - 1".
  std::string to_string(const std::string& var = "z") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// p evaluated at the polynomial q: p(q(z)).
Polynomial compose(const Polynomial& p, const Polynomial& q);

}  // namespace stieltjes
