#pragma once

#include <cstddef>
#include <vector>

#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

/// Truncated formal series sum_k c_k z^{-(k+1)}; only the first `order()`
/// coefficients are known.
class InvZSeries {
public:
  InvZSeries() = default;
  explicit InvZSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

  static InvZSeries zero(std::size_t order) { return InvZSeries(std::vector<Rational>(order)); }

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  /// First k coefficients (k <= order()).
  InvZSeries truncated(std::size_t k) const;

  friend bool operator==(const InvZSeries&, const InvZSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Result order is min(p, q) for both operations. In a product the z^{-1}
/// coefficient is a structural zero.
InvZSeries series_add(const InvZSeries& a, const InvZSeries& b);
InvZSeries series_mul(const InvZSeries& a, const InvZSeries& b);

/// numer / denom, kept unreduced; equality is cross-multiplication.
class RationalFunction {
public:
  /// Throws Error("zero-denominator").
  RationalFunction(Polynomial numer, Polynomial denom);

  const Polynomial& numer() const { return numer_; }
  const Polynomial& denom() const { return denom_; }

  bool is_proper() const { return numer_.degree() < denom_.degree(); }

  /// Throws Error("pole") when the denominator vanishes at x.
  Rational eval(const Rational& x) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numer_ * b.denom_ == b.numer_ * a.denom_;
  }

private:
  Polynomial numer_;
  Polynomial denom_;
};

/// Coefficients c_0..c_{order-1} of f = sum c_k z^{-(k+1)}; f must be proper.
/// Throws Error("improper").
InvZSeries series_of_rational(const RationalFunction& f, std::size_t order);

}  // namespace stieltjes
