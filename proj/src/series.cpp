#include "stieltjes/series.hpp"

#include <algorithm>

#include "stieltjes/error.hpp"

namespace stieltjes {

InvZSeries InvZSeries::truncated(std::size_t k) const {
  k = std::min(k, coeffs_.size());
  return InvZSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k)));
}

InvZSeries series_add(const InvZSeries& a, const InvZSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> r(n);
  for (std::size_t k = 0; k < n; ++k) r[k] = a[k] + b[k];
  return InvZSeries(std::move(r));
}

InvZSeries series_mul(const InvZSeries& a, const InvZSeries& b) {
  // z^{-(i+1)} * z^{-(j+1)} = z^{-(i+j+2)} lands at index i+j+1.
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rational> r(n);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = 0; i + 1 <= k; ++i) r[k] += a[i] * b[k - 1 - i];
  return InvZSeries(std::move(r));
}

RationalFunction::RationalFunction(Polynomial numer, Polynomial denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
  if (denom_.is_zero()) throw Error("zero-denominator", "rational function with zero denominator");
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = denom_.eval(x);
  if (d.is_zero()) throw Error("pole", "denominator vanishes at z = " + x.to_string());
  return numer_.eval(x) / d;
}

InvZSeries series_of_rational(const RationalFunction& f, std::size_t order) {
  if (!f.is_proper()) throw Error("improper", "series expansion needs deg(numer) < deg(denom)");
  const auto& num = f.numer().coefficients();
  const auto& den = f.denom().coefficients();
  const int n = f.numer().degree();
  const int d = f.denom().degree();
  // In w = 1/z: f = w^{d-n} * rev(num)(w) / rev(den)(w), rev(den)(0) = lead(den) != 0.
  // Coefficient of w^{m+1} needs quotient term q_k with k = m + 1 - (d - n).
  std::vector<Rational> out(order);
  if (f.numer().is_zero() || order == 0) return InvZSeries(std::move(out));
  const int shift = d - n;
  const int kmax = static_cast<int>(order) - shift;  // q_0 .. q_{kmax}
  if (kmax < 0) return InvZSeries(std::move(out));
  auto rnum = [&](int i) { return i <= n ? num[static_cast<std::size_t>(n - i)] : Rational(0); };
  auto rden = [&](int i) { return i <= d ? den[static_cast<std::size_t>(d - i)] : Rational(0); };
  const Rational lead_inv = rden(0).inverse();
  std::vector<Rational> q(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    Rational acc = rnum(k);
    for (int i = 1; i <= std::min(k, d); ++i) acc -= rden(i) * q[static_cast<std::size_t>(k - i)];
    q[static_cast<std::size_t>(k)] = acc * lead_inv;
  }
  for (std::size_t m = 0; m < order; ++m) {
    const int k = static_cast<int>(m) + 1 - shift;
    if (k >= 0) out[m] = q[static_cast<std::size_t>(k)];
  }
  return InvZSeries(std::move(out));
}

}  // namespace stieltjes
