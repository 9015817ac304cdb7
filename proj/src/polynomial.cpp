#include "stieltjes/polynomial.hpp"

#include <sstream>

#include "stieltjes/error.hpp"

namespace stieltjes {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shift(const Rational& alpha) const {
  // Horner in the ring of polynomials: r = (...(c_d (z+a) + c_{d-1})(z+a) + ...).
  const Polynomial step({alpha, Rational(1)});
  Polynomial r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * step + constant(*it);
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error("division-by-zero", "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + Polynomial::constant(*it);
  return r;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace stieltjes
