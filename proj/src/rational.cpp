#include "stieltjes/rational.hpp"

#include <cctype>

#include "stieltjes/error.hpp"

namespace stieltjes {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("division-by-zero", "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  const auto first = body.find_first_not_of(" \t");
  body = first == std::string_view::npos ? std::string_view() : body.substr(first, body.find_last_not_of(" \t") - first + 1);
  bool negative = false;
  constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with(unicode_minus)) {
    negative = true;
    body.remove_prefix(unicode_minus.size());
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error("parse", "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("parse", "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division-by-zero", "rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace stieltjes
