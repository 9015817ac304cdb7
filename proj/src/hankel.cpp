#include "stieltjes/hankel.hpp"

#include <string>
#include <utility>

#include "stieltjes/error.hpp"

namespace stieltjes {

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational sign(1);
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Rational(0);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

Matrix hankel_matrix(const MomentSequence& s, std::size_t n, std::size_t offset) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = s[i + k + offset];
  return m;
}

[[noreturn]] void insufficient(std::size_t needed, std::size_t have) {
  throw Error("insufficient-moments", "needs moments up to s_" + std::to_string(needed) + " but only " +
                                          std::to_string(have) + " are given");
}

}  // namespace

Rational hankel_determinant(const MomentSequence& s, std::size_t n) {
  if (n == 0) return Rational(1);
  if (2 * n - 1 > s.size()) insufficient(2 * n - 2, s.size());
  return determinant(hankel_matrix(s, n, 0));
}

Rational shifted_hankel_determinant(const MomentSequence& s, std::size_t n) {
  if (n == 0) return Rational(1);
  if (2 * n > s.size()) insufficient(2 * n - 1, s.size());
  return determinant(hankel_matrix(s, n, 1));
}

NormalIndices normal_indices(const MomentSequence& s) {
  NormalIndices out;
  for (std::size_t n = 1; 2 * n - 1 <= s.size(); ++n)
    if (!hankel_determinant(s, n).is_zero()) out.indices.push_back(n);
  return out;
}

RegularityResult is_regular(const MomentSequence& s, const NormalIndices& idx) {
  for (std::size_t n : idx.indices) {
    if (shifted_hankel_determinant(s, n).is_zero()) return {false, n};
  }
  return {};
}

bool is_alpha_regular(const std::vector<Polynomial>& polys, const Rational& alpha) {
  for (const auto& p : polys)
    if (p.eval(alpha).is_zero()) return false;
  return true;
}

Rational find_alpha(const std::vector<Polynomial>& polys) {
  for (const auto& p : polys)
    if (p.is_zero()) throw Error("alpha-singular", "zero polynomial vanishes at every alpha");
  // Each nonzero P has finitely many roots, so the ladder terminates.
  for (long k = 0;; ++k) {
    Rational candidate = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (is_alpha_regular(polys, candidate)) return candidate;
  }
}

}  // namespace stieltjes
