#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

/// s_0 .. s_ell.
using MomentSequence = std::vector<Rational>;

/// Row-major square matrix of rationals.
using Matrix = std::vector<std::vector<Rational>>;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// The empty matrix has determinant 1.
Rational determinant(Matrix m);

/// n x n Hankel determinant det(s_{i+k}), D_0 = 1.
/// Throws Error("insufficient-moments") when 2n-2 > ell.
Rational hankel_determinant(const MomentSequence& s, std::size_t n);

/// det(s_{i+k+1}), D+_0 = 1. Throws Error("insufficient-moments") when 2n-1 > ell.
Rational shifted_hankel_determinant(const MomentSequence& s, std::size_t n);

struct NormalIndices {
  std::vector<std::size_t> indices;  // strictly increasing

  std::size_t count() const { return indices.size(); }
  bool empty() const { return indices.empty(); }
  std::size_t last() const { return indices.back(); }
  friend bool operator==(const NormalIndices&, const NormalIndices&) = default;
};

/// All n >= 1 with 2n-2 <= ell and D_n != 0.
NormalIndices normal_indices(const MomentSequence& s);

struct RegularityResult {
  bool regular = true;
  std::optional<std::size_t> witness;  // first n_j with D+_{n_j} == 0

  explicit operator bool() const { return regular; }
};

/// D+_{n_j} != 0 for every listed index. Throws Error("insufficient-moments")
/// when some D+_{n_j} needs moments beyond the data.
RegularityResult is_regular(const MomentSequence& s, const NormalIndices& idx);

/// Every P_{n_j}(alpha) != 0.
bool is_alpha_regular(const std::vector<Polynomial>& polys, const Rational& alpha);

/// First candidate in 0, 1, -1, 2, -2, ... that is alpha-regular for `polys`.
Rational find_alpha(const std::vector<Polynomial>& polys);

}  // namespace stieltjes
