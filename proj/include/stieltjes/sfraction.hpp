#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stieltjes/pfraction.hpp"

namespace stieltjes {

struct SFractionAtom {
  Polynomial m;              // degree nu_j - 1, leading coefficient d
  std::optional<Rational> l; // absent only for the open last atom of odd data
  Rational d;
};

/// f = 1 / (-(z-alpha) m_1 + 1 / (l_1 + 1 / (-(z-alpha) m_2 + ...))).
struct SFraction {
  Rational alpha;
  std::vector<SFractionAtom> atoms;
  PFraction source;

  std::size_t size() const { return atoms.size(); }
  /// Every l_j is known, so the even (index 2N) convergent exists.
  bool complete() const { return !source.open_last_atom; }
};

enum class Parity { odd, even };

/// S-atoms from P-atoms with shift alpha (alpha = 0 is the regular case).
/// Throws Error("alpha-singular") when a denominator vanishes.
SFraction s_atoms(const PFraction& pf, const Rational& alpha);

/// P+_k, Q+_k for k = -1 .. K, stored at position k + 1.
struct StieltjesPolys {
  std::vector<Polynomial> P;
  std::vector<Polynomial> Q;

  const Polynomial& p(int k) const { return P[static_cast<std::size_t>(k + 1)]; }
  const Polynomial& q(int k) const { return Q[static_cast<std::size_t>(k + 1)]; }
  int max_index() const { return static_cast<int>(P.size()) - 2; }
  friend bool operator==(const StieltjesPolys&, const StieltjesPolys&) = default;
};

/// Two-term coupled recurrence driven by (m_j, l_j). K = 2N, or 2N-1 when
/// the last l is absent.
StieltjesPolys stieltjes_polynomials_recurrence(const SFraction& sf);

/// Closed form through P_{n_i}, Q_{n_i} evaluated at alpha. Same index range.
/// Throws Error("alpha-singular").
StieltjesPolys stieltjes_polynomials_determinant(const PFraction& pf, const Rational& alpha);

/// odd:  (Q+_{2N-1} tau + Q+_{2N-2}) / (P+_{2N-1} tau + P+_{2N-2}), 1/tau = o(z)
/// even: (Q+_{2N-1} tau + Q+_{2N})   / (P+_{2N-1} tau + P+_{2N}),   tau = o(1)
/// Throws Error("tau-class"), Error("degenerate"), Error("open-atom").
RationalFunction sfraction_solution(const SFraction& sf, Parity parity, const TailParameter& tau);

struct IndeterminacyBreakdown {
  std::size_t depth = 0;  // atoms actually summed
  Rational m_sum;
  Rational l_sum;
};

struct IndeterminacyReport {
  Rational m_sum;
  Rational l_sum;
  std::vector<IndeterminacyBreakdown> per_sequence;
};

/// Finite partial sums of m_j evaluated at the shift point and of l_j, over
/// the first `depth` atoms of each fraction. No convergence verdict.
IndeterminacyReport indeterminacy_partial_sums(const std::vector<SFraction>& fractions, std::size_t depth);

}  // namespace stieltjes
