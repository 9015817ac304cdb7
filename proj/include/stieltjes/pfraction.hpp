#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stieltjes/hankel.hpp"
#include "stieltjes/polynomial.hpp"
#include "stieltjes/rational.hpp"
#include "stieltjes/series.hpp"

namespace stieltjes {

/// One step of the Schur algorithm:  f = -b / (a(z) + f_next).
struct SchurStep {
  Rational b;
  Polynomial a;          // monic, degree nu
  MomentSequence next;   // length ell + 1 - 2 nu
  std::size_t nu = 0;    // first normal index of the input
  /// Input had exactly 2 nu - 1 moments: the constant term of `a` is not
  /// determined by the data and is set to zero.
  bool open = false;
};

/// Throws Error("no-normal-index") when every computable Hankel determinant vanishes.
SchurStep schur_step(const MomentSequence& s);

struct PFractionAtom {
  Polynomial a;
  Rational b;
  friend bool operator==(const PFractionAtom&, const PFractionAtom&) = default;
};

/// f = -b_0 / (a_0 - b_1 / (a_1 - ... - b_{N-1} / (a_{N-1} + tau))).
struct PFraction {
  std::vector<PFractionAtom> atoms;
  NormalIndices indices;        // n_1 < ... < n_N reached by the expansion
  std::size_t source_length = 0;
  /// The normal indices stopped before the data ran out; moments past
  /// 2 n_N are not represented.
  bool truncated = false;
  /// Odd-length data: the last a has an undetermined (zeroed) constant term.
  bool open_last_atom = false;

  std::size_t size() const { return atoms.size(); }
  bool empty() const { return atoms.empty(); }
  /// Number of leading moments the expansion reproduces.
  std::size_t covered_length() const;
};

/// Iterates schur_step once per normal index.
PFraction pfraction_expand(const MomentSequence& s);

/// Polynomials of the first and second kind, j = 0..N.
struct PQPolynomials {
  std::vector<Polynomial> P;
  std::vector<Polynomial> Q;
};

PQPolynomials pq_polynomials(const PFraction& pf);

/// Free parameter of the solution families. ZERO and INFINITE (1/tau == 0)
/// terminate the continued fraction.
class TailParameter {
public:
  enum class Kind { zero, infinite, rational };

  static TailParameter zero() { return TailParameter(Kind::zero, std::nullopt); }
  static TailParameter infinite() { return TailParameter(Kind::infinite, std::nullopt); }
  static TailParameter rational(RationalFunction f) { return TailParameter(Kind::rational, std::move(f)); }

  Kind kind() const { return kind_; }
  const RationalFunction& value() const { return *value_; }

  /// tau = o(1) at infinity.
  bool is_o1() const;
  /// 1/tau = o(z) at infinity.
  bool is_inv_o_z() const;

private:
  TailParameter(Kind k, std::optional<RationalFunction> v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  std::optional<RationalFunction> value_;
};

/// -(Q_{N-1} tau + Q_N) / (P_{N-1} tau + P_N) with tau's denominator cleared.
/// Throws Error("tau-class"), Error("degenerate"), Error("open-atom").
RationalFunction pfraction_solution(const PFraction& pf, const TailParameter& tau);

struct Mismatch {
  std::size_t index;
  Rational expected;
  Rational got;
};

struct VerificationReport {
  std::size_t requested = 0;
  std::size_t matched_through = 0;
  std::optional<Mismatch> first_mismatch;
  bool ok = false;
};

/// Compares the expansion of f with -s_0/z - s_1/z^2 - ... through `order` terms.
VerificationReport verify_expansion(const RationalFunction& f, const MomentSequence& s, std::size_t order);

}  // namespace stieltjes
