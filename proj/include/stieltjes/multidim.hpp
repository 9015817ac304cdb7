#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stieltjes/pfraction.hpp"
#include "stieltjes/sfraction.hpp"

namespace stieltjes {

/// Exponents (i_1, ..., i_n); branch keys use the trailing n-1 entries.
using MultiIndex = std::vector<std::size_t>;

std::string to_string(const MultiIndex& idx);

/// Moment tensor s_{i_1..i_n} with every component in 0..ell.
class MultiMomentSequence {
public:
  MultiMomentSequence(std::size_t dim, std::size_t ell);

  std::size_t dim() const { return dim_; }
  std::size_t ell() const { return ell_; }
  std::size_t size() const { return values_.size(); }

  const Rational& at(const MultiIndex& idx) const { return values_[offset(idx)]; }
  Rational& at(const MultiIndex& idx) { return values_[offset(idx)]; }

  /// Multi-index of the k-th entry in lexicographic order.
  MultiIndex index_of(std::size_t k) const;
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const MultiMomentSequence&, const MultiMomentSequence&) = default;

private:
  std::size_t offset(const MultiIndex& idx) const;
  std::size_t dim_;
  std::size_t ell_;
  std::vector<Rational> values_;
};

struct WeightedPoint {
  std::vector<Rational> point;
  Rational mass;
};

/// sum_k m_k delta_{x_k}, m_k > 0, points distinct.
struct AtomicMeasure {
  std::size_t dim = 1;
  std::vector<WeightedPoint> atoms;

  /// Throws Error("schema") on a broken invariant.
  void validate() const;
};

/// k! / prod parts!. Throws Error("parts-sum").
Rational multinomial(std::size_t k, const std::vector<std::size_t>& parts);

/// frak_s_{i, j_2..j_n} = multinomial(i + j_2 + ... + j_n; i, j_2, ..., j_n) s_{i, j_2..j_n},
/// keyed by (j_2..j_n) in lexicographic order.
std::map<MultiIndex, MomentSequence> associated_sequences(const MultiMomentSequence& s);

MultiMomentSequence moments_from_atoms(const AtomicMeasure& mu, std::size_t ell);

enum class Strategy { pfraction, sfraction_regular, sfraction_alpha };

struct SolveOptions {
  Strategy strategy = Strategy::pfraction;
  Parity parity = Parity::even;
  /// Per-branch tail; unset means terminating (ZERO for even, INFINITE for odd).
  std::function<TailParameter(const MultiIndex&)> tau_policy;
  /// Pin the common normal index instead of taking the largest one.
  std::optional<std::size_t> common_index;
  /// Fixed shift for sfraction_alpha; unset means find_alpha per branch.
  std::optional<Rational> alpha;
  /// Largest j_i solved; defaults to ell.
  std::optional<std::size_t> branch_bound;
};

struct Branch {
  MultiIndex index;          // (j_2, ..., j_n)
  MomentSequence sequence;   // associated data actually consumed
  std::variant<PFraction, SFraction> fraction;
  TailParameter tau;
  RationalFunction solution; // F_branch(z_1) ~ -frak_s_0/z_1 - frak_s_1/z_1^2 - ...
  std::size_t order;         // moments the solution reproduces
};

/// F(z_1..z_n) = + sum_branches z_2^{-(j_2+1)} ... z_n^{-(j_n+1)} F_branch(z_1).
struct MultiSolution {
  std::size_t dim = 1;
  std::size_t ell = 0;
  Strategy strategy = Strategy::pfraction;
  Parity parity = Parity::even;
  std::size_t common_index = 0;
  std::vector<Branch> branches;  // lexicographic in index
};

/// Data length a parity consumes for common index n: 2n (even) or 2n-1 (odd).
std::size_t data_length(Parity parity, std::size_t common_index);

/// Largest n within the data bound that is a normal index of every sequence.
std::optional<std::size_t> common_normal_index(const std::map<MultiIndex, MomentSequence>& sequences,
                                               std::size_t ell, Parity parity);

/// Throws Error("no-common-normal-index"), Error("not-regular"),
/// Error("parity-unsupported") and propagated 1-D errors.
MultiSolution solve_mp(const MultiMomentSequence& s, const SolveOptions& options = {});

struct BranchCheck {
  MultiIndex index;
  RationalFunction solution;
  std::size_t order;
};

struct BranchVerification {
  MultiIndex index;
  VerificationReport report;
};

struct MultiVerificationReport {
  std::vector<BranchVerification> branches;
  bool ok = false;
};

MultiVerificationReport verify_branches(const std::vector<BranchCheck>& checks, const MultiMomentSequence& s);
MultiVerificationReport verify_multidim(const MultiSolution& sol, const MultiMomentSequence& s);

/// sum_k m_k / (1 - sum_i x_{k,i}/z_i). Throws Error("pole").
Rational direct_transform(const AtomicMeasure& mu, const std::vector<Rational>& point);
/// -(prod z_i)^{-1} * direct_transform. Throws Error("pole").
Rational associated_F(const AtomicMeasure& mu, const std::vector<Rational>& point);

/// Throws Error("pole").
Rational evaluate_solution(const MultiSolution& sol, const std::vector<Rational>& point);

/// Monomial prefix value prod_{i>=2} z_i^{-(j_i+1)}; throws Error("pole") for z_i = 0.
Rational branch_prefix(const MultiIndex& index, const std::vector<Rational>& point);

}  // namespace stieltjes
