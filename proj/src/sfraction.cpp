#include "stieltjes/sfraction.hpp"

#include <algorithm>
#include <string>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

[[noreturn]] void singular(const Rational& alpha, std::size_t j) {
  throw Error("alpha-singular", "sequence is not " + alpha.to_string() + "-regular (atom " + std::to_string(j) + ")");
}

}  // namespace

SFraction s_atoms(const PFraction& pf, const Rational& alpha) {
  if (pf.empty()) throw Error("no-normal-index", "S-fraction of an empty P-fraction");
  SFraction sf;
  sf.alpha = alpha;
  sf.source = pf;
  const Polynomial shift_root = Polynomial::linear_root(alpha);
  const std::size_t n = pf.size();
  Rational d, l;
  for (std::size_t j = 1; j <= n; ++j) {
    const auto& [a, b] = pf.atoms[j - 1];
    if (j == 1) {
      d = b.inverse();
    } else {
      d = (pf.atoms[j - 1].b * l * l * d).inverse();
    }
    const Rational a_alpha = a.eval(alpha);
    auto [m, rem] = (a - Polynomial::constant(a_alpha)).divmod(shift_root);
    m *= d;
    if (!rem.is_zero() || m.leading() != d) throw Error("degenerate", "m_j does not have leading coefficient d_j");

    const bool last_open = j == n && pf.open_last_atom;
    std::optional<Rational> l_next;
    if (!last_open) {
      const Rational denom = j == 1 ? d * a_alpha : Rational(1) + l * d * a_alpha;
      if (denom.is_zero()) singular(alpha, j);
      l_next = j == 1 ? -denom.inverse() : -l / denom;
      l = *l_next;
    }
    sf.atoms.push_back({std::move(m), l_next, d});
  }
  return sf;
}

StieltjesPolys stieltjes_polynomials_recurrence(const SFraction& sf) {
  StieltjesPolys out;
  out.P = {Polynomial(), Polynomial::constant(1)};
  out.Q = {Polynomial::constant(1), Polynomial()};
  const Polynomial shift_root = Polynomial::linear_root(sf.alpha);
  for (const auto& atom : sf.atoms) {
    // y_{2j+1} = y_{2j-1} - (z - alpha) m_{j+1} y_{2j}
    const Polynomial step = shift_root * atom.m;
    const std::size_t k = out.P.size();
    out.P.push_back(out.P[k - 2] - step * out.P[k - 1]);
    out.Q.push_back(out.Q[k - 2] - step * out.Q[k - 1]);
    if (!atom.l) break;
    // y_{2j} = y_{2j-2} + l_j y_{2j-1}
    out.P.push_back(out.P[k - 1] + *atom.l * out.P[k]);
    out.Q.push_back(out.Q[k - 1] + *atom.l * out.Q[k]);
  }
  return out;
}

StieltjesPolys stieltjes_polynomials_determinant(const PFraction& pf, const Rational& alpha) {
  const auto pq = pq_polynomials(pf);
  const std::size_t n = pf.size();
  StieltjesPolys out;
  out.P = {Polynomial(), Polynomial::constant(1)};
  out.Q = {Polynomial::constant(1), Polynomial()};
  Rational b_product(1);
  for (std::size_t i = 1; i <= n; ++i) {
    b_product *= pf.atoms[i - 1].b;
    const Rational at_i = pq.P[i].eval(alpha);
    const Rational at_prev = pq.P[i - 1].eval(alpha);
    out.P.push_back((-b_product.inverse()) * (pq.P[i] * at_prev - pq.P[i - 1] * at_i));
    out.Q.push_back(b_product.inverse() * (pq.Q[i] * at_prev - pq.Q[i - 1] * at_i));
    if (i == n && pf.open_last_atom) break;
    if (at_i.is_zero()) singular(alpha, i);
    out.P.push_back(pq.P[i] / at_i);
    out.Q.push_back(-pq.Q[i] / at_i);
  }
  return out;
}

RationalFunction sfraction_solution(const SFraction& sf, Parity parity, const TailParameter& tau) {
  if (sf.atoms.empty()) throw Error("no-normal-index", "empty S-fraction");
  const int n = static_cast<int>(sf.size());
  if (parity == Parity::even && !sf.complete())
    throw Error("open-atom", "even S-fraction solution needs the last l (even-length data)");
  if (parity == Parity::odd ? !tau.is_inv_o_z() : !tau.is_o1())
    throw Error("tau-class", parity == Parity::odd ? "odd case needs 1/tau = o(z)" : "even case needs tau = o(1)");
  const auto sp = stieltjes_polynomials_recurrence(sf);
  const int lead = 2 * n - 1;
  const int base = parity == Parity::odd ? 2 * n - 2 : 2 * n;
  Polynomial numer, denom;
  switch (tau.kind()) {
    case TailParameter::Kind::infinite:
      numer = sp.q(lead);
      denom = sp.p(lead);
      break;
    case TailParameter::Kind::zero:
      numer = sp.q(base);
      denom = sp.p(base);
      break;
    case TailParameter::Kind::rational: {
      const auto& t = tau.value();
      numer = sp.q(lead) * t.numer() + sp.q(base) * t.denom();
      denom = sp.p(lead) * t.numer() + sp.p(base) * t.denom();
      break;
    }
  }
  if (denom.is_zero()) throw Error("degenerate", "solution denominator is the zero polynomial");
  return {std::move(numer), std::move(denom)};
}

IndeterminacyReport indeterminacy_partial_sums(const std::vector<SFraction>& fractions, std::size_t depth) {
  IndeterminacyReport report;
  for (const auto& sf : fractions) {
    IndeterminacyBreakdown b;
    b.depth = std::min(depth, sf.size());
    for (std::size_t j = 0; j < b.depth; ++j) {
      // m_j in the shifted frame evaluated at 0 is m_j(alpha) here.
      b.m_sum += sf.atoms[j].m.eval(sf.alpha);
      if (sf.atoms[j].l) b.l_sum += *sf.atoms[j].l;
    }
    report.m_sum += b.m_sum;
    report.l_sum += b.l_sum;
    report.per_sequence.push_back(std::move(b));
  }
  return report;
}

}  // namespace stieltjes
