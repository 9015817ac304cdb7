#include "stieltjes/pfraction.hpp"

#include <string>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

Rational sign_power(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// Monic degree-nu polynomial from the bordered Hankel determinant
//   | t_0      ...  t_nu      |
//   | ...                     |
//   | t_{nu-1} ...  t_{2nu-1} |
//   | 1   z   ...   z^nu      |  divided by D_nu.
Polynomial bordered_hankel_polynomial(const MomentSequence& t, std::size_t nu) {
  const Rational d_nu = hankel_determinant(t, nu);
  std::vector<Rational> coeffs(nu + 1);
  for (std::size_t k = 0; k <= nu; ++k) {
    Matrix minor(nu, std::vector<Rational>(nu));
    for (std::size_t i = 0; i < nu; ++i) {
      std::size_t col = 0;
      for (std::size_t c = 0; c <= nu; ++c) {
        if (c == k) continue;
        minor[i][col++] = t[i + c];
      }
    }
    coeffs[k] = sign_power(nu + k) * determinant(std::move(minor)) / d_nu;
  }
  return Polynomial(std::move(coeffs));
}

// s_next[i] = (-1)^{i+nu} / s_{nu-1}^{i+nu+1} * det T, with T the
// (nu+i+1)-square lower Hessenberg Toeplitz matrix T[r][c] = s_{nu+r-c}
// for c <= r+1 and zero above the superdiagonal.
MomentSequence schur_transform(const MomentSequence& s, std::size_t nu) {
  const std::size_t len = s.size() - 2 * nu;
  const Rational& pivot = s[nu - 1];
  MomentSequence next(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t m = nu + i + 1;
    Matrix t(m, std::vector<Rational>(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c <= std::min(r + 1, m - 1); ++c) t[r][c] = s[nu + r - c];
    next[i] = sign_power(i + nu) * determinant(std::move(t)) / pivot.pow(static_cast<unsigned>(i + nu + 1));
  }
  return next;
}

}  // namespace

SchurStep schur_step(const MomentSequence& s) {
  std::size_t p = 0;
  while (p < s.size() && s[p].is_zero()) ++p;
  if (p == s.size()) throw Error("no-normal-index", "all Hankel determinants vanish");
  const std::size_t nu = p + 1;
  if (2 * nu - 1 > s.size())
    throw Error("no-normal-index", "first normal index " + std::to_string(nu) + " would need " +
                                       std::to_string(2 * nu - 1) + " moments");
  SchurStep step;
  step.nu = nu;
  step.b = s[nu - 1];
  step.open = s.size() == 2 * nu - 1;
  if (step.open) {
    MomentSequence padded = s;
    padded.emplace_back(0);
    auto c = bordered_hankel_polynomial(padded, nu).coefficients();
    c[0] = Rational(0);
    step.a = Polynomial(std::move(c));
  } else {
    step.a = bordered_hankel_polynomial(s, nu);
    step.next = schur_transform(s, nu);
  }
  return step;
}

std::size_t PFraction::covered_length() const {
  if (atoms.empty()) return 0;
  return 2 * indices.last() - (open_last_atom ? 1 : 0);
}

PFraction pfraction_expand(const MomentSequence& s) {
  PFraction pf;
  pf.source_length = s.size();
  MomentSequence current = s;
  std::size_t n = 0;
  while (!current.empty()) {
    SchurStep step;
    try {
      step = schur_step(current);
    } catch (const Error& e) {
      if (e.code() != "no-normal-index") throw;
      pf.truncated = true;
      break;
    }
    if (step.b.is_zero()) throw Error("degenerate", "Schur step produced b = 0");
    n += step.nu;
    pf.indices.indices.push_back(n);
    pf.atoms.push_back({std::move(step.a), std::move(step.b)});
    if (step.open) {
      pf.open_last_atom = true;
      break;
    }
    current = std::move(step.next);
  }
  return pf;
}

PQPolynomials pq_polynomials(const PFraction& pf) {
  PQPolynomials out;
  Polynomial p_prev, p_cur = Polynomial::constant(1);
  Polynomial q_prev = Polynomial::constant(-1), q_cur;
  out.P.push_back(p_cur);
  out.Q.push_back(q_cur);
  for (const auto& atom : pf.atoms) {
    Polynomial p_next = atom.a * p_cur - atom.b * p_prev;
    Polynomial q_next = atom.a * q_cur - atom.b * q_prev;
    p_prev = std::exchange(p_cur, std::move(p_next));
    q_prev = std::exchange(q_cur, std::move(q_next));
    out.P.push_back(p_cur);
    out.Q.push_back(q_cur);
  }
  return out;
}

bool TailParameter::is_o1() const {
  switch (kind_) {
    case Kind::zero: return true;
    case Kind::infinite: return false;
    case Kind::rational: return value_->is_proper();
  }
  return false;
}

bool TailParameter::is_inv_o_z() const {
  switch (kind_) {
    case Kind::zero: return false;
    case Kind::infinite: return true;
    case Kind::rational:
      return !value_->numer().is_zero() && value_->denom().degree() <= value_->numer().degree();
  }
  return false;
}

RationalFunction pfraction_solution(const PFraction& pf, const TailParameter& tau) {
  if (pf.open_last_atom)
    throw Error("open-atom", "P-fraction solutions need even-length data (last atom is open)");
  if (!tau.is_o1()) throw Error("tau-class", "P-fraction tail must satisfy tau = o(1)");
  const auto pq = pq_polynomials(pf);
  const std::size_t n = pq.P.size() - 1;
  const Polynomial p_last = n == 0 ? Polynomial() : pq.P[n - 1];
  const Polynomial q_last = n == 0 ? Polynomial::constant(-1) : pq.Q[n - 1];
  Polynomial numer, denom;
  if (tau.kind() == TailParameter::Kind::zero) {
    numer = -pq.Q[n];
    denom = pq.P[n];
  } else {
    const auto& t = tau.value();
    numer = -(q_last * t.numer() + pq.Q[n] * t.denom());
    denom = p_last * t.numer() + pq.P[n] * t.denom();
  }
  if (denom.is_zero()) throw Error("degenerate", "solution denominator is the zero polynomial");
  return {std::move(numer), std::move(denom)};
}

VerificationReport verify_expansion(const RationalFunction& f, const MomentSequence& s, std::size_t order) {
  if (order > s.size())
    throw Error("insufficient-moments", "verification order " + std::to_string(order) + " exceeds " +
                                            std::to_string(s.size()) + " moments");
  const InvZSeries series = series_of_rational(f, order);
  VerificationReport r;
  r.requested = order;
  for (std::size_t k = 0; k < order; ++k) {
    const Rational expected = -s[k];
    if (series[k] != expected) {
      r.first_mismatch = Mismatch{k, expected, series[k]};
      break;
    }
    ++r.matched_through;
  }
  r.ok = r.matched_through == order;
  return r;
}

}  // namespace stieltjes
