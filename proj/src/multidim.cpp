#include "stieltjes/multidim.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "stieltjes/error.hpp"

namespace stieltjes {

std::string to_string(const MultiIndex& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

MultiMomentSequence::MultiMomentSequence(std::size_t dim, std::size_t ell) : dim_(dim), ell_(ell) {
  if (dim == 0) throw Error("schema", "tensor dimension must be at least 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) n *= ell + 1;
  values_.resize(n);
}

std::size_t MultiMomentSequence::offset(const MultiIndex& idx) const {
  if (idx.size() != dim_) throw Error("schema", "index " + to_string(idx) + " has wrong dimension");
  std::size_t off = 0;
  for (std::size_t i : idx) {
    if (i > ell_) throw Error("schema", "index " + to_string(idx) + " exceeds ell = " + std::to_string(ell_));
    off = off * (ell_ + 1) + i;
  }
  return off;
}

MultiIndex MultiMomentSequence::index_of(std::size_t k) const {
  MultiIndex idx(dim_);
  for (std::size_t i = dim_; i-- > 0;) {
    idx[i] = k % (ell_ + 1);
    k /= ell_ + 1;
  }
  return idx;
}

void AtomicMeasure::validate() const {
  if (dim == 0) throw Error("schema", "measure dimension must be at least 1");
  std::set<std::vector<Rational>> seen;
  for (const auto& a : atoms) {
    if (a.point.size() != dim) throw Error("schema", "atom point has wrong dimension");
    if (a.mass.sign() <= 0) throw Error("schema", "atom masses must be positive");
    if (!seen.insert(a.point).second) throw Error("schema", "atom points must be distinct");
  }
}

namespace {

mpz_class factorial(std::size_t k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace

Rational multinomial(std::size_t k, const std::vector<std::size_t>& parts) {
  if (std::accumulate(parts.begin(), parts.end(), std::size_t{0}) != k)
    throw Error("parts-sum", "multinomial parts do not sum to " + std::to_string(k));
  mpz_class den = 1;
  for (std::size_t p : parts) den *= factorial(p);
  return Rational(mpq_class(factorial(k), den));
}

std::map<MultiIndex, MomentSequence> associated_sequences(const MultiMomentSequence& s) {
  std::map<MultiIndex, MomentSequence> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const MultiIndex full = s.index_of(k);
    MultiIndex key(full.begin() + 1, full.end());
    auto& seq = out[key];
    if (seq.empty()) seq.resize(s.ell() + 1);
    const std::size_t total = std::accumulate(full.begin(), full.end(), std::size_t{0});
    seq[full[0]] = multinomial(total, full) * s.values()[k];
  }
  return out;
}

MultiMomentSequence moments_from_atoms(const AtomicMeasure& mu, std::size_t ell) {
  mu.validate();
  MultiMomentSequence s(mu.dim, ell);
  for (const auto& atom : mu.atoms) {
    // powers[i][e] = x_i^e
    std::vector<std::vector<Rational>> powers(mu.dim, std::vector<Rational>(ell + 1));
    for (std::size_t i = 0; i < mu.dim; ++i) {
      powers[i][0] = Rational(1);
      for (std::size_t e = 1; e <= ell; ++e) powers[i][e] = powers[i][e - 1] * atom.point[i];
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
      const MultiIndex idx = s.index_of(k);
      Rational term = atom.mass;
      for (std::size_t i = 0; i < mu.dim; ++i) term *= powers[i][idx[i]];
      s.at(idx) += term;
    }
  }
  return s;
}

std::size_t data_length(Parity parity, std::size_t common_index) {
  return parity == Parity::even ? 2 * common_index : 2 * common_index - 1;
}

std::optional<std::size_t> common_normal_index(const std::map<MultiIndex, MomentSequence>& sequences,
                                               std::size_t ell, Parity parity) {
  std::size_t n = 1;
  while (data_length(parity, n + 1) <= ell + 1) ++n;
  if (data_length(parity, n) > ell + 1) return std::nullopt;
  for (; n >= 1; --n) {
    const bool shared = std::all_of(sequences.begin(), sequences.end(), [n](const auto& kv) {
      return !hankel_determinant(kv.second, n).is_zero();
    });
    if (shared) return n;
  }
  return std::nullopt;
}

namespace {

std::vector<Polynomial> constrained_polynomials(const PFraction& pf) {
  // P_{n_1}..P_{n_N}; the last one is undetermined for odd data.
  auto pq = pq_polynomials(pf);
  std::vector<Polynomial> polys(pq.P.begin() + 1, pq.P.end());
  if (pf.open_last_atom) polys.pop_back();
  return polys;
}

Branch solve_branch(const MultiIndex& key, MomentSequence seq, std::size_t common, const SolveOptions& opt) {
  PFraction pf = pfraction_expand(seq);
  if (pf.empty() || pf.indices.last() != common || pf.truncated)
    throw Error("no-common-normal-index",
                "expansion of branch " + to_string(key) + " does not reach n = " + std::to_string(common));
  const TailParameter tau = opt.tau_policy
                                ? opt.tau_policy(key)
                                : (opt.parity == Parity::even ? TailParameter::zero() : TailParameter::infinite());
  const std::size_t order = seq.size();
  switch (opt.strategy) {
    case Strategy::pfraction: {
      if (opt.parity != Parity::even)
        throw Error("parity-unsupported", "P-fraction solutions are defined for even data only");
      RationalFunction f = pfraction_solution(pf, tau);
      return Branch{key, std::move(seq), std::move(pf), tau, std::move(f), order};
    }
    case Strategy::sfraction_regular: {
      NormalIndices checked = pf.indices;
      if (pf.open_last_atom) checked.indices.pop_back();
      auto reg = is_regular(seq, checked);
      if (!reg)
        throw Error("not-regular", "branch " + to_string(key) + " is not regular (D+_" +
                                       std::to_string(*reg.witness) + " = 0)");
      SFraction sf = s_atoms(pf, Rational(0));
      RationalFunction f = sfraction_solution(sf, opt.parity, tau);
      return Branch{key, std::move(seq), std::move(sf), tau, std::move(f), order};
    }
    case Strategy::sfraction_alpha: {
      const Rational alpha = opt.alpha ? *opt.alpha : find_alpha(constrained_polynomials(pf));
      SFraction sf = s_atoms(pf, alpha);
      RationalFunction f = sfraction_solution(sf, opt.parity, tau);
      return Branch{key, std::move(seq), std::move(sf), tau, std::move(f), order};
    }
  }
  throw Error("schema", "unknown strategy");
}

}  // namespace

MultiSolution solve_mp(const MultiMomentSequence& s, const SolveOptions& options) {
  auto sequences = associated_sequences(s);
  if (options.branch_bound) {
    const std::size_t bound = *options.branch_bound;
    std::erase_if(sequences, [bound](const auto& kv) {
      return std::any_of(kv.first.begin(), kv.first.end(), [bound](std::size_t j) { return j > bound; });
    });
  }
  std::size_t common = 0;
  if (options.common_index) {
    common = *options.common_index;
    if (common == 0 || data_length(options.parity, common) > s.ell() + 1)
      throw Error("no-common-normal-index", "pinned index " + std::to_string(common) + " exceeds the data");
    for (const auto& [key, seq] : sequences)
      if (hankel_determinant(seq, common).is_zero())
        throw Error("no-common-normal-index",
                    std::to_string(common) + " is not a normal index of branch " + to_string(key));
  } else {
    auto found = common_normal_index(sequences, s.ell(), options.parity);
    if (!found) throw Error("no-common-normal-index", "the associated sequences share no normal index");
    common = *found;
  }

  MultiSolution sol;
  sol.dim = s.dim();
  sol.ell = s.ell();
  sol.strategy = options.strategy;
  sol.parity = options.parity;
  sol.common_index = common;
  const std::size_t len = data_length(options.parity, common);
  for (auto& [key, seq] : sequences) {
    MomentSequence head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(len));
    try {
      sol.branches.push_back(solve_branch(key, std::move(head), common, options));
    } catch (const Error& e) {
      if (s.dim() == 1) throw;
      const std::string what = e.what();
      if (what.find("branch") != std::string::npos) throw;
      throw Error(e.code(), "branch " + to_string(key) + ": " + what);
    }
  }
  return sol;
}

MultiVerificationReport verify_branches(const std::vector<BranchCheck>& checks, const MultiMomentSequence& s) {
  const auto sequences = associated_sequences(s);
  MultiVerificationReport out;
  out.ok = true;
  for (const auto& c : checks) {
    auto it = sequences.find(c.index);
    if (it == sequences.end()) throw Error("schema", "branch " + to_string(c.index) + " is not in the tensor");
    BranchVerification bv{c.index, verify_expansion(c.solution, it->second, c.order)};
    out.ok = out.ok && bv.report.ok;
    out.branches.push_back(std::move(bv));
  }
  return out;
}

MultiVerificationReport verify_multidim(const MultiSolution& sol, const MultiMomentSequence& s) {
  std::vector<BranchCheck> checks;
  checks.reserve(sol.branches.size());
  for (const auto& b : sol.branches) checks.push_back({b.index, b.solution, b.order});
  return verify_branches(checks, s);
}

Rational direct_transform(const AtomicMeasure& mu, const std::vector<Rational>& point) {
  if (point.size() != mu.dim) throw Error("schema", "point has wrong dimension");
  for (const auto& z : point)
    if (z.is_zero()) throw Error("pole", "coordinate z_i = 0");
  Rational total;
  for (const auto& atom : mu.atoms) {
    Rational denom(1);
    for (std::size_t i = 0; i < mu.dim; ++i) denom -= atom.point[i] / point[i];
    if (denom.is_zero()) throw Error("pole", "an atom makes 1 - sum x_i/z_i vanish");
    total += atom.mass / denom;
  }
  return total;
}

Rational associated_F(const AtomicMeasure& mu, const std::vector<Rational>& point) {
  const Rational t = direct_transform(mu, point);
  Rational prod(1);
  for (const auto& z : point) prod *= z;
  return -t / prod;
}

Rational branch_prefix(const MultiIndex& index, const std::vector<Rational>& point) {
  Rational prefix(1);
  for (std::size_t i = 0; i < index.size(); ++i) {
    const Rational& z = point[i + 1];
    if (z.is_zero()) throw Error("pole", "coordinate z_" + std::to_string(i + 2) + " = 0");
    prefix /= z.pow(static_cast<unsigned>(index[i] + 1));
  }
  return prefix;
}

Rational evaluate_solution(const MultiSolution& sol, const std::vector<Rational>& point) {
  if (point.size() != sol.dim) throw Error("schema", "point has wrong dimension");
  Rational total;
  for (const auto& b : sol.branches) total += branch_prefix(b.index, point) * b.solution.eval(point[0]);
  return total;
}

}  // namespace stieltjes
