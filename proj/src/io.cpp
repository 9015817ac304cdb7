#include "stieltjes/io.hpp"

#include <set>
#include <sstream>

#include "stieltjes/error.hpp"

namespace stieltjes::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error("schema", what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<Rational> rationals_from_json(const Json& j, const char* what) {
  if (!j.is_array()) schema(std::string(what) + " must be an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Json index_to_json(const MultiIndex& idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i);
  return a;
}

MultiIndex index_from_json(const Json& j) {
  if (!j.is_array()) schema("index must be an array");
  MultiIndex idx;
  for (const auto& e : j) idx.push_back(count_from_json(e, "index entry"));
  return idx;
}

std::string prefix_string(const MultiIndex& index) {
  if (index.empty()) return "1";
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < index.size(); ++i) {
    std::string f = "z" + std::to_string(i + 2);
    if (index[i] + 1 > 1) f += "^" + std::to_string(index[i] + 1);
    factors.push_back(f);
  }
  if (factors.size() == 1) return "1/" + factors[0];
  std::string joined;
  for (std::size_t i = 0; i < factors.size(); ++i) joined += (i ? "*" : "") + factors[i];
  return "1/(" + joined + ")";
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.to_string());
  return a;
}

Json to_json(const RationalFunction& f) { return Json{{"numer", to_json(f.numer())}, {"denom", to_json(f.denom())}}; }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema("rationals must be strings \"p/q\" or integers");
}

Polynomial polynomial_from_json(const Json& j) { return Polynomial(rationals_from_json(j, "polynomial")); }

RationalFunction rational_function_from_json(const Json& j) {
  return {polynomial_from_json(field(j, "numer")), polynomial_from_json(field(j, "denom"))};
}

MomentSequence moments_from_json(const Json& j) {
  MomentSequence s = rationals_from_json(field(j, "moments"), "moments");
  if (s.empty()) schema("moment sequence must be nonempty");
  return s;
}

Json moments_to_json(const MomentSequence& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(x.to_string());
  return Json{{"moments", a}};
}

MultiMomentSequence tensor_from_json(const Json& j) {
  const std::size_t dim = count_from_json(field(j, "dim"), "dim");
  const std::size_t ell = count_from_json(field(j, "ell"), "ell");
  if (dim == 0) schema("dim must be at least 1");
  MultiMomentSequence s(dim, ell);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) schema("entries must be an array");
  std::set<MultiIndex> seen;
  for (const auto& e : entries) {
    MultiIndex idx = index_from_json(field(e, "index"));
    if (idx.size() != dim) schema("entry index " + stieltjes::to_string(idx) + " has wrong dimension");
    for (auto i : idx)
      if (i > ell) schema("entry index " + stieltjes::to_string(idx) + " exceeds ell");
    if (!seen.insert(idx).second) throw Error("schema", "duplicate tensor entry " + stieltjes::to_string(idx));
    s.at(idx) = rational_from_json(field(e, "value"));
  }
  if (seen.size() != s.size())
    throw Error("schema", "tensor has " + std::to_string(seen.size()) + " of " + std::to_string(s.size()) +
                                     " entries");
  return s;
}

Json tensor_to_json(const MultiMomentSequence& s) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < s.size(); ++k)
    entries.push_back(Json{{"index", index_to_json(s.index_of(k))}, {"value", s.values()[k].to_string()}});
  return Json{{"dim", s.dim()}, {"ell", s.ell()}, {"entries", entries}};
}

AtomicMeasure measure_from_json(const Json& j) {
  AtomicMeasure mu;
  mu.dim = count_from_json(field(j, "dim"), "dim");
  const Json& atoms = field(j, "atoms");
  if (!atoms.is_array()) schema("atoms must be an array");
  for (const auto& a : atoms)
    mu.atoms.push_back({rationals_from_json(field(a, "point"), "point"), rational_from_json(field(a, "mass"))});
  mu.validate();
  return mu;
}

Json measure_to_json(const AtomicMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms) {
    Json p = Json::array();
    for (const auto& x : a.point) p.push_back(x.to_string());
    atoms.push_back(Json{{"point", p}, {"mass", a.mass.to_string()}});
  }
  return Json{{"dim", mu.dim}, {"atoms", atoms}};
}

TailParameter parse_tail(const std::string& text) {
  if (text == "zero") return TailParameter::zero();
  if (text == "inf") return TailParameter::infinite();
  const std::string tag = "rational:";
  if (text.rfind(tag, 0) != 0) throw Error("usage", "--tau must be zero, inf or rational:[numer]/[denom]");
  const std::string body = text.substr(tag.size());
  const auto split = body.find("]/[");
  if (body.empty() || body.front() != '[' || body.back() != ']' || split == std::string::npos)
    throw Error("usage", "rational tail must look like rational:[1]/[0,1]");
  auto parse_list = [](const std::string& list) {
    std::vector<Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    return Polynomial(std::move(out));
  };
  return TailParameter::rational(
      {parse_list(body.substr(1, split - 1)), parse_list(body.substr(split + 3, body.size() - split - 4))});
}

Json to_json(const TailParameter& tau) {
  switch (tau.kind()) {
    case TailParameter::Kind::zero: return "zero";
    case TailParameter::Kind::infinite: return "inf";
    case TailParameter::Kind::rational: return to_json(tau.value());
  }
  return nullptr;
}

TailParameter tail_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "zero") return TailParameter::zero();
    if (j == "inf") return TailParameter::infinite();
    schema("unknown tail designator");
  }
  return TailParameter::rational(rational_function_from_json(j));
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::pfraction: return "pfraction";
    case Strategy::sfraction_regular: return "sfraction";
    case Strategy::sfraction_alpha: return "sfraction-alpha";
  }
  return "";
}

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Json to_json(const NormalIndices& idx) {
  Json a = Json::array();
  for (auto n : idx.indices) a.push_back(n);
  return a;
}

Json to_json(const PFraction& pf) {
  Json atoms = Json::array();
  for (const auto& at : pf.atoms) atoms.push_back(Json{{"a", to_json(at.a)}, {"b", to_json(at.b)}});
  return Json{{"atoms", atoms},
              {"indices", to_json(pf.indices)},
              {"source_length", pf.source_length},
              {"truncated", pf.truncated},
              {"open_last_atom", pf.open_last_atom}};
}

Json to_json(const PQPolynomials& pq) {
  Json p = Json::array(), q = Json::array();
  for (const auto& x : pq.P) p.push_back(to_json(x));
  for (const auto& x : pq.Q) q.push_back(to_json(x));
  return Json{{"P", p}, {"Q", q}};
}

Json to_json(const SFraction& sf) {
  Json atoms = Json::array();
  for (const auto& at : sf.atoms)
    atoms.push_back(Json{{"m", to_json(at.m)}, {"l", at.l ? to_json(*at.l) : Json(nullptr)}, {"d", to_json(at.d)}});
  return Json{{"alpha", to_json(sf.alpha)}, {"atoms", atoms}};
}

Json to_json(const StieltjesPolys& sp) {
  Json rows = Json::array();
  for (int k = -1; k <= sp.max_index(); ++k)
    rows.push_back(Json{{"k", k}, {"P+", to_json(sp.p(k))}, {"Q+", to_json(sp.q(k))}});
  return rows;
}

Json to_json(const VerificationReport& r) {
  Json j{{"ok", r.ok}, {"order", r.requested}, {"matched_through", r.matched_through}};
  if (r.first_mismatch)
    j["first_mismatch"] = Json{{"index", r.first_mismatch->index},
                               {"expected", to_json(r.first_mismatch->expected)},
                               {"got", to_json(r.first_mismatch->got)}};
  return j;
}

Json to_json(const MultiVerificationReport& r) {
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json j{{"index", index_to_json(b.index)}};
    const Json report = to_json(b.report);
    for (auto& [k, v] : report.items()) j[k] = v;
    branches.push_back(j);
  }
  return Json{{"ok", r.ok}, {"branches", branches}};
}

Json to_json(const IndeterminacyReport& r) {
  Json per = Json::array();
  for (const auto& b : r.per_sequence)
    per.push_back(Json{{"depth", b.depth}, {"m_sum", to_json(b.m_sum)}, {"l_sum", to_json(b.l_sum)}});
  return Json{{"m_sum", to_json(r.m_sum)}, {"l_sum", to_json(r.l_sum)}, {"per_sequence", per}};
}

Json assemble_report(const MultiSolution& sol, const MultiMomentSequence* problem) {
  Json branches = Json::array();
  for (const auto& b : sol.branches) {
    Json j{{"index", index_to_json(b.index)}, {"prefix", prefix_string(b.index)}};
    Json exps = Json::array();
    for (auto e : b.index) exps.push_back(e + 1);
    j["prefix_exponents"] = exps;
    Json seq = Json::array();
    for (const auto& x : b.sequence) seq.push_back(to_json(x));
    j["sequence"] = seq;
    j["order"] = b.order;
    if (const auto* pf = std::get_if<PFraction>(&b.fraction)) {
      j["normal_indices"] = to_json(pf->indices);
      j["pfraction"] = to_json(*pf);
      const auto pq = pq_polynomials(*pf);
      const std::size_t n = pq.P.size() - 1;
      j["pair"] = Json{{"indices", Json::array({n - 1, n})},
                       {"P", Json::array({to_json(pq.P[n - 1]), to_json(pq.P[n])})},
                       {"Q", Json::array({to_json(pq.Q[n - 1]), to_json(pq.Q[n])})}};
    } else {
      const auto& sf = std::get<SFraction>(b.fraction);
      j["normal_indices"] = to_json(sf.source.indices);
      j["sfraction"] = to_json(sf);
      const auto sp = stieltjes_polynomials_recurrence(sf);
      const int n = static_cast<int>(sf.size());
      const int lead = 2 * n - 1;
      const int base = sol.parity == Parity::odd ? 2 * n - 2 : 2 * n;
      j["pair"] = Json{{"indices", Json::array({lead, base})},
                       {"P+", Json::array({to_json(sp.p(lead)), to_json(sp.p(base))})},
                       {"Q+", Json::array({to_json(sp.q(lead)), to_json(sp.q(base))})}};
    }
    j["tau"] = to_json(b.tau);
    j["solution"] = to_json(b.solution);
    branches.push_back(std::move(j));
  }
  Json out{{"dim", sol.dim},
           {"ell", sol.ell},
           {"strategy", to_string(sol.strategy)},
           {"parity", to_string(sol.parity)},
           {"common_index", sol.common_index},
           {"sign", "+"},
           {"branches", branches}};
  if (problem) out["problem"] = tensor_to_json(*problem);
  return out;
}

ParsedReport parse_report(const Json& j) {
  ParsedReport r;
  r.dim = count_from_json(field(j, "dim"), "dim");
  r.ell = count_from_json(field(j, "ell"), "ell");
  const Json& branches = field(j, "branches");
  if (!branches.is_array()) schema("branches must be an array");
  for (const auto& b : branches) {
    MultiIndex idx = index_from_json(field(b, "index"));
    if (idx.size() + 1 != r.dim) schema("branch index " + stieltjes::to_string(idx) + " has wrong dimension");
    r.branches.push_back({std::move(idx), rational_function_from_json(field(b, "solution")),
                          count_from_json(field(b, "order"), "order")});
  }
  if (j.contains("problem")) r.problem = tensor_from_json(j.at("problem"));
  return r;
}

Rational evaluate_report(const ParsedReport& report, const std::vector<Rational>& point) {
  if (point.size() != report.dim) throw Error("schema", "point has wrong dimension");
  Rational total;
  for (const auto& b : report.branches) total += branch_prefix(b.index, point) * b.solution.eval(point[0]);
  return total;
}

namespace {

std::string paren(const Polynomial& p) {
  std::string s = p.to_string();
  return s.find_first_of(" ") == std::string::npos ? s : "(" + s + ")";
}

std::string tail_text(const TailParameter& tau) {
  switch (tau.kind()) {
    case TailParameter::Kind::zero: return "0";
    case TailParameter::Kind::infinite: return "inf";
    case TailParameter::Kind::rational:
      return paren(tau.value().numer()) + "/" + paren(tau.value().denom());
  }
  return "";
}

}  // namespace

std::string render(const PFraction& pf, const TailParameter& tau) {
  if (pf.empty()) return tail_text(tau);
  std::string out;
  for (std::size_t i = 0; i < pf.size(); ++i) {
    const auto& at = pf.atoms[i];
    out += (i == 0 ? "-" : " - ") + at.b.to_string() + "/(" + at.a.to_string();
  }
  if (tau.kind() != TailParameter::Kind::zero) out += " + " + tail_text(tau);
  out += std::string(pf.size(), ')');
  return out;
}

std::string render(const SFraction& sf, Parity parity, const TailParameter& tau) {
  const std::string shift = sf.alpha.is_zero() ? "z" : "(" + Polynomial::linear_root(sf.alpha).to_string() + ")";
  std::string out;
  std::size_t open = 0;
  for (std::size_t j = 0; j < sf.size(); ++j) {
    const auto& at = sf.atoms[j];
    out += "1/(-" + shift + "*" + paren(at.m);
    ++open;
    const bool last = j + 1 == sf.size();
    if (last && parity == Parity::odd) {
      if (tau.kind() != TailParameter::Kind::infinite) out += " + 1/(" + tail_text(tau) + ")";
      break;
    }
    out += " + 1/(" + (at.l ? at.l->to_string() : std::string("?"));
    ++open;
    if (last && tau.kind() != TailParameter::Kind::zero) out += " + " + tail_text(tau);
    if (!last) out += " + ";
  }
  out += std::string(open, ')');
  return out;
}

std::string render(const MultiSolution& sol) {
  std::ostringstream os;
  os << "F(z1..z" << sol.dim << ") = sum over " << sol.branches.size() << " branch(es), strategy "
     << to_string(sol.strategy) << ", parity " << to_string(sol.parity) << ", common index " << sol.common_index
     << "\n";
  for (const auto& b : sol.branches) {
    os << "  " << prefix_string(b.index) << " * ";
    if (const auto* pf = std::get_if<PFraction>(&b.fraction))
      os << render(*pf, b.tau);
    else
      os << render(std::get<SFraction>(b.fraction), sol.parity, b.tau);
    os << "\n      = (" << b.solution.numer().to_string("z1") << ") / (" << b.solution.denom().to_string("z1")
       << ")\n";
  }
  return os.str();
}

}  // namespace stieltjes::io
