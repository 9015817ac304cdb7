#include "stieltjes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stieltjes/error.hpp"
#include "stieltjes/io.hpp"

namespace stieltjes::cli {

namespace {

using io::Json;

struct Flags {
  std::string input = "-";
  std::string output = "-";
  std::string strategy = "pfraction";
  std::optional<std::string> parity;
  std::optional<std::string> tau;
  std::string alpha = "auto";
  std::optional<std::size_t> order;
  std::optional<std::string> point;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> depth;
  std::optional<std::string> moments;
  std::optional<std::size_t> common_index;
  bool pretty = false;
};

Json read_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("parse", std::string("invalid JSON: ") + e.what());
  }
}

Json load(const std::string& path, std::istream& in) {
  if (path == "-") return read_json(in);
  std::ifstream file(path);
  if (!file) throw Error("io", "cannot open " + path);
  return read_json(file);
}

// Accepts a tensor document or a 1-D {"moments": [...]} document.
MultiMomentSequence problem_from_json(const Json& j) {
  if (j.is_object() && j.contains("moments")) {
    const auto s = io::moments_from_json(j);
    MultiMomentSequence t(1, s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k) t.at({k}) = s[k];
    return t;
  }
  return io::tensor_from_json(j);
}

Parity parse_parity(const std::string& text) {
  if (text == "odd") return Parity::odd;
  if (text == "even") return Parity::even;
  throw Error("usage", "--parity must be odd or even");
}

Strategy parse_strategy(const std::string& text) {
  if (text == "pfraction") return Strategy::pfraction;
  if (text == "sfraction") return Strategy::sfraction_regular;
  if (text == "sfraction-alpha") return Strategy::sfraction_alpha;
  throw Error("usage", "--strategy must be pfraction, sfraction or sfraction-alpha");
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> point;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) point.push_back(Rational::parse(item));
  if (point.empty()) throw Error("usage", "--point needs at least one coordinate");
  return point;
}

TailParameter terminating(Parity parity) {
  return parity == Parity::odd ? TailParameter::infinite() : TailParameter::zero();
}

// Applies `fn` to the sequence in a 1-D document, or to every branch of a tensor.
template <typename Fn>
Json per_sequence(const Json& doc, Fn fn) {
  if (doc.is_object() && doc.contains("moments")) return fn(io::moments_from_json(doc));
  Json branches = Json::array();
  for (const auto& [index, seq] : associated_sequences(io::tensor_from_json(doc))) {
    Json b{{"index", index}};
    try {
      const Json part = fn(seq);
      for (auto& [k, v] : part.items()) b[k] = v;
    } catch (const Error& e) {
      throw Error(e.code(), "branch " + to_string(index) + ": " + e.what());
    }
    branches.push_back(std::move(b));
  }
  return Json{{"branches", branches}};
}

std::vector<Polynomial> shift_candidates(const PFraction& pf) {
  const auto pq = pq_polynomials(pf);
  std::size_t last = pf.size() - (pf.open_last_atom ? 1 : 0);
  return {pq.P.begin() + 1, pq.P.begin() + 1 + static_cast<std::ptrdiff_t>(last)};
}

Json cmd_normal_indices(const Json& doc) {
  return per_sequence(doc, [](const MomentSequence& s) { return Json{{"indices", io::to_json(normal_indices(s))}}; });
}

Json cmd_pfraction(const Json& doc, const Flags& f, std::string& text) {
  const TailParameter tau = f.tau ? io::parse_tail(*f.tau) : TailParameter::zero();
  return per_sequence(doc, [&](const MomentSequence& s) {
    const PFraction pf = pfraction_expand(s);
    Json j{{"pfraction", io::to_json(pf)}};
    const Json pq = io::to_json(pq_polynomials(pf));
    for (auto& [k, v] : pq.items()) j[k] = v;
    j["tau"] = io::to_json(tau);
    if (pf.open_last_atom) {
      j["solution"] = nullptr;
    } else {
      const auto sol = pfraction_solution(pf, tau);
      j["solution"] = io::to_json(sol);
      j["verification"] = io::to_json(verify_expansion(sol, s, pf.covered_length()));
    }
    if (f.pretty) text += io::render(pf, tau) + "\n";
    return j;
  });
}

Json cmd_sfraction(const Json& doc, const Flags& f, std::string& text) {
  return per_sequence(doc, [&](const MomentSequence& s) {
    const PFraction pf = pfraction_expand(s);
    if (pf.empty()) throw Error("no-normal-index", "sequence has no normal index");
    const Rational alpha = f.alpha == "auto" ? find_alpha(shift_candidates(pf)) : Rational::parse(f.alpha);
    const SFraction sf = s_atoms(pf, alpha);
    const Parity parity = f.parity ? parse_parity(*f.parity) : (pf.open_last_atom ? Parity::odd : Parity::even);
    const TailParameter tau = f.tau ? io::parse_tail(*f.tau) : terminating(parity);
    const auto sol = sfraction_solution(sf, parity, tau);
    const std::size_t order = data_length(parity, pf.indices.last());
    Json j{{"sfraction", io::to_json(sf)},
           {"stieltjes_polynomials", io::to_json(stieltjes_polynomials_recurrence(sf))},
           {"parity", io::to_string(parity)},
           {"tau", io::to_json(tau)},
           {"solution", io::to_json(sol)},
           {"verification", io::to_json(verify_expansion(sol, s, std::min(order, s.size())))}};
    if (f.pretty) text += io::render(sf, parity, tau) + "\n";
    return j;
  });
}

Json cmd_solve(const Json& doc, const Flags& f, std::string& text) {
  const auto problem = problem_from_json(doc);
  SolveOptions opt;
  opt.strategy = parse_strategy(f.strategy);
  if (f.parity) opt.parity = parse_parity(*f.parity);
  if (f.tau) {
    const TailParameter tau = io::parse_tail(*f.tau);
    opt.tau_policy = [tau](const MultiIndex&) { return tau; };
  }
  if (f.alpha != "auto") opt.alpha = Rational::parse(f.alpha);
  opt.common_index = f.common_index;
  const auto sol = solve_mp(problem, opt);
  if (f.pretty) text = io::render(sol);
  return io::assemble_report(sol, &problem);
}

Json cmd_verify(const Json& doc, const Flags& f, std::istream& in, int& status) {
  auto report = io::parse_report(doc);
  std::optional<MultiMomentSequence> problem;
  if (f.moments)
    problem = problem_from_json(load(*f.moments, in));
  else
    problem = report.problem;
  if (!problem) throw Error("schema", "report carries no problem tensor; pass --moments");
  if (problem->dim() != report.dim) throw Error("schema", "tensor dimension differs from report");
  if (f.order)
    for (auto& b : report.branches) b.order = std::min(b.order, *f.order);
  const auto result = verify_branches(report.branches, *problem);
  status = result.ok ? 0 : 1;
  return io::to_json(result);
}

Json cmd_moments_from_atoms(const Json& doc, const Flags& f) {
  if (!f.ell) throw Error("usage", "--ell is required");
  return io::tensor_to_json(moments_from_atoms(io::measure_from_json(doc), *f.ell));
}

Json cmd_eval(const Json& doc, const Flags& f) {
  if (!f.point) throw Error("usage", "--point is required");
  const auto point = parse_point(*f.point);
  if (doc.is_object() && doc.contains("atoms")) {
    const auto mu = io::measure_from_json(doc);
    if (point.size() != mu.dim) throw Error("schema", "point has wrong dimension");
    return Json{{"transform", io::to_json(direct_transform(mu, point))}, {"F", io::to_json(associated_F(mu, point))}};
  }
  return Json{{"value", io::to_json(io::evaluate_report(io::parse_report(doc), point))}};
}

Json cmd_diagnose(const Json& doc, const Flags& f) {
  const auto problem = problem_from_json(doc);
  std::vector<SFraction> fractions;
  Json indices = Json::array();
  for (const auto& [index, seq] : associated_sequences(problem)) {
    const PFraction pf = pfraction_expand(seq);
    if (pf.empty()) throw Error("no-normal-index", "branch " + to_string(index) + " has no normal index");
    NormalIndices checked = pf.indices;
    if (pf.open_last_atom) checked.indices.pop_back();
    if (const auto r = is_regular(seq, checked); !r)
      throw Error("not-regular", "branch " + to_string(index) + " is not regular (shifted Hankel determinant of order " +
                                     std::to_string(*r.witness) + " vanishes)");
    fractions.push_back(s_atoms(pf, Rational(0)));
    indices.push_back(index);
  }
  std::size_t depth = f.depth.value_or(0);
  if (!f.depth)
    for (const auto& sf : fractions) depth = std::max(depth, sf.size());
  Json j = io::to_json(indeterminacy_partial_sums(fractions, depth));
  for (std::size_t k = 0; k < indices.size(); ++k) j["per_sequence"][k]["index"] = indices[k];
  j["depth"] = depth;
  return j;
}

void add_input(CLI::App* sub, Flags& f) {
  sub->add_option("input", f.input, "Input JSON document (default: standard input)");
  sub->add_option("-o,--output", f.output, "Output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for truncated moment problems via continued fractions", "stieltjes"};
  app.require_subcommand(1);
  Flags f;

  auto* ni = app.add_subcommand("normal-indices", "Normal indices of a sequence or of every branch");
  add_input(ni, f);
  auto* pfc = app.add_subcommand("pfraction", "P-fraction atoms and polynomials of the first and second kind");
  add_input(pfc, f);
  pfc->add_option("--tau", f.tau, "zero | inf | rational:[numer]/[denom]");
  pfc->add_flag("--pretty", f.pretty, "Print the continued fraction instead of JSON");
  auto* sfc = app.add_subcommand("sfraction", "S-fraction atoms and Stieltjes polynomials");
  add_input(sfc, f);
  sfc->add_option("--tau", f.tau, "zero | inf | rational:[numer]/[denom]");
  sfc->add_option("--parity", f.parity, "odd | even");
  sfc->add_option("--alpha", f.alpha, "auto | rational shift");
  sfc->add_flag("--pretty", f.pretty, "Print the continued fraction instead of JSON");
  auto* solve = app.add_subcommand("solve", "Solve a moment problem and emit a report");
  add_input(solve, f);
  solve->add_option("--strategy", f.strategy, "pfraction | sfraction | sfraction-alpha");
  solve->add_option("--parity", f.parity, "odd | even");
  solve->add_option("--tau", f.tau, "zero | inf | rational:[numer]/[denom]");
  solve->add_option("--alpha", f.alpha, "auto | rational shift");
  solve->add_option("--common-index", f.common_index, "Pin the common normal index");
  solve->add_flag("--pretty", f.pretty, "Print the continued fractions instead of JSON");
  auto* verify = app.add_subcommand("verify", "Check a report against moments (exit 1 on mismatch)");
  add_input(verify, f);
  verify->add_option("--moments", f.moments, "Tensor or moment document to check against");
  verify->add_option("--order", f.order, "Check at most this many coefficients per branch");
  auto* mfa = app.add_subcommand("moments-from-atoms", "Moment tensor of an atomic measure");
  add_input(mfa, f);
  mfa->add_option("--ell", f.ell, "Largest index per coordinate")->required();
  auto* ev = app.add_subcommand("eval", "Evaluate a report or a measure's transform at a point");
  add_input(ev, f);
  ev->add_option("--point", f.point, "Comma-separated rationals")->required();
  auto* diag = app.add_subcommand("diagnose", "Partial sums of the indeterminacy series");
  add_input(diag, f);
  diag->add_option("--depth", f.depth, "Atoms summed per sequence (default: all)");

  auto emit_error = [&](const std::string& code, const std::string& message) {
    out << Json{{"error", code}, {"message", message}}.dump() << "\n";
    return 2;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what());
  }

  try {
    int status = 0;
    std::string text;
    const Json doc = load(f.input, in);
    Json result;
    if (ni->parsed()) result = cmd_normal_indices(doc);
    else if (pfc->parsed()) result = cmd_pfraction(doc, f, text);
    else if (sfc->parsed()) result = cmd_sfraction(doc, f, text);
    else if (solve->parsed()) result = cmd_solve(doc, f, text);
    else if (verify->parsed()) result = cmd_verify(doc, f, in, status);
    else if (mfa->parsed()) result = cmd_moments_from_atoms(doc, f);
    else if (ev->parsed()) result = cmd_eval(doc, f);
    else result = cmd_diagnose(doc, f);

    const std::string rendered = f.pretty ? text : result.dump(2) + "\n";
    if (f.output == "-") {
      out << rendered;
    } else {
      std::ofstream file(f.output);
      if (!file) throw Error("io", "cannot write " + f.output);
      file << rendered;
    }
    return status;
  } catch (const Error& e) {
    return emit_error(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return emit_error("schema", e.what());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return emit_error("internal", e.what());
  }
}

}  // namespace stieltjes::cli
