#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stieltjes/multidim.hpp"

namespace stieltjes::io {

using Json = nlohmann::ordered_json;

// Scalars and polynomials: "p/q" strings and coefficient arrays (index = power).
Json to_json(const Rational& r);
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
Rational rational_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);

/// {"moments": [...]}
MomentSequence moments_from_json(const Json& j);
Json moments_to_json(const MomentSequence& s);

/// {"dim": n, "ell": l, "entries": [{"index": [...], "value": "p/q"}, ...]};
/// entries must be exhaustive and unique.
MultiMomentSequence tensor_from_json(const Json& j);
Json tensor_to_json(const MultiMomentSequence& s);

/// {"dim": n, "atoms": [{"point": [...], "mass": "..."}, ...]}
AtomicMeasure measure_from_json(const Json& j);
Json measure_to_json(const AtomicMeasure& mu);

/// "zero" | "inf" | "rational:[numer coeffs]/[denom coeffs]"
TailParameter parse_tail(const std::string& text);
Json to_json(const TailParameter& tau);
TailParameter tail_from_json(const Json& j);

std::string to_string(Strategy s);
std::string to_string(Parity p);

Json to_json(const NormalIndices& idx);
Json to_json(const PFraction& pf);
Json to_json(const PQPolynomials& pq);
Json to_json(const SFraction& sf);
Json to_json(const StieltjesPolys& sp);
Json to_json(const VerificationReport& r);
Json to_json(const MultiVerificationReport& r);
Json to_json(const IndeterminacyReport& r);

/// Canonical answer document for a solved problem. When `problem` is given it
/// is embedded so that the document can be verified on its own.
Json assemble_report(const MultiSolution& sol, const MultiMomentSequence* problem = nullptr);

/// Branch data recovered from an assembled report.
struct ParsedReport {
  std::size_t dim = 1;
  std::size_t ell = 0;
  std::vector<BranchCheck> branches;
  std::optional<MultiMomentSequence> problem;
};

ParsedReport parse_report(const Json& j);

/// sum over branches of prefix * branch solution at `point`.
Rational evaluate_report(const ParsedReport& report, const std::vector<Rational>& point);

// Human-readable continued fractions.
std::string render(const PFraction& pf, const TailParameter& tau);
std::string render(const SFraction& sf, Parity parity, const TailParameter& tau);
std::string render(const MultiSolution& sol);

}  // namespace stieltjes::io
