// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/io.hpp"

using namespace stieltjes;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Rational q(long n, long d = 1) { return Rational(n, d); }

MomentSequence seq(std::initializer_list<long> xs) {
  MomentSequence out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::vector<MomentSequence> corpus() {
  oracle::Rng rng(20240601);
  std::vector<MomentSequence> out;
  for (std::size_t len : {2, 4, 6, 8})
    for (int i = 0; i < 50; ++i) out.push_back(oracle::random_full_rank_sequence(rng, len));
  return out;
}

std::vector<Polynomial> shift_candidates(const PFraction& pf) {
  const auto pq = pq_polynomials(pf);
  const std::size_t last = pf.size() - (pf.open_last_atom ? 1 : 0);
  return {pq.P.begin() + 1, pq.P.begin() + 1 + static_cast<std::ptrdiff_t>(last)};
}

RationalFunction random_proper(oracle::Rng& rng) {
  const auto dd = static_cast<std::size_t>(oracle::random_int(rng, 1, 3));
  std::vector<Rational> num(static_cast<std::size_t>(oracle::random_int(rng, 1, static_cast<long>(dd)))), den(dd + 1);
  for (auto& x : num) x = oracle::random_rational(rng);
  for (auto& x : den) x = oracle::random_rational(rng);
  den.back() = q(oracle::random_int(rng, 1, 3));
  return {Polynomial(num), Polynomial(den)};
}

Verdict ac1_reconstruction() {
  const auto data = corpus();
  int ok = 0;
  for (const auto& s : data) {
    const auto pf = pfraction_expand(s);
    if (pf.indices.count() != s.size() / 2 || pf.truncated) return {false, "unexpected normal indices"};
    if (verify_expansion(pfraction_solution(pf, TailParameter::zero()), s, s.size()).ok) ++ok;
  }
  oracle::Rng rng(77);
  int tails = 0, tail_ok = 0;
  for (std::size_t block = 0; block < 4; ++block)
    for (int t = 0; t < 20;) {
      const auto& s = data[block * 50 + static_cast<std::size_t>(t)];
      const auto pf = pfraction_expand(s);
      RationalFunction f = pfraction_solution(pf, TailParameter::zero());
      try {
        f = pfraction_solution(pf, TailParameter::rational(random_proper(rng)));
      } catch (const Error& e) {
        if (std::string(e.code()) == "degenerate") continue;
        throw;
      }
      ++tails;
      if (verify_expansion(f, s, s.size()).ok) ++tail_ok;
      ++t;
    }
  std::ostringstream d;
  d << ok << "/" << data.size() << " sequences with tau = 0, " << tail_ok << "/" << tails << " with random proper tau";
  return {ok == static_cast<int>(data.size()) && data.size() >= 200 && tail_ok == tails && tails == 80, d.str()};
}

Verdict ac2_schur_oracle() {
  int steps = 0, agree = 0;
  for (const auto& s : corpus()) {
    MomentSequence current = s;
    while (!current.empty()) {
      const auto step = schur_step(current);
      const auto expected = oracle::schur_by_series(current);
      ++steps;
      if (step.b == expected.b && step.a == expected.a && step.next == expected.next) ++agree;
      current = step.next;
    }
  }
  std::ostringstream d;
  d << agree << "/" << steps << " steps agree with series inversion";
  return {steps > 0 && agree == steps, d.str()};
}

Verdict ac3_cross_formula() {
  int regular = 0, regular_ok = 0;
  for (const auto& s : corpus()) {
    const auto pf = pfraction_expand(s);
    if (!is_regular(s, pf.indices)) continue;
    ++regular;
    if (stieltjes_polynomials_recurrence(s_atoms(pf, q(0))) == stieltjes_polynomials_determinant(pf, q(0)))
      ++regular_ok;
  }
  oracle::Rng rng(99);
  int irregular = 0, irregular_ok = 0, shifted = 0;
  while (irregular < 60) {
    const auto s = oracle::random_sign_sequence(rng, static_cast<std::size_t>(2 * oracle::random_int(rng, 1, 4)));
    const auto pf = pfraction_expand(s);
    if (pf.empty() || pf.truncated || is_regular(s, pf.indices)) continue;
    ++irregular;
    const auto alpha = find_alpha(shift_candidates(pf));
    if (!alpha.is_zero()) ++shifted;
    if (stieltjes_polynomials_recurrence(s_atoms(pf, alpha)) == stieltjes_polynomials_determinant(pf, alpha))
      ++irregular_ok;
  }
  std::ostringstream d;
  d << regular_ok << "/" << regular << " regular, " << irregular_ok << "/" << irregular << " non-regular ("
    << shifted << " with nonzero shift)";
  return {regular >= 100 && regular_ok == regular && irregular >= 50 && irregular_ok == irregular, d.str()};
}

Verdict ac4_fixtures() {
  std::vector<std::string> failed;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) failed.emplace_back(what);
  };
  const Polynomial z{q(0), q(1)};
  const auto pf26 = pfraction_expand(seq({2, 6}));
  expect(pf26.atoms == std::vector<PFractionAtom>{{Polynomial{q(-3), q(1)}, q(2)}}, "(2,6) atoms");
  const auto sf26 = s_atoms(pf26, q(0));
  expect(sf26.atoms.size() == 1 && sf26.atoms[0].m == Polynomial{q(1, 2)} && sf26.atoms[0].l == q(2, 3),
         "(2,6) S-atoms");
  const RationalFunction f26(Polynomial{q(-2)}, Polynomial{q(-3), q(1)});
  const auto sol26 = pfraction_solution(pf26, TailParameter::zero());
  expect(sol26.numer() == f26.numer() && sol26.denom() == f26.denom(), "(2,6) solution");
  expect(sfraction_solution(sf26, Parity::even, TailParameter::zero()) == f26, "(2,6) S-solution");

  const auto s1010 = seq({1, 0, 1, 0});
  const auto pf = pfraction_expand(s1010);
  const auto pq = pq_polynomials(pf);
  expect(pq.P == std::vector<Polynomial>{Polynomial{q(1)}, z, Polynomial{q(-1), q(0), q(1)}}, "(1,0,1,0) P");
  expect(pq.Q == std::vector<Polynomial>{Polynomial{}, Polynomial{q(1)}, z}, "(1,0,1,0) Q");
  const RationalFunction f(Polynomial{q(0), q(-1)}, Polynomial{q(-1), q(0), q(1)});
  const auto sol = pfraction_solution(pf, TailParameter::zero());
  expect(sol.numer() == f.numer() && sol.denom() == f.denom(), "(1,0,1,0) solution");
  expect(!is_regular(s1010, pf.indices).regular, "(1,0,1,0) is_regular");
  const auto alpha = find_alpha(shift_candidates(pf));
  expect(alpha == q(2), "(1,0,1,0) find_alpha");
  expect(sfraction_solution(s_atoms(pf, alpha), Parity::even, TailParameter::zero()) == f,
         "(1,0,1,0) shifted even solution");
  std::string d = failed.empty() ? "all fixtures exact" : "failed:";
  for (const auto& w : failed) d += " [" + w + "]";
  return {failed.empty(), d};
}

Verdict ac5_atomic_termination() {
  oracle::Rng rng(55);
  int total = 0, ok = 0;
  for (int i = 0; i < 60; ++i) {
    const auto k = static_cast<std::size_t>(oracle::random_int(rng, 1, 4));
    const auto mu = oracle::random_measure_1d(rng, k);
    const auto pf = pfraction_expand(oracle::power_moments(mu, 2 * k));
    ++total;
    if (pf.size() == k && pfraction_solution(pf, TailParameter::zero()) == oracle::pole_sum(mu)) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total << " measures terminate with k atoms and the exact pole sum";
  return {total >= 50 && ok == total, d.str()};
}

Verdict ac6_multidim_round_trip() {
  oracle::Rng rng(66);
  std::ostringstream d;
  bool pass = true;
  for (auto [dim, wanted] : {std::pair<std::size_t, int>{2, 50}, {3, 10}}) {
    int measures = 0, solves = 0, verified = 0, skipped = 0;
    std::map<std::string, int> per_strategy;
    while (measures < wanted) {
      const auto mu = oracle::random_measure(rng, dim, static_cast<std::size_t>(oracle::random_int(rng, 1, 4)), -2, 3);
      const auto s = moments_from_atoms(mu, static_cast<std::size_t>(oracle::random_int(rng, 1, 3)));
      int here = 0;
      for (auto strategy : {Strategy::pfraction, Strategy::sfraction_regular, Strategy::sfraction_alpha})
        for (auto parity : {Parity::even, Parity::odd}) {
          MultiSolution sol;
          try {
            sol = solve_mp(s, {.strategy = strategy, .parity = parity});
          } catch (const Error& e) {
            const std::string code = e.code();
            if (code != "no-common-normal-index" && code != "not-regular" && code != "parity-unsupported") {
              pass = false;
              d << "[unexpected " << code << "] ";
            }
            continue;
          }
          ++here;
          ++per_strategy[io::to_string(strategy) + "/" + io::to_string(parity)];
          if (verify_multidim(sol, s).ok) ++verified;
        }
      if (here == 0) {
        ++skipped;
        continue;
      }
      solves += here;
      ++measures;
    }
    pass = pass && verified == solves;
    d << "n=" << dim << ": " << measures << " measures, " << verified << "/" << solves << " solves verified ("
      << skipped << " measures without a common normal index;";
    for (const auto& [name, count] : per_strategy) d << " " << name << "=" << count;
    d << ") ";
  }
  return {pass, d.str()};
}

Verdict ac7_odd_even() {
  int total = 0, ok = 0;
  for (const auto& s : corpus()) {
    const auto even = pfraction_solution(pfraction_expand(s), TailParameter::zero());
    const MomentSequence odd_data(s.begin(), s.end() - 1);
    const auto pf = pfraction_expand(odd_data);
    const auto sf = s_atoms(pf, find_alpha(shift_candidates(pf)));
    const auto odd = sfraction_solution(sf, Parity::odd, TailParameter::infinite());
    ++total;
    if (series_of_rational(odd, odd_data.size()) == series_of_rational(even, odd_data.size())) ++ok;
  }
  std::ostringstream d;
  d << ok << "/" << total << " sequences agree on the first 2n-1 coefficients";
  return {total > 0 && ok == total, d.str()};
}

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict ac8_cli_pipeline() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "stieltjes_acceptance";
  fs::create_directories(dir);
  const std::string cli = STIELTJES_CLI_PATH;
  oracle::Rng rng(88);
  int measures = 0, clean_ok = 0, perturbations = 0, detected = 0;
  while (measures < 20) {
    // Keep measures whose data is fully consumed (2 * common index = ell + 1) so every entry matters.
    const std::size_t ell = oracle::random_int(rng, 0, 1) ? 3 : 1;
    const auto mu = oracle::random_measure(rng, 2, static_cast<std::size_t>(oracle::random_int(rng, 2, 3)), -2, 3);
    const auto tensor = moments_from_atoms(mu, ell);
    try {
      if (2 * solve_mp(tensor).common_index != ell + 1) continue;
    } catch (const Error&) {
      continue;
    }
    ++measures;
    const fs::path measure = dir / "measure.json", report = dir / "report.json", perturbed = dir / "perturbed.json";
    std::ofstream(measure) << io::measure_to_json(mu).dump();
    const std::string source = cli + " moments-from-atoms --ell " + std::to_string(ell) + " " + measure.string();
    if (shell(source + " | " + cli + " solve | " + cli + " verify > /dev/null") == 0) ++clean_ok;
    shell(source + " | " + cli + " solve > " + report.string());
    for (std::size_t k = 0; k < tensor.size(); ++k) {
      auto bumped = tensor;
      bumped.at(tensor.index_of(k)) += q(1);
      std::ofstream(perturbed) << io::tensor_to_json(bumped).dump();
      ++perturbations;
      if (shell(cli + " verify --moments " + perturbed.string() + " " + report.string() + " > /dev/null") == 1)
        ++detected;
    }
  }
  std::ostringstream d;
  d << clean_ok << "/" << measures << " pipelines exit 0, " << detected << "/" << perturbations
    << " single-entry perturbations exit 1";
  return {clean_ok == measures && detected == perturbations, d.str()};
}

}  // namespace

// With an argument such as "AC3", runs only that criterion.
int main(int argc, char** argv) {
  const std::string only = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 1-D P-fraction reconstruction", ac1_reconstruction},
      {"AC2 Schur-step series oracle", ac2_schur_oracle},
      {"AC3 Stieltjes polynomial cross-formula", ac3_cross_formula},
      {"AC4 worked fixtures", ac4_fixtures},
      {"AC5 atomic termination", ac5_atomic_termination},
      {"AC6 multidimensional round trip", ac6_multidim_round_trip},
      {"AC7 odd/even consistency", ac7_odd_even},
      {"AC8 CLI end-to-end", ac8_cli_pipeline},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && name.rfind(only + " ", 0) != 0) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << " (" << ms << " ms)\n";
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
