#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stieltjes/error.hpp"
#include "stieltjes/pfraction.hpp"

using namespace stieltjes;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

MomentSequence seq(std::initializer_list<long> xs) {
  MomentSequence out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

template <typename F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const Polynomial z{q(0), q(1)};

RationalFunction random_proper(oracle::Rng& rng) {
  const auto dd = static_cast<std::size_t>(oracle::random_int(rng, 1, 3));
  std::vector<Rational> num(static_cast<std::size_t>(oracle::random_int(rng, 1, static_cast<long>(dd)))), den(dd + 1);
  for (auto& x : num) x = oracle::random_rational(rng);
  for (auto& x : den) x = oracle::random_rational(rng);
  den.back() = q(oracle::random_int(rng, 1, 3));
  return {Polynomial(num), Polynomial(den)};
}

}  // namespace

TEST_CASE("schur_step examples") {
  const auto a = schur_step(seq({2, 6}));
  CHECK(a.b == q(2));
  CHECK(a.a == Polynomial{q(-3), q(1)});
  CHECK(a.next.empty());
  const auto b = schur_step(seq({1, 0, 1, 0}));
  CHECK(b.b == q(1));
  CHECK(b.a == z);
  CHECK(b.next == seq({1, 0}));
  const auto c = schur_step(seq({1, 0, 0, 0}));
  CHECK(c.b == q(1));
  CHECK(c.a == z);
  CHECK(c.next == seq({0, 0}));
  CHECK(error_code([] { schur_step(seq({0, 0, 0})); }) == "no-normal-index");
  CHECK(error_code([] { schur_step(seq({0, 0, 1})); }) == "no-normal-index");
  CHECK(error_code([] { schur_step(MomentSequence{}); }) == "no-normal-index");
}

TEST_CASE("schur_step matches the series-inversion oracle") {
  oracle::Rng rng(101);
  int steps = 0;
  for (int i = 0; i < 400; ++i) {
    const auto len = static_cast<std::size_t>(oracle::random_int(rng, 2, 9));
    auto s = oracle::random_int(rng, 0, 1) ? oracle::random_sign_sequence(rng, len) : MomentSequence(len);
    if (s[0].is_zero() && oracle::random_int(rng, 0, 1))
      for (auto& x : s) x = oracle::random_rational(rng);
    std::size_t lead = 0;
    while (lead < s.size() && s[lead].is_zero()) ++lead;
    if (lead == s.size() || 2 * (lead + 1) > s.size()) continue;
    const auto step = schur_step(s);
    const auto expected = oracle::schur_by_series(s);
    CHECK(step.nu == lead + 1);
    CHECK(step.b == expected.b);
    CHECK(step.a == expected.a);
    CHECK(step.next == expected.next);
    CHECK(step.a.is_monic());
    ++steps;
  }
  CHECK(steps > 200);
}

TEST_CASE("pfraction_expand examples") {
  const auto a = pfraction_expand(seq({1, 0, 1, 0}));
  REQUIRE(a.size() == 2);
  CHECK(a.atoms[0].a == z);
  CHECK(a.atoms[0].b == q(1));
  CHECK(a.atoms[1].a == z);
  CHECK(a.atoms[1].b == q(1));
  const auto b = pfraction_expand(seq({2, 6}));
  REQUIRE(b.size() == 1);
  CHECK(b.atoms[0].a == Polynomial{q(-3), q(1)});
  CHECK(b.atoms[0].b == q(2));
  const auto c = pfraction_expand(seq({1, 0, 0, 0}));
  REQUIRE(c.size() == 1);
  CHECK(c.atoms[0].a == z);
  CHECK(c.indices.indices == std::vector<std::size_t>{1});
  CHECK(c.truncated);
}

TEST_CASE("pq_polynomials examples") {
  const auto a = pq_polynomials(pfraction_expand(seq({1, 0, 1, 0})));
  CHECK(a.P == std::vector<Polynomial>{Polynomial{q(1)}, z, Polynomial{q(-1), q(0), q(1)}});
  CHECK(a.Q == std::vector<Polynomial>{Polynomial{}, Polynomial{q(1)}, z});
  const auto b = pq_polynomials(pfraction_expand(seq({2, 6})));
  CHECK(b.P == std::vector<Polynomial>{Polynomial{q(1)}, Polynomial{q(-3), q(1)}});
  CHECK(b.Q == std::vector<Polynomial>{Polynomial{}, Polynomial{q(2)}});
  const auto c = pq_polynomials(PFraction{});
  CHECK(c.P == std::vector<Polynomial>{Polynomial{q(1)}});
  CHECK(c.Q == std::vector<Polynomial>{Polynomial{}});
}

TEST_CASE("pfraction_solution examples") {
  const auto a = pfraction_solution(pfraction_expand(seq({1, 0, 1, 0})), TailParameter::zero());
  CHECK(a == RationalFunction(Polynomial{q(0), q(-1)}, Polynomial{q(-1), q(0), q(1)}));
  const auto pf = pfraction_expand(seq({2, 6}));
  CHECK(pfraction_solution(pf, TailParameter::zero()) == RationalFunction(Polynomial{q(-2)}, Polynomial{q(-3), q(1)}));
  const auto tau = TailParameter::rational({Polynomial{q(1)}, z});
  CHECK(pfraction_solution(pf, tau) == RationalFunction(Polynomial{q(0), q(-2)}, Polynomial{q(1), q(-3), q(1)}));
  CHECK(error_code([&] { pfraction_solution(pf, TailParameter::rational({z, Polynomial{q(1)}})); }) == "tau-class");
  CHECK(error_code([&] { pfraction_solution(pf, TailParameter::infinite()); }) == "tau-class");
}

TEST_CASE("verify_expansion examples") {
  const auto a = verify_expansion({Polynomial{q(-2)}, Polynomial{q(-3), q(1)}}, seq({2, 6}), 2);
  CHECK(a.ok);
  CHECK(a.matched_through == 2);
  const auto b = verify_expansion({Polynomial{q(-1)}, z}, seq({1, 1}), 2);
  CHECK_FALSE(b.ok);
  CHECK(b.matched_through == 1);
  REQUIRE(b.first_mismatch);
  CHECK(b.first_mismatch->index == 1);
  CHECK(b.first_mismatch->expected == q(-1));
  CHECK(b.first_mismatch->got == q(0));
  CHECK(verify_expansion({Polynomial{q(0), q(-1)}, Polynomial{q(-1), q(0), q(1)}}, seq({1, 0, 1, 0}), 4).ok);
  CHECK(error_code([] { verify_expansion({Polynomial{q(-1)}, z}, seq({1}), 2); }) == "insufficient-moments");
}

TEST_CASE("reconstruction, degrees and polynomial oracles") {
  oracle::Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const auto len = static_cast<std::size_t>(2 * oracle::random_int(rng, 1, 4));
    const auto s = oracle::random_int(rng, 0, 3) == 0 ? oracle::random_sign_sequence(rng, len)
                                                      : oracle::random_full_rank_sequence(rng, len);
    const auto pf = pfraction_expand(s);
    if (pf.empty() || pf.open_last_atom) continue;
    const std::size_t top = pf.indices.last();
    long degree_sum = 0;
    for (const auto& atom : pf.atoms) {
      CHECK_FALSE(atom.b.is_zero());
      CHECK(atom.a.is_monic());
      degree_sum += atom.a.degree();
    }
    CHECK(degree_sum == static_cast<long>(top));
    const auto pq = pq_polynomials(pf);
    for (std::size_t j = 1; j < pq.P.size(); ++j) {
      const std::size_t n = pf.indices.indices[j - 1];
      CHECK(pq.P[j].degree() == static_cast<long>(n));
      CHECK(pq.P[j] == oracle::monic_orthogonal(s, n));
      CHECK(pq.Q[j] == oracle::second_kind(s, pq.P[j]));
    }
    const auto f = pfraction_solution(pf, TailParameter::zero());
    CHECK(verify_expansion(f, s, 2 * top).ok);
    for (int t = 0; t < 3; ++t) {
      const auto tau = random_proper(rng);
      RationalFunction g = f;
      try {
        g = pfraction_solution(pf, TailParameter::rational(tau));
      } catch (const Error& e) {
        CHECK(e.code() == "degenerate");
        continue;
      }
      CHECK(verify_expansion(g, s, 2 * top).ok);
    }
  }
}

TEST_CASE("atomic measures terminate with one atom per mass point") {
  oracle::Rng rng(303);
  for (int i = 0; i < 60; ++i) {
    const auto k = static_cast<std::size_t>(oracle::random_int(rng, 1, 4));
    const auto mu = oracle::random_measure_1d(rng, k);
    const auto pf = pfraction_expand(oracle::power_moments(mu, 2 * k));
    CHECK(pf.size() == k);
    CHECK(pfraction_solution(pf, TailParameter::zero()) == oracle::pole_sum(mu));
  }
}

TEST_CASE("tail classes") {
  CHECK(TailParameter::zero().is_o1());
  CHECK(TailParameter::infinite().is_inv_o_z());
  CHECK(TailParameter::rational({Polynomial{q(1)}, z}).is_o1());
  CHECK_FALSE(TailParameter::rational({Polynomial{q(1)}, Polynomial{q(2)}}).is_o1());
  CHECK(TailParameter::rational({Polynomial{q(1)}, Polynomial{q(2)}}).is_inv_o_z());
  CHECK(TailParameter::rational({z, Polynomial{q(2)}}).is_inv_o_z());
  CHECK_FALSE(TailParameter::rational({Polynomial{q(1)}, z}).is_inv_o_z());
}
