#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swdeg/errors.hpp"
#include "swdeg/numutil.hpp"
#include "swdeg/verify.hpp"

using namespace swdeg;

namespace {

Pin2Elem one_minus_c() { return Pin2Elem(1) - Pin2Elem::c(); }

}  // namespace

TEST_CASE("two-path product identity") {
  CHECK(check_product_lemma(1).pass);
  CHECK(check_product_lemma(3).pass);
  CHECK(check_product_lemma(15).pass);
  CHECK(check_product_lemma(45).pass);
  CHECK_THROWS_AS(check_product_lemma(4), PreconditionError);
}

TEST_CASE("regular wedge trace values") {
  CHECK(regular_wedge_trace(3, 0, true) == Cyclotomic(8));
  CHECK(regular_wedge_trace(3, 1, false) == Cyclotomic(1));
  CHECK(regular_wedge_trace(3, 1, true) == Cyclotomic(2));
  CHECK(regular_wedge_trace(1, 0, true) == Cyclotomic(2));
  // Non-coprime powers: the naive closed form does not apply; the
  // product is 2^{gcd-1} over the nontrivial lines.
  CHECK(regular_wedge_trace(9, 3, false) == Cyclotomic(4));
  CHECK(regular_wedge_trace(9, 3, true) == Cyclotomic(8));
  CHECK_THROWS_AS(regular_wedge_trace(4, 1, true), PreconditionError);
}

TEST_CASE("regular wedge trace audit") {
  auto r3 = check_regular_wedge_trace(3);
  CHECK(r3.pass);
  // The factor-2 trivial-line discrepancy is flagged, not reconciled.
  REQUIRE(!r3.witnesses.empty());
  bool flagged = false;
  for (const auto& w : r3.witnesses) {
    if (w.find("closed-form discrepancy") != std::string::npos) flagged = true;
  }
  CHECK(flagged);

  auto r9 = check_regular_wedge_trace(9);
  CHECK(r9.pass);
  bool noncoprime_flagged = false;
  for (const auto& w : r9.witnesses) {
    if (w.find("k=3") != std::string::npos) noncoprime_flagged = true;
  }
  CHECK(noncoprime_flagged);

  for (long n = 1; n <= 25; n += 2) {
    auto r = check_regular_wedge_trace(n);
    CHECK(r.pass);
    // The coprime cases give 1 over the nontrivial lines.
    for (long k = 1; k < n; ++k) {
      if (gcd_long(k, n) == 1) CHECK(regular_wedge_trace(n, k, false) == Cyclotomic(1));
    }
  }
}

TEST_CASE("nonvanishing of the common coefficient") {
  Group z3 = Group::abelian({3});
  std::vector<std::pair<std::size_t, TracePoint>> all_j{
      {0, TracePoint::J}, {1, TracePoint::J}, {2, TracePoint::J}};
  auto r = check_coeff_nonvanishing(z3, ApproximationParams(), all_j);
  CHECK(r.pass);
  // Per-line J values 1 + zeta_3^{2l} are nonzero.
  EquivElem coeff = nonvanishing_coefficient(z3, ApproximationParams::uniform(1, 0));
  for (std::size_t g = 0; g < 3; ++g) CHECK_FALSE(coeff.trace_j(g).is_zero());

  auto r_sym = check_coeff_nonvanishing(z3, ApproximationParams(),
                                        {{1, TracePoint::Symbolic}, {2, TracePoint::Symbolic}});
  CHECK(r_sym.pass);

  // Even order fails the J-point precondition: 1 + lambda(gamma) = 0.
  Group z2 = Group::abelian({2});
  CHECK_THROWS_AS(
      check_coeff_nonvanishing(z2, ApproximationParams(), {{1, TracePoint::J}}),
      PreconditionError);
  // gamma = e is excluded symbolically.
  CHECK_THROWS_AS(
      check_coeff_nonvanishing(z3, ApproximationParams(), {{0, TracePoint::Symbolic}}),
      PreconditionError);

  // Sweep: J nonvanishing over all elements of the listed odd groups;
  // symbolic nonvanishing at generators.
  for (long n : {3L, 5L, 7L, 9L, 15L}) {
    Group g = Group::abelian({n});
    std::vector<std::pair<std::size_t, TracePoint>> samples;
    for (std::size_t cls = 0; cls < g.num_classes(); ++cls) {
      samples.emplace_back(cls, TracePoint::J);
      if (cls != 0 && gcd_long(static_cast<long>(cls), n) == 1) {
        samples.emplace_back(cls, TracePoint::Symbolic);
      }
    }
    CHECK(check_coeff_nonvanishing(g, ApproximationParams(), samples).pass);
  }

  // Boundary: at non-generators of Z9 some nontrivial character has
  // lambda(gamma) = 1, so the symbolic trace vanishes identically.
  Group z9 = Group::abelian({9});
  EquivElem coeff9 = nonvanishing_coefficient(z9, ApproximationParams());
  for (long cls : {3L, 6L}) CHECK(coeff9.trace_symbolic(cls).is_zero());
  for (long cls : {1L, 2L, 4L, 5L, 7L, 8L}) CHECK_FALSE(coeff9.trace_symbolic(cls).is_zero());
}

TEST_CASE("Euler classes") {
  Group trivial = Group::abelian({});
  auto [e0t, e1t] = euler_classes(trivial, ApproximationParams(), 3, 1);
  CHECK(e0t == EquivElem::one(trivial));
  CHECK(e1t == EquivElem::one(trivial));

  Group z3 = Group::abelian({3});
  auto [e0, e1] = euler_classes(z3, ApproximationParams::uniform(0, 0), 3, 1);
  EquivElem expected_e0 =
      wedge_star_h(z3, 1).pow(2) * wedge_star_h(z3, 2).pow(2);
  EquivElem expected_e1 =
      wedge_star_c(z3, 1).pow(4) * wedge_star_c(z3, 2).pow(4);
  CHECK(e0 == expected_e0);
  CHECK(e1 == expected_e1);
  // tr of e1 at (1, J) is ((1+zeta_3)(1+zeta_3^2))^4 = 1; tr of e0 at (e, J)
  // is 2^2 per line over two lines.
  CHECK(e1.trace_j(1) == Cyclotomic(1));
  CHECK(e0.trace_j(0) == Cyclotomic(16));
}

TEST_CASE("covering ring identity") {
  Group z3 = Group::abelian({3});
  EquivElem alpha = zp_degree(3, 3, 1);
  CHECK(check_cover_identity(z3, 3, 1, alpha, ApproximationParams()).pass);
  CHECK(check_cover_identity(z3, 3, 1, alpha, ApproximationParams::uniform(2, 3)).pass);

  // Irrep-dependent multiplicities also pass (parameter independence).
  ApproximationParams mixed;
  mixed.n_overrides[1] = 3;
  mixed.m_overrides[2] = 2;
  CHECK(check_cover_identity(z3, 3, 1, alpha, mixed).pass);

  // A wrong candidate fails with a concrete witness; the identity-class J
  // trace mismatch is 26 * 16 != 256 * 2 at the reduced level.
  EquivElem wrong = EquivElem::from_virtual(
      VirtualRep::regular(z3) * 4 + VirtualRep::trivial(z3), one_minus_c());
  auto bad = check_cover_identity(z3, 3, 1, wrong, ApproximationParams());
  CHECK_FALSE(bad.pass);
  REQUIRE(!bad.witnesses.empty());
  bool has_identity_j_witness = false;
  for (const auto& w : bad.witnesses) {
    if (w.find("gamma=0, J") != std::string::npos) has_identity_j_witness = true;
  }
  CHECK(has_identity_j_witness);
}

TEST_CASE("trace constraint") {
  Group z3 = Group::abelian({3});
  auto r = check_trace_constraint(z3, 3, 1, odd_sum_alpha0(z3, 3, 1));
  CHECK(r.pass);
  // Values are 2 away from the identity and 32 at it.
  VirtualRep v = odd_sum_alpha0(z3, 3, 1);
  CHECK(v.trace(1) == Cyclotomic(2));
  CHECK(v.trace(0) == Cyclotomic(32));

  Group z5 = Group::abelian({5});
  CHECK(check_trace_constraint(z5, 3, 1, odd_sum_alpha0(z5, 3, 1)).pass);

  auto bad = check_trace_constraint(z3, 3, 1, VirtualRep::regular(z3) * 12);
  CHECK_FALSE(bad.pass);
  REQUIRE(!bad.witnesses.empty());
  CHECK(bad.witnesses[0].find("gamma=0") != std::string::npos);

  CHECK_THROWS_AS(check_trace_constraint(Group::abelian({2}), 3, 1, VirtualRep(z3)),
                  PreconditionError);
}

TEST_CASE("oracle reconstruction of the odd prime degree") {
  CHECK(solve_zp_oracle(3, 3, 1) == zp_degree(3, 3, 1));
  // Frozen oracle rows for p = 5.
  EquivElem d = solve_zp_oracle(5, 3, 1);
  CHECK(d.coeff(1) == Pin2Elem(51) * one_minus_c());
  CHECK(d.coeff(0) == Pin2Elem(52) * one_minus_c());
  EquivElem d2 = solve_zp_oracle(5, 4, 1);
  CHECK(d2.coeff(1) == Pin2Elem(1638) * one_minus_c());
  CHECK(d2.coeff(0) == Pin2Elem(1640) * one_minus_c());
  // m = 2k + 1 forces y = 1.
  for (long k = 0; k <= 2; ++k) {
    EquivElem e = solve_zp_oracle(7, 2 * k + 1, k);
    auto dec = e.decompose();
    CHECK(dec.alpha0.coeff(0) - dec.alpha0.coeff(1) == 1);
  }

  // Full acceptance-grade sweep.
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long k = 0; k <= 2; ++k) {
      for (long d_exp = 0; d_exp <= 4; ++d_exp) {
        long m = 2 * k + 1 + d_exp;
        CHECK(solve_zp_oracle(p, m, k) == zp_degree(p, m, k));
      }
    }
  }
}

TEST_CASE("Z6 consistency") {
  CHECK(check_z6_consistency(23, 6, Pin2Elem(), Pin2Elem()).pass);
  CHECK(check_z6_consistency(5, 0, Pin2Elem(), Pin2Elem()).pass);
  CHECK(check_z6_consistency(11, 0, Pin2Elem(), Pin2Elem()).pass);

  std::mt19937 rng(53);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<mpz_class> h;
    for (int i = 0; i <= 3; ++i) h.emplace_back(coeff(rng));
    Pin2Elem beta0 = Pin2Elem::from_parts(h, mpz_class(coeff(rng)));
    Pin2Elem beta1 = Pin2Elem(coeff(rng)) + Pin2Elem(coeff(rng)) * Pin2Elem::h(2);
    CHECK(check_z6_consistency(23, 6, beta0, beta1).pass);
  }

  CHECK_THROWS_AS(check_z6_consistency(23, 3, Pin2Elem(), Pin2Elem()), PreconditionError);
}

TEST_CASE("perturbed Z6 data violates a named constraint") {
  // Solve, then perturb beta2 by recomputing the constraints directly.
  Z6Constants z = z6_constants(23, 6);
  Z6Betas sol = z6_solve(23, 6, Pin2Elem(), Pin2Elem());
  Pin2Elem perturbed = sol.beta2 + Pin2Elem(1);
  CHECK(Pin2Elem() + perturbed + sol.beta4 != z.a);
}

TEST_CASE("full suite runs clean") {
  VerifyAllConfig config;
  config.max_n = 31;  // keep the unit-test run snappy; acceptance sweeps to 99
  auto reports = run_all_checks(config);
  CHECK(!reports.empty());
  for (const auto& r : reports) {
    INFO(r.identity);
    CHECK(r.pass);
  }
  // Deterministic merge: sorted by identity.
  for (std::size_t i = 1; i < reports.size(); ++i) {
    CHECK(reports[i - 1].identity <= reports[i].identity);
  }
}
