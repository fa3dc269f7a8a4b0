#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidspin/dirac.hpp"

#include <chrono>
#include <cmath>

using namespace bs;

static Scalar mu(int k = 1) { return Scalar::mu_pow(k); }

TEST_CASE("spinor module enumeration") {
  CHECK(SpinorModule(0).empty());
  SpinorModule m1(1);
  CHECK(m1.invariant_basis().size() == 4);
  for (auto &t : m1.invariant_basis()) CHECK(t.charge() == 0);
  SpinorModule m(11);
  long total = 0;
  for (int s2 = 1; s2 <= 11; s2 += 2) total += 2 * (s2 + 1);
  CHECK((long)m.invariant_basis().size() == total);
  for (int s2 = 0; s2 <= 10; s2 += 2) CHECK(m.count(s2) == 0);
  CHECK(m.count(3) == 8);
}

TEST_CASE("pairing convention") {
  DiracConvention c = dirac_convention();
  CHECK(c.forced);
  CHECK(c.gamma_plus(1, 0).is_one());
  CHECK(c.gamma_minus(0, 1).is_one());
}

TEST_CASE("dirac blocks") {
  DiracMatrix d = dirac_blocks(SpinorModule(21));
  REQUIRE(d.blocks.size() == 11);
  CHECK(d.find(1)->d(0, 1).is_one());
  CHECK(d.find(1)->d(1, 0).is_one());
  CHECK(d.find(3)->d(0, 1) == mu() + mu(-1));
  CHECK(d.find(5)->d(0, 1) == mu(-2) * (Scalar(1) + mu(2) + mu(4)));
  for (auto &b : d.blocks) {
    CHECK(b.d(0, 0).is_zero());
    CHECK(b.d(1, 1).is_zero());
  }
}

TEST_CASE("closed form and recurrence") {
  auto t0 = std::chrono::steady_clock::now();
  SpinorModule m(21);
  DiracMatrix d = dirac_blocks(m);
  CHECK(closed_form_check(d));
  CHECK(recurrence_check(d));
  // independent oracle: symmetric q-number as a Laurent sum mu^{1-n} + mu^{3-n} + ... + mu^{n-1}
  for (auto &b : d.blocks) {
    int n = (b.s2 + 1) / 2;
    Scalar sum;
    for (int k = 0; k < n; ++k) sum += mu(1 - n + 2 * k);
    CHECK(b.d(0, 1) == sum);
  }
  for (double m0 : {0.25, 0.5, 0.75}) CHECK(float_exact_deviation(m, m0) < 1e-10);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5);
}

TEST_CASE("spectra") {
  SpinorModule m(5);
  auto ex = spectrum_exact(dirac_blocks(m), 0.5);
  REQUIRE(ex.size() == 6);
  CHECK(ex[2].s2 == 3);
  CHECK(ex[2].value == doctest::Approx(-2.5));
  CHECK(ex[3].value == doctest::Approx(2.5));
  CHECK(ex[3].multiplicity == 4);
  for (double m0 : {0.3, 0.5, 1.0}) {
    auto e = spectrum_exact(dirac_blocks(m), m0);
    CHECK(e[1].value == doctest::Approx(1.0));
  }
  auto fl = spectrum_float(m, 0.5);
  for (size_t i = 1; i < fl.size(); ++i) CHECK(std::abs(fl[i - 1].value) <= std::abs(fl[i].value) + 1e-12);
  // mu = 1: the closed form gives s + 1/2
  auto cl = spectrum_exact(dirac_blocks(m), 1.0);
  CHECK(cl[3].value == doctest::Approx(2.0));
  CHECK(cl[5].value == doctest::Approx(3.0));
  std::string csv = spectrum_csv(m, 0.5);
  CHECK(csv.rfind("s,lambda_exact,lambda_float,multiplicity\n", 0) == 0);
  CHECK(csv.find("3/2,") != std::string::npos);
}

TEST_CASE("asymptotics") {
  auto t0 = std::chrono::steady_clock::now();
  AsymptoticsReport r = asymptotics_fit(0.5, 80);
  INFO(r.to_json());
  CHECK(r.slope_ok);
  CHECK(r.tail_ok);
  CHECK(r.count == 2 * 2 * 820);
  AsymptoticsReport c = asymptotics_fit(1.0, 80);
  INFO(c.to_json());
  CHECK(c.r2 > 0.99);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 10);
}

TEST_CASE("spinorial laplacian") {
  DiracConvention c = dirac_convention();
  SpinorRep rep = SpinorRep::hopf();
  CHECK(laplacian_value(1, -1, c, rep) == Scalar::frac(1, 2) * mu(2));
  CHECK(laplacian_value(1, -1, c, rep).eval(1.0).real() == doctest::Approx(0.5));
  CHECK(rhat_value(1, -1, c, rep) == Scalar(1) - Scalar::frac(1, 2) * mu(2));
  FullBlock f = full_block(2, 0.5, c, rep);
  CHECK(f.invariant.empty());
  FullBlock h = full_block(1, 0.5, c, rep);
  CHECK(std::abs(h.laplacian(h.invariant[0], h.invariant[0]) - 0.125) < 1e-14);
}

TEST_CASE("lichnerowicz decomposition") {
  LichnerowiczReport r = lichnerowicz_check(7, {0.5, 1.0});
  CHECK(r.candidates.size() == 8);
  CHECK(r.block_preserving);
  CHECK(r.diagonal);
  CHECK(r.alpha_independent);
  CHECK(r.rhat_half);
  CHECK(r.rhat_classical);
  // at mu = 1 the direct convention reproduces the classical curvature term
  bool classical = false;
  for (auto &lc : r.candidates) classical = classical || lc.residual[1] < 1e-10;
  CHECK(classical);
  LichnerowiczReport wide = lichnerowicz_check(11, {0.5});
  CHECK(wide.block_preserving);
  CHECK(wide.alpha_independent);
}

TEST_CASE("symmetry") {
  SymmetryReport s = symmetry_check(9, {0.25, 0.5, 0.75, 1.0});
  CHECK(s.dirac < 1e-10);
  CHECK(s.laplacian < 1e-10);
  // the ladder alone is not symmetric, so the residual is sensitive
  FullBlock f = full_block(3, 0.5, dirac_convention(), SpinorRep::hopf());
  CHECK((f.kp - f.kp.adjoint()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("report") {
  SuiteReport r = dirac_report(11, {0.5});
  CHECK(r.find("closed form")->pass);
  CHECK(r.find("recurrence")->pass);
  CHECK(r.find("dirac coefficients clifford relation")->pass);
  CHECK_THROWS_AS(dirac_report(0, {0.5}), std::invalid_argument);
}
