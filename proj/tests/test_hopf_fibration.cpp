#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidspin/hopf_fibration.hpp"

#include <random>

using namespace bs;

static const HaarState &haar() {
  static HaarState h(6);
  return h;
}

static PolyB g(char c) { return PolyB::gen(c); }
static PolyB zeta() { return g('c') * g('C'); }

TEST_CASE("normal forms") {
  CHECK(normal_form("ca") == Scalar::mu_pow(-1) * PolyB::mono({1, 1, 0}));
  CHECK(normal_form("aA") == PolyB(1) - Scalar::mu_pow(2) * zeta());
  CHECK(normal_form("Aa") == PolyB(1) - zeta());
  CHECK(normal_form("AacC") == zeta() - zeta() * zeta());
  CHECK(normal_form("Cc") == zeta());
  CHECK(parse_word("alpha* alpha gamma gamma*") == "AacC");
  CHECK(g('a').star() == g('A'));
  CHECK((g('a') * g('c')).star() == g('C') * g('A'));
}

TEST_CASE("confluence of the rewriting system") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(0, 6), letter(0, 3);
  const char *alpha = "aAcC";
  for (int it = 0; it < 500; ++it) {
    std::string w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w += alpha[letter(rng)];
    INFO(w);
    PolyB left = normal_form(w, RewriteStrategy::Leftmost);
    CHECK(normal_form(w, RewriteStrategy::Rightmost) == left);
    CHECK(normal_form(w, RewriteStrategy::Random, &rng) == left);
    PolyB direct(1);
    for (char ch : w) direct = direct * g(ch);
    CHECK(direct == left);
  }
}

TEST_CASE("product is associative and star is antimultiplicative") {
  std::vector<Mono> b = monomials_up_to(2);
  for (auto &x : b)
    for (auto &y : b) {
      PolyB px = PolyB::mono(x), py = PolyB::mono(y);
      CHECK((px * py).star() == py.star() * px.star());
      for (auto &z : b) {
        PolyB pz = PolyB::mono(z);
        CHECK((px * py) * pz == px * (py * pz));
      }
    }
}

TEST_CASE("unitarity of the fundamental matrix") {
  UnitarityReport r = unitarity_check();
  CHECK(r.pass);
  CHECK(r.entries.size() == 8);
}

TEST_CASE("coproduct and counit") {
  PolyB2 da = coproduct(g('a'));
  CHECK(da.size() == 2);
  CHECK(da[{Mono{1, 0, 0}, Mono{1, 0, 0}}] == Scalar(1));
  CHECK(da[{Mono{0, 0, 1}, Mono{0, 1, 0}}] == -Scalar::mu_pow(1));
  CHECK(g('a').counit() == Scalar(1));
  CHECK(g('c').counit().is_zero());
  for (auto &m : monomials_up_to(4)) {
    INFO(m.str());
    PolyB x = PolyB::mono(m);
    CHECK(coproduct_left_twice(x) == coproduct_right_twice(x));
    CHECK(counit_axioms(x));
  }
  // multiplicativity on a product
  PolyB x = g('a') * g('C'), y = g('c');
  CHECK(coproduct(x * y).size() > 0);
}

TEST_CASE("haar state") {
  const HaarState &h = haar();
  CHECK(h.left_invariant());
  CHECK(h.right_invariant());
  CHECK(h(PolyB(1)) == Scalar(1));
  CHECK(h(g('a')).is_zero());
  CHECK(h(g('c')).is_zero());
  CHECK(h(zeta()) == (Scalar(1) + Scalar::mu_pow(2)).inv());
  CHECK(h(g('A') * g('a')) == Scalar::mu_pow(2) / (Scalar(1) + Scalar::mu_pow(2)));
  CHECK(h(g('a') * g('A')) == (Scalar(1) + Scalar::mu_pow(2)).inv());
  PolyB z(1);
  for (int n = 0; n <= 3; ++n, z = z * zeta()) CHECK(h(z) == haar_zeta_power(n));
  // charge selection
  for (auto &[m, v] : h.values())
    if (m.charge() != 0 || m.left_charge() != 0) CHECK(v.is_zero());
  CHECK(h.csv().rfind("monomial,value", 0) == 0);
}

TEST_CASE("haar positivity") {
  for (auto mu0 : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)}) {
    INFO(mu0.get_d());
    CHECK(haar_gram_min_eig(haar(), 3, mu0) > -1e-12);
  }
}

TEST_CASE("orthogonality relations") {
  OrthogonalityReport r0 = orthogonality_check(0, haar());
  CHECK(r0.pass());
  OrthogonalityReport r1 = orthogonality_check(1, haar());
  INFO(r1.detail);
  CHECK(r1.pass());
  CHECK(r1.c(0, 0) == Scalar::mu_pow(-1));
  CHECK(r1.c(1, 1) == Scalar::mu_pow(1));
  OrthogonalityReport r2 = orthogonality_check(2, haar());
  INFO(r2.detail);
  CHECK(r2.pass());
  CHECK(r2.c(0, 0) == Scalar::mu_pow(-2));
  CHECK(r2.c(1, 1) == Scalar(1));
  CHECK(r2.c(2, 2) == Scalar::mu_pow(2));
}

TEST_CASE("peter-weyl ladder coefficients") {
  // K+ psi^{-1/2} in spin 1/2 has coefficient 1
  CHECK(PeterWeylModule::kplus_exact(1, -1) == Scalar(1));
  CHECK(PeterWeylModule::kminus_exact(1, 1) == Scalar(1));
  CHECK(PeterWeylModule::kminus_exact(3, 1) == Scalar::mu_pow(1) + Scalar::mu_pow(-1));
  for (int s2 = 0; s2 <= 9; ++s2) {
    CHECK(PeterWeylModule::kplus_sq(s2, s2).is_zero());
    CHECK(PeterWeylModule::kminus_sq(s2, -s2).is_zero());
    for (int m2 = s2; m2 >= -s2; m2 -= 2) {
      INFO("s2=" << s2 << " m2=" << m2);
      int sp = (s2 + m2) / 2, sm = (s2 - m2) / 2;
      Scalar oracle = Scalar::mu_pow(2 - 2 * sp) * (Scalar::mu_pow(2 * sm) - Scalar::mu_pow(2 * sp)) /
                      (Scalar(1) - Scalar::mu_pow(2));
      CHECK(PeterWeylModule::ladder_defect(s2, m2) == oracle);
      if (m2 > -s2) CHECK(PeterWeylModule::kplus_sq(s2, m2 - 2) == PeterWeylModule::kminus_sq(s2, m2));
      for (double mu : {0.3, 0.7, 1.0}) {
        double kp = PeterWeylModule::kplus(s2, m2, mu);
        CHECK(kp * kp == doctest::Approx(PeterWeylModule::kplus_sq(s2, m2).eval(std::sqrt(mu)).real()));
      }
    }
    // classical limit: K+ K- - K- K+ = 2m
    for (int m2 = s2; m2 >= -s2; m2 -= 2)
      CHECK(PeterWeylModule::ladder_defect(s2, m2).eval(1.0).real() == doctest::Approx(m2));
  }
}

TEST_CASE("peter-weyl weights against haar") {
  CHECK(PeterWeylModule::weight(0, 0) == Scalar(1));
  CHECK(PeterWeylModule::weight(1, 1) == haar()(g('A') * g('a')));
  CHECK(PeterWeylModule::weight(1, -1) == haar()(zeta()));
  Scalar sum;
  for (int a2 = 2; a2 >= -2; a2 -= 2) sum += PeterWeylModule::weight(2, a2) * Scalar::mu_pow(-2 * a2);
  CHECK(sum == Scalar(1));
}

TEST_CASE("peter-weyl adjoint relations") {
  PeterWeylModule pw(9);
  CHECK(pw.basis().size() == 385);
  CHECK(pw.index({1, 1, -1}) >= 0);
  CHECK(pw.index({1, 0, 1}) < 0);
  AdjointReport r = adjoint_checks(pw, {0.25, 0.5, 0.75, 1.0});
  INFO(r.detail);
  CHECK(r.pass);
  CHECK(r.wpx);
  CHECK(r.charges);
  CHECK(r.annihilate);
}
