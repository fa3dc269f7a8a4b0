#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidspin/quantum_metric.hpp"

#include <random>

using namespace bs;

static const std::vector<mpq_class> kMu = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), 1};

static void require_all(const AxiomReport &r) {
  for (auto &p : r.items) {
    INFO(p.name << " " << p.detail);
    CHECK(p.pass);
  }
}

TEST_CASE("sigma algebra arithmetic") {
  SigmaElem g = SigmaElem::gen(1);
  SigmaElem a = g + SigmaElem(Scalar::mu_pow(1));
  CHECK((a * a - g * g - 2 * SigmaElem(Scalar::mu_pow(1)) * g).str() == SigmaElem(Scalar::mu_pow(2)).str());
  CHECK(g * g.inv() == SigmaElem(1));
  CHECK(g.scale_gen(Scalar::mu_pow(2)) == SigmaElem::gen(1, Scalar::mu_pow(2)));
  CHECK(g.conj() == g);
}

TEST_CASE("hopf twist") {
  QuantumMetric g = QuantumMetric::hopf();
  NuTwist nt = build_nu_twist(g);
  REQUIRE(nt.consistent);
  CHECK(nt.scale[0] == Scalar::mu_pow(2));
  CHECK(nt.scale[1] == Scalar::mu_pow(-2));
  CHECK(twist_star_compatible(g));
  NuTwist c = build_nu_twist(QuantumMetric::classical());
  CHECK(c.consistent);
  CHECK(c.scale[0].is_one());
  CHECK(c.scale[1].is_one());
}

TEST_CASE("scalar product values") {
  QuantumMetric g = QuantumMetric::hopf();
  SigmaTensor ep{1, {1, SigmaElem()}}, em{1, {SigmaElem(), 1}};
  SigmaElem v = sigma_scalar_product(g, ep, ep);
  CHECK(v == SigmaElem::gen(1, Scalar::mu_pow(-1)));
  // spinor realization: (1/2) diag(mu^-1, mu)
  Realization sp = Realization::spinor();
  double q0 = std::sqrt(0.5);
  CHECK(v.eval(sp.characters[0], q0).real() == doctest::Approx(0.5 / 0.5));
  CHECK(v.eval(sp.characters[1], q0).real() == doctest::Approx(0.5 * 0.5));
  CHECK(sigma_scalar_product(g, em, em) == SigmaElem::gen(1, Scalar::mu_pow(-1)));
  CHECK(sigma_scalar_product(g, ep, em).is_zero());
  SigmaTensor t2{2, std::vector<SigmaElem>(4)};
  CHECK(sigma_scalar_product(g, ep, t2).is_zero());
  SMatrix g2 = gram_n(g, 2);
  CHECK(g2(1, 1) == SigmaElem::gen(2));
  CHECK(g2(2, 2) == SigmaElem::gen(2, Scalar::mu_pow(-4)));
  CHECK(g2 == g2.adjoint());
}

TEST_CASE("scalar product identities") {
  QuantumMetric g = QuantumMetric::hopf();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), pw(-2, 2);
  auto rnd = [&]() {
    SigmaElem e;
    for (int t = 0; t < 2; ++t) e += SigmaElem::gen(pw(rng), Scalar(coef(rng)) * Scalar::mu_pow(pw(rng)));
    return e;
  };
  for (int trial = 0; trial < 20; ++trial) {
    for (int n = 1; n <= 2; ++n) {
      int dim = ipow(2, n);
      SigmaTensor psi{n, {}}, xi{n, {}};
      for (int k = 0; k < dim; ++k) {
        psi.c.push_back(rnd());
        xi.c.push_back(rnd());
      }
      SigmaElem a = rnd();
      CHECK(sigma_scalar_product(g, psi, xi).conj() == sigma_scalar_product(g, xi, psi));
      SigmaTensor xa = xi;
      for (auto &c : xa.c) c = c * a;
      CHECK(sigma_scalar_product(g, psi, xa) == sigma_scalar_product(g, psi, xi) * a);
      // <psi, xi> = g(psi^*, xi) with the star of a tensor over V_Sigma
      SigmaTensor ps = star_tensor(g, psi);
      SigmaTensor pss = star_tensor(g, ps);
      for (int k = 0; k < dim; ++k) CHECK(pss.c[k] == psi.c[k]);
    }
  }
}

TEST_CASE("positivity of random vectors at mu = 1/2") {
  QuantumMetric g = QuantumMetric::hopf();
  Realization sp = Realization::spinor();
  std::mt19937 rng(3);
  std::normal_distribution<double> nd;
  double q0 = std::sqrt(0.5);
  for (int n = 1; n <= 2; ++n) {
    Eigen::MatrixXcd gr = gram_n(g, n).eval(sp.characters[1], q0);
    for (int t = 0; t < 50; ++t) {
      Eigen::VectorXcd x(gr.rows());
      for (int i = 0; i < x.size(); ++i) x(i) = {nd(rng), nd(rng)};
      CHECK((x.adjoint() * gr * x)(0, 0).real() > 0);
    }
  }
}

TEST_CASE("axioms") {
  require_all(axiom_report(QuantumMetric::hopf(), Realization::spinor(), kMu));
  require_all(axiom_report(QuantumMetric::hopf(), Realization::l2z(16), kMu));
  require_all(axiom_report(QuantumMetric::classical(), Realization::classical(), kMu));
  require_all(axiom_report(QuantumMetric::classical(3), Realization::classical(), kMu, 4));
}

TEST_CASE("hermiticity of sigma") {
  CHECK(hermiticity_of_sigma(QuantumMetric::hopf()));
  CHECK(hermiticity_of_sigma(QuantumMetric::classical()));
  // flip stays hermitian for any form under the nested extension
  QuantumMetric ns = QuantumMetric::classical();
  ns.g(0, 1) = 1;
  CHECK(hermiticity_of_sigma(ns));
  QuantumMetric bad = QuantumMetric::classical();
  bad.sigma = QuantumMetric::hopf().sigma;
  CHECK_FALSE(hermiticity_of_sigma(bad));
  // the plain matrix of sigma is not symmetric; only the Gram-weighted one is hermitian
  Matrix s = QuantumMetric::hopf().sigma.m;
  CHECK(s != s.adjoint());
}

TEST_CASE("funny identity and c_kappa") {
  QuantumMetric g = QuantumMetric::hopf();
  CHECK(funny_identity(g));
  Matrix c = c_kappa(g.star);
  CHECK(c(0, 0) == Scalar::mu_pow(2));
  CHECK(c(1, 1) == Scalar::mu_pow(-2));
  CHECK(c(0, 1).is_zero());
  CHECK(c(0, 0) + c(1, 1) == inverse(c)(0, 0) + inverse(c)(1, 1));
  // *C* = C^-1
  Matrix s = g.star.s;
  CHECK(s * c.conj() * s.conj() == inverse(c));
}

TEST_CASE("transposed sigma breaks braided symmetry") {
  QuantumMetric g = QuantumMetric::hopf();
  g.sigma.m = g.sigma.m.transpose();
  AxiomReport r = axiom_report(g, Realization::spinor(), {mpq_class(1, 2)}, 2);
  CHECK_FALSE(r.find("(i) braided symmetry")->pass);
}
