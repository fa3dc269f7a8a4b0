#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidspin/exterior_clifford.hpp"

#include <algorithm>
#include <random>

using namespace bs;

static const std::vector<mpq_class> kMu = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), 1};

static void require_all(const SuiteReport &r) {
  for (auto &p : r.items) {
    INFO(p.name << " " << p.detail);
    CHECK(p.pass);
  }
}

static const ExteriorAlgebra &hopf() {
  static ExteriorAlgebra e(QuantumMetric::hopf());
  return e;
}

static SigmaElem G(int k = 1, const Scalar &c = 1) { return SigmaElem::gen(k, c); }

TEST_CASE("twisted solver") {
  // G^2 c(mu^2 G) = mu^4 G^3 + G^2
  TwistedSystem sys;
  sys.a = {{G(2)}};
  sys.t = {{Scalar::mu_pow(2)}};
  sys.r = {G(3, Scalar::mu_pow(4)) + G(2)};
  auto sol = solve_twisted(sys);
  REQUIRE(sol);
  CHECK((*sol)[0] == G(1, Scalar::mu_pow(2)) + SigmaElem(1));
  sys.a = {{SigmaElem()}};
  CHECK_FALSE(solve_twisted(sys));
}

TEST_CASE("hopf exterior grades and relations") {
  const auto &e = hopf();
  CHECK(e.dims() == std::vector<int>{1, 2, 1});
  CHECK(e.top() == 2);
  auto p = e.basis_elem(1, 0), m = e.basis_elem(1, 1);
  CHECK(e.wedge(p, p).is_zero());
  CHECK(e.wedge(m, m).is_zero());
  CHECK(e.wedge(p, m) == mul_right(e.wedge(m, p), SigmaElem(-Scalar::mu_pow(2))));
  CHECK_FALSE(e.wedge(p, m).is_zero());
  // Sigma commutation through the generators
  CHECK(e.wedge(e.sigma(G()), p) == e.wedge(p, e.sigma(G(1, Scalar::mu_pow(-2)))));
  CHECK(e.wedge(e.sigma(G()), m) == e.wedge(m, e.sigma(G(1, Scalar::mu_pow(2)))));
  CHECK(e.weight(2, 0).is_one());
}

TEST_CASE("hopf star and volume") {
  const auto &e = hopf();
  auto p = e.basis_elem(1, 0), m = e.basis_elem(1, 1);
  CHECK(e.star(p) == e.basis_elem(1, 1, Scalar::mu_pow(1)));
  CHECK(e.star(m) == e.basis_elem(1, 0, Scalar::mu_pow(-1)));
  CHECK(e.star(e.wedge(p, m)) == e.wedge(p, m));
  CHECK(e.graded_star(e.wedge(p, m)) == mul_right(e.wedge(p, m), SigmaElem(-1)));
  CHECK(e.volume() == e.wedge(p, m));
  CHECK(e.star(e.volume()) == e.volume());
  CHECK(e.j(e.unit(), e.volume()) == SigmaElem(1));
  CHECK(e.j(p, m) == SigmaElem(1));
  CHECK(e.j(m, p) == SigmaElem(-Scalar::mu_pow(-2)));
  CHECK(e.S(G()) == G());
}

TEST_CASE("hopf hodge values") {
  const auto &e = hopf();
  auto H = [&](const ExtElem &x) { return e.apply(e.hodge(), x); };
  auto p = e.basis_elem(1, 0), m = e.basis_elem(1, 1);
  CHECK(H(e.unit()) == e.volume());
  CHECK(H(p) == e.basis_elem(1, 0, -G()));
  CHECK(H(m) == e.basis_elem(1, 1, G()));
  CHECK(H(e.volume()) == e.sigma(G(2)));
  auto L = [&](const ExtElem &x) { return e.apply(e.lozenge(), x); };
  CHECK(L(p) == e.basis_elem(1, 0, Scalar::mu_pow(-2)));
  CHECK(L(m) == e.basis_elem(1, 1, Scalar::mu_pow(2)));
  CHECK(L(e.unit()) == e.unit());
  CHECK(L(e.volume()) == e.volume());
  Matrix t = e.T();
  CHECK(t(0, 0) == Scalar::mu_pow(-2));
  CHECK(t(1, 1) == Scalar::mu_pow(2));
  CHECK(t(0, 1).is_zero());
  CHECK(t(1, 0).is_zero());
  std::string csv = hodge_table_csv(e, std::nullopt);
  CHECK(csv.find("grade,basis_in,basis_out,coefficient") == 0);
  CHECK(csv.find("2,+^-,1,\"(1)*G^2\"") != std::string::npos);
  std::string num = hodge_table_csv(e, mpq_class(1, 2));
  CHECK(num.find("1,+,+,(-1)*G^1") != std::string::npos);
}

TEST_CASE("hopf cliffordization values") {
  const auto &e = hopf();
  auto p = e.basis_elem(1, 0), m = e.basis_elem(1, 1);
  ExtElem b = e.wedge(p, m);
  CHECK(e.clifford(p, m) == b + e.sigma(G()));
  CHECK(e.clifford(m, p) ==
        mul_right(b, SigmaElem(-Scalar::mu_pow(-2))) + e.sigma(G(1, Scalar::mu_pow(-2))));
  // generating relation and classical degeneration
  ExtElem rel = e.clifford(p, m) + mul_right(e.clifford(m, p), SigmaElem(Scalar::mu_pow(2)));
  CHECK(rel == e.sigma(G(1, 2)));
  ExtElem cl = e.clifford(p, m) + e.clifford(m, p) - e.sigma(G(1, 2));
  for (auto &grade : cl.g)
    for (auto &c : grade)
      for (auto &[k, s] : c.terms()) CHECK(std::abs(s.eval(1.0)) < 1e-14);
  CHECK(e.clifford(p, p).is_zero());
  CHECK(e.clifford(m, m).is_zero());
}

TEST_CASE("hopf coproduct") {
  const auto &e = hopf();
  auto terms = e.coproduct_basis(2, 0);
  // 1 (x) w + two middle terms + w (x) 1
  CHECK(terms.size() == 4);
  int outer = 0;
  for (auto &t : terms)
    if (t.gi != 1) {
      CHECK(t.c.is_one());
      ++outer;
    }
  CHECK(outer == 2);
}

TEST_CASE("hopf suites") {
  const auto &e = hopf();
  CircleAction c = CircleAction::hopf();
  for (auto r : {Realization::spinor(), Realization::l2z()}) {
    require_all(exterior_report(e, c, kMu, r));
    require_all(clifford_report(e, kMu, r));
  }
  SuiteReport h = hodge_property_suite(e, c);
  require_all(h);
  CHECK(h.find("hodge circle covariance")->detail == "lambda(U) = mu^-2");
}

TEST_CASE("random sesquilinearity of the wedge scalar product") {
  const auto &e = hopf();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), pw(-2, 2);
  auto rnd = [&] {
    ExtElem x = e.zero();
    for (int n = 0; n <= e.top(); ++n)
      for (int u = 0; u < e.dim(n); ++u)
        x.g[n][u] = G(pw(rng), Scalar(coef(rng)) * Scalar::mu_pow(pw(rng))) + SigmaElem(coef(rng));
    return x;
  };
  for (int it = 0; it < 20; ++it) {
    ExtElem x = rnd(), y = rnd(), z = rnd();
    CHECK(e.inner(x, y).conj() == e.inner(y, x));
    CHECK(e.inner(x, y + z) == e.inner(x, y) + e.inner(x, z));
    CHECK(e.counit(e.clifford(e.star(x), y)) == e.inner(x, y));
    CHECK(e.star(e.clifford(x, y)) == e.clifford(e.star(y), e.star(x)));
    CHECK(e.clifford(e.clifford(x, y), z) == e.clifford(x, e.clifford(y, z)));
  }
}

TEST_CASE("spinor representations") {
  QuantumMetric g = QuantumMetric::hopf();
  for (int k = -2; k <= 2; ++k) {
    INFO("k=" << k);
    require_all(spinor_rep_check(SpinorRep::hopf(k), g, {2, -2}));
  }
  SuiteReport bad = spinor_rep_check(SpinorRep::upper_triangular(), g, {2, -2});
  CHECK_FALSE(bad.all_pass());
  CHECK_FALSE(bad.find("clifford relations")->pass);
}

TEST_CASE("classical exterior algebras") {
  for (int d : {2, 3}) {
    INFO("d=" << d);
    ExteriorAlgebra e(QuantumMetric::classical(d));
    std::vector<int> dims = e.dims();
    REQUIRE((int)dims.size() == d + 1);
    CHECK(dims[1] == d);
    CHECK(dims[d - 1] == d);
    CircleAction c = CircleAction::trivial(d);
    require_all(exterior_report(e, c, {mpq_class(1)}, Realization::classical()));
    require_all(clifford_report(e, {mpq_class(1)}, Realization::classical()));
    require_all(hodge_property_suite(e, c));
    // oracle: Riemannian hodge of ordered basis forms, times i (-1)^{k(k-1)/2}
    // for the ungraded involution and the imaginary volume it forces
    CHECK(e.volume() == e.basis_elem(d, 0, Scalar::i()));
    auto indices = [&](int k, int u) {
      if (k == 0) return std::vector<int>();
      std::vector<int> r;
      std::string l = e.label(k, u);
      for (char ch : l)
        if (ch >= '0' && ch <= '9') r.push_back(ch - '0');
      return r;
    };
    for (int k = 0; k <= d; ++k)
      for (int u = 0; u < e.dim(k); ++u) {
        INFO("k=" << k << " u=" << u);
        std::vector<int> in = indices(k, u), all = in;
        std::vector<int> comp;
        for (int i = 0; i < d; ++i)
          if (std::find(in.begin(), in.end(), i) == in.end()) comp.push_back(i);
        all.insert(all.end(), comp.begin(), comp.end());
        int inv = 0;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) inv += all[i] > all[j];
        int sign = (inv + k * (k - 1) / 2) % 2 ? -1 : 1;
        int v = -1;
        for (int w = 0; w < e.dim(d - k); ++w)
          if (indices(d - k, w) == comp) v = w;
        REQUIRE(v >= 0);
        CHECK(e.apply(e.hodge(), e.basis_elem(k, u)) == e.basis_elem(d - k, v, Scalar(sign) * Scalar::i()));
      }
  }
}
