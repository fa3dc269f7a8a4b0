#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidspin/scalar.hpp"

#include <random>

using namespace bs;

namespace {

Poly P(std::initializer_list<long> cs) {
  Poly p;
  for (long c : cs) p.c.push_back(GQ(c));
  p.trim();
  return p;
}

Scalar random_scalar(std::mt19937 &rng) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4), flip(0, 5);
  auto rp = [&](bool nonzero) {
    Poly p;
    do {
      p.c.clear();
      int d = deg(rng);
      for (int k = 0; k <= d; ++k) {
        GQ c(coef(rng));
        if (flip(rng) == 0) c.im = coef(rng);
        p.c.push_back(c);
      }
      p.trim();
    } while (nonzero && p.is_zero());
    return p;
  };
  Poly d = rp(true);
  if (d.is_monomial()) d.c[0] = d.c[0] + GQ(1);
  d.trim();
  if (d.is_zero()) d = P({1});
  return Scalar(rp(false), d);
}

} // namespace

TEST_CASE("reduced sum of fractions") {
  Scalar q = Scalar::q();
  Scalar one_minus_q = Scalar(1) - q;
  Scalar s = q / one_minus_q + q * q / one_minus_q;
  CHECK(s == q * (Scalar(1) + q) / one_minus_q);
  CHECK(s.den() == P({-1, 1}));
  CHECK(s.num() == P({0, -1, -1}));
}

TEST_CASE("polynomial division canonicalizes") {
  Scalar r(P({1, 0, 0, 0, -1}), P({1, 0, -1}));
  CHECK(r.num() == P({1, 0, 1}));
  CHECK(r.den() == P({1}));
}

TEST_CASE("inverse and identity") {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    Scalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    CHECK((a * a.inv()).is_one());
  }
  CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("q integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1).is_one());
  Scalar mu = Scalar::mu_pow(1);
  CHECK(q_int(2) == Scalar(1) + mu * mu);
  // closed form (1 - mu^{2n}) / (1 - mu^2)
  for (int n = 1; n <= 12; ++n)
    CHECK(q_int(n) == (Scalar(1) - Scalar::mu_pow(2 * n)) / (Scalar(1) - Scalar::mu_pow(2)));
  for (int n = 0; n <= 50; ++n) CHECK(q_int(n).eval(mpq_class(1)).real() == (double)n);
}

TEST_CASE("float evaluation") {
  CHECK(q_int(3).eval(mpq_class(1)).real() == 3.0);
  CHECK(Scalar::mu_pow(1).eval(mpq_class(1, 2)).real() == doctest::Approx(0.25));
  Scalar mu = Scalar::mu_pow(1), mui = Scalar::mu_pow(-1);
  Scalar x = (mu * mu - mui * mui) / (mu - mui);
  CHECK(x.eval_mu(mpq_class(1, 2)).real() == doctest::Approx(2.5));
  // removable singularity at q = 1 disappears after reduction
  Scalar r(P({1, 0, 0, 0, 0, 0, -1}), P({1, 0, -1}));
  CHECK(r.eval(mpq_class(1)).real() == 3.0);
  CHECK_THROWS_AS(Scalar(Poly{{GQ(1)}}, P({-1, 1})).eval(mpq_class(1)), PoleError);
}

TEST_CASE("float evaluation is additive and multiplicative") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int k = 0; k < 1000; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    double q0 = 0.37;
    try {
      auto ea = a.eval(q0), eb = b.eval(q0);
      auto es = (a + b).eval(q0), ep = (a * b).eval(q0);
      CHECK(std::abs(es - (ea + eb)) <= 1e-12 * std::max(1.0, std::abs(ea) + std::abs(eb)));
      CHECK(std::abs(ep - ea * eb) <= 1e-12 * std::max(1.0, std::abs(ea) * std::abs(eb)));
      ++checked;
    } catch (const PoleError &) {
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("conjugation is an involutive antiautomorphism fixing q") {
  std::mt19937 rng(11);
  CHECK(Scalar::q().conj() == Scalar::q());
  CHECK(Scalar::i().conj() == -Scalar::i());
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("string round trip") {
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    Scalar a = random_scalar(rng);
    CHECK(Scalar::parse(a.str()) == a);
  }
  CHECK(Scalar(Scalar::mu_pow(2) + Scalar(1)).inv().pretty() == "1/(1+mu^2)");
  CHECK(Scalar(Scalar::mu_pow(1) + Scalar(1)).inv().pretty() == "1/(1+mu)");
  CHECK(Scalar::mu_pow(-1).pretty() == "mu^-1");
  CHECK(Scalar::q().pretty() == "q");
}

TEST_CASE("rational input") {
  CHECK(parse_rational("1/2") == mpq_class(1, 2));
  CHECK(parse_rational("0.5") == mpq_class(1, 2));
  CHECK(parse_rational("0.75") == mpq_class(3, 4));
  CHECK(nearest_rational(3.14159265358979) == mpq_class(3126535, 995207));
  CHECK_THROWS(parse_rational("x"));
}
