#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidspin/linalg.hpp"

#include <random>

using namespace bs;

namespace {

Matrix rand_mat(std::mt19937 &rng, int r, int c) {
  std::uniform_int_distribution<int> d(-3, 3), e(-2, 2);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Scalar(d(rng)) * Scalar::q_pow(e(rng)) + Scalar(d(rng));
  return m;
}

} // namespace

TEST_CASE("tensor of identities") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
}

TEST_CASE("tensor respects composition") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix A = rand_mat(rng, 2, 2), B = rand_mat(rng, 2, 2), C = rand_mat(rng, 2, 2), D = rand_mat(rng, 2, 2);
    CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
  }
}

TEST_CASE("kernel and image") {
  Matrix z(3, 3);
  KerIm ki = kernel_image(Operator{Space::indexed(3), Space::indexed(3), z});
  CHECK(ki.kernel.cols() == 3);
  CHECK(ki.image.cols() == 0);
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    Matrix a = rand_mat(rng, 3, 2), b = rand_mat(rng, 2, 4);
    Matrix m = a * b;
    Matrix k = kernel(m);
    CHECK(k.cols() + rank(m) == 4);
    CHECK((m * k).is_zero());
  }
}

TEST_CASE("inverse and left inverse") {
  std::mt19937 rng(13);
  Matrix a = rand_mat(rng, 3, 3);
  CHECK(a * inverse(a) == Matrix::identity(3));
  Matrix b = rand_mat(rng, 4, 2);
  CHECK(left_inverse(b) * b == Matrix::identity(2));
}

TEST_CASE("float eigenvalues") {
  auto ev = eig_sym_float(Matrix::identity(3), 0.5);
  CHECK(ev.size() == 3);
  for (double x : ev) CHECK(x == doctest::Approx(1.0));
  Matrix m(2, 2);
  m(0, 1) = m(1, 0) = Scalar::mu_pow(1);
  ev = eig_sym_float(m, std::sqrt(0.5));
  CHECK(ev[0] == doctest::Approx(-0.5));
  CHECK(ev[1] == doctest::Approx(0.5));
  Matrix nh(2, 2);
  nh(0, 1) = Scalar(1);
  CHECK_THROWS(eig_sym_float(nh, 0.5));
}

TEST_CASE("psd check") {
  std::vector<mpq_class> mus = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)};
  CHECK(psd_check(Matrix::identity(3), mus).pass);
  CHECK_FALSE(psd_check(Scalar(-1) * Matrix::identity(3), mus).pass);
}

TEST_CASE("operator json round trip") {
  Matrix m(2, 2);
  m(0, 1) = Scalar::mu_pow(-1);
  m(1, 0) = Scalar::i();
  Operator op{Space::labeled({"+", "-"}), Space::labeled({"+", "-"}), m};
  Operator back = Operator::from_json(op.to_json());
  CHECK(back.m == m);
  CHECK(back.domain.tags == op.domain.tags);
  Operator t = tensor(op, op);
  CHECK(t.domain.tags[1] == "+-");
}
