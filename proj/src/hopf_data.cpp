#include "braidspin/hopf_data.hpp"

namespace bs {

Space hopf_space() { return Space::labeled({"+", "-"}); }

BraidOperator hopf_sigma(bool transposed) {
  Matrix m(4, 4);
  m(0, 0) = 1;
  m(2, 1) = Scalar::mu_pow(2);
  m(1, 2) = Scalar::mu_pow(-2);
  m(3, 3) = 1;
  return {hopf_space(), transposed ? m.transpose() : m};
}

BraidOperator hopf_tau(bool transposed) {
  Matrix m(4, 4);
  m(0, 0) = Scalar::mu_pow(-2);
  m(2, 1) = Scalar::mu_pow(2);
  m(1, 2) = Scalar::mu_pow(-2);
  m(3, 3) = Scalar::mu_pow(2);
  return {hopf_space(), transposed ? m.transpose() : m};
}

StarStructure hopf_star() {
  Matrix s(2, 2);
  s(1, 0) = Scalar::mu_pow(1);
  s(0, 1) = Scalar::mu_pow(-1);
  return {s};
}

std::vector<Scalar> hopf_two_form() { return {0, 1, -Scalar::mu_pow(2), 0}; }

Space classical_space(int d) { return Space::indexed(d, "e"); }

StarStructure trivial_star(int d) { return {Matrix::identity(d)}; }

} // namespace bs
