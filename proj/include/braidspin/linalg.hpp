#pragma once

#include "braidspin/scalar.hpp"

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace bs {

class Matrix {
public:
  Matrix() = default;
  Matrix(int r, int c) : r_(r), c_(c), a_((size_t)r * c) {}

  static Matrix identity(int n);
  static Matrix column(const std::vector<Scalar> &v);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar &operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
  const Scalar &operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }

  std::vector<Scalar> col(int j) const;
  void set_col(int j, const std::vector<Scalar> &v);
  Matrix transpose() const;
  Matrix adjoint() const;
  Matrix conj() const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  bool is_zero() const;
  size_t nnz() const;

  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const Scalar &s, const Matrix &a);
  friend bool operator==(const Matrix &a, const Matrix &b);

  Eigen::MatrixXcd eval(double q0) const;

private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

inline bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

std::vector<Scalar> apply(const Matrix &m, const std::vector<Scalar> &v);
Matrix kron(const Matrix &a, const Matrix &b);
Matrix kron_id_left(int n, const Matrix &b);  // id_n (x) b
Matrix kron_id_right(const Matrix &a, int n); // a (x) id_n
Matrix hstack(const std::vector<std::vector<Scalar>> &cols, int rows);

struct RRef {
  Matrix m;
  std::vector<int> pivots;
};
RRef rref(Matrix m);
int rank(const Matrix &m);
// kernel basis as columns of the returned matrix
Matrix kernel(const Matrix &m);
// image basis: the pivot columns of m
Matrix image(const Matrix &m, std::vector<int> *pivot_cols = nullptr);
Matrix inverse(const Matrix &m);
// left inverse L with L*b = id for b of full column rank
Matrix left_inverse(const Matrix &b);
// true iff span(a) == span(b) (columns)
bool same_span(const Matrix &a, const Matrix &b);
bool contains_span(const Matrix &big, const Matrix &small);

struct Space {
  std::vector<std::string> tags;
  int dim() const { return (int)tags.size(); }
  static Space labeled(const std::vector<std::string> &t) { return Space{t}; }
  static Space indexed(int n, const std::string &prefix = "e");
};

Space tensor_space(const Space &a, const Space &b);
Space tensor_power(const Space &v, int n);

struct Operator {
  Space domain, codomain;
  Matrix m;
  Operator compose(const Operator &rhs) const; // this * rhs
  std::string to_json() const;
  static Operator from_json(const std::string &s);
};

Operator tensor(const Operator &a, const Operator &b);

struct KerIm {
  Matrix kernel, image;
};
KerIm kernel_image(const Operator &a);

// ascending real eigenvalues of a hermitian float evaluation
std::vector<double> eig_sym_float(const Matrix &a, double q0, double herm_tol = 1e-10);
std::vector<double> eig_sym_float(const Operator &a, const mpq_class &q0);

struct PsdReport {
  bool pass = true;
  std::vector<double> sample_mu;
  std::vector<double> min_eig;
};
// samples are values of mu; the evaluation point is q0 = sqrt(mu)
PsdReport psd_check(const Matrix &a, const std::vector<mpq_class> &sample_mu, double tol = 1e-10);

// smallest eigenvalue of a hermitian matrix after symmetric diagonal rescaling
double min_eig_scaled(const Eigen::MatrixXcd &h);

} // namespace bs
