#include "braidspin/linalg.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>

namespace bs {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar> &v) {
  Matrix m((int)v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m((int)i, 0) = v[i];
  return m;
}

std::vector<Scalar> Matrix::col(int j) const {
  std::vector<Scalar> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_col(int j, const std::vector<Scalar> &v) {
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t(r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) t.a_[k] = a_[k].conj();
  return t;
}

Matrix Matrix::adjoint() const { return transpose().conj(); }

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

bool Matrix::is_zero() const {
  for (auto &x : a_)
    if (!x.is_zero()) return false;
  return true;
}

size_t Matrix::nnz() const {
  size_t n = 0;
  for (auto &x : a_) n += !x.is_zero();
  return n;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar &x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Scalar &y = b(k, j);
        if (y.is_zero()) continue;
        r(i, j) += x * y;
      }
    }
  return r;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in sum");
  Matrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k)
    if (!b.a_[k].is_zero()) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch in difference");
  Matrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k)
    if (!b.a_[k].is_zero()) r.a_[k] -= b.a_[k];
  return r;
}

Matrix operator*(const Scalar &s, const Matrix &a) {
  Matrix r = a;
  for (auto &x : r.a_)
    if (!x.is_zero()) x *= s;
  return r;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

Eigen::MatrixXcd Matrix::eval(double q0) const {
  Eigen::MatrixXcd e(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) e(i, j) = (*this)(i, j).eval(q0);
  return e;
}

std::vector<Scalar> apply(const Matrix &m, const std::vector<Scalar> &v) {
  std::vector<Scalar> r(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

Matrix kron_id_left(int n, const Matrix &b) { return kron(Matrix::identity(n), b); }
Matrix kron_id_right(const Matrix &a, int n) { return kron(a, Matrix::identity(n)); }

Matrix hstack(const std::vector<std::vector<Scalar>> &cols, int rows) {
  Matrix m(rows, (int)cols.size());
  for (size_t j = 0; j < cols.size(); ++j) m.set_col((int)j, cols[j]);
  return m;
}

RRef rref(Matrix m) {
  RRef out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int best = -1;
    size_t bw = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      size_t w = m(i, c).weight();
      if (best < 0 || w < bw) { best = i; bw = w; }
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    Scalar pinv = m(r, c).inv();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= pinv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

int rank(const Matrix &m) { return (int)rref(m).pivots.size(); }

Matrix kernel(const Matrix &m) {
  RRef rr = rref(m);
  std::vector<bool> piv(m.cols(), false);
  for (int p : rr.pivots) piv[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (piv[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (size_t k = 0; k < rr.pivots.size(); ++k)
      if (!rr.m((int)k, f).is_zero()) v[rr.pivots[k]] = -rr.m((int)k, f);
    basis.push_back(std::move(v));
  }
  return hstack(basis, m.cols());
}

Matrix image(const Matrix &m, std::vector<int> *pivot_cols) {
  RRef rr = rref(m);
  std::vector<std::vector<Scalar>> basis;
  for (int p : rr.pivots) basis.push_back(m.col(p));
  if (pivot_cols) *pivot_cols = rr.pivots;
  return hstack(basis, m.rows());
}

Matrix inverse(const Matrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  RRef rr = rref(aug);
  if ((int)rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  return rr.m.block(0, n, n, n);
}

Matrix left_inverse(const Matrix &b) {
  // pick independent rows, invert that square block
  RRef rr = rref(b.transpose());
  if ((int)rr.pivots.size() != b.cols()) throw std::domain_error("columns not independent");
  Matrix sq(b.cols(), b.cols());
  for (int k = 0; k < b.cols(); ++k)
    for (int j = 0; j < b.cols(); ++j) sq(k, j) = b(rr.pivots[k], j);
  Matrix inv = inverse(sq);
  Matrix L(b.cols(), b.rows());
  for (int i = 0; i < b.cols(); ++i)
    for (int k = 0; k < b.cols(); ++k) L(i, rr.pivots[k]) = inv(i, k);
  return L;
}

bool contains_span(const Matrix &big, const Matrix &small) {
  if (small.cols() == 0) return true;
  if (big.cols() == 0) return small.is_zero();
  Matrix both(big.rows(), big.cols() + small.cols());
  for (int i = 0; i < big.rows(); ++i) {
    for (int j = 0; j < big.cols(); ++j) both(i, j) = big(i, j);
    for (int j = 0; j < small.cols(); ++j) both(i, big.cols() + j) = small(i, j);
  }
  return rank(both) == rank(big);
}

bool same_span(const Matrix &a, const Matrix &b) {
  return rank(a) == rank(b) && contains_span(a, b);
}

Space Space::indexed(int n, const std::string &prefix) {
  Space s;
  for (int i = 0; i < n; ++i) s.tags.push_back(prefix + std::to_string(i));
  return s;
}

Space tensor_space(const Space &a, const Space &b) {
  Space s;
  for (auto &x : a.tags)
    for (auto &y : b.tags) s.tags.push_back(x + y);
  return s;
}

Space tensor_power(const Space &v, int n) {
  Space s{{""}};
  for (int k = 0; k < n; ++k) s = tensor_space(s, v);
  return s;
}

Operator Operator::compose(const Operator &rhs) const {
  if (rhs.codomain.tags != domain.tags) throw std::invalid_argument("operator spaces do not match");
  return Operator{rhs.domain, codomain, m * rhs.m};
}

std::string Operator::to_json() const {
  nlohmann::json j;
  j["domain"] = domain.tags;
  j["codomain"] = codomain.tags;
  nlohmann::json e = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) e.push_back({r, c, m(r, c).str()});
  j["entries"] = e;
  return j.dump();
}

Operator Operator::from_json(const std::string &s) {
  auto j = nlohmann::json::parse(s);
  Operator op;
  op.domain.tags = j.at("domain").get<std::vector<std::string>>();
  op.codomain.tags = j.at("codomain").get<std::vector<std::string>>();
  op.m = Matrix(op.codomain.dim(), op.domain.dim());
  for (auto &e : j.at("entries")) op.m(e[0].get<int>(), e[1].get<int>()) = Scalar::parse(e[2].get<std::string>());
  return op;
}

Operator tensor(const Operator &a, const Operator &b) {
  return Operator{tensor_space(a.domain, b.domain), tensor_space(a.codomain, b.codomain), kron(a.m, b.m)};
}

KerIm kernel_image(const Operator &a) { return KerIm{kernel(a.m), image(a.m)}; }

std::vector<double> eig_sym_float(const Matrix &a, double q0, double herm_tol) {
  Eigen::MatrixXcd e = a.eval(q0);
  double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
  if ((e - e.adjoint()).cwiseAbs().maxCoeff() > herm_tol * scale)
    throw std::domain_error("matrix is not hermitian at the evaluation point");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + e.rows());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<double> eig_sym_float(const Operator &a, const mpq_class &q0) {
  return eig_sym_float(a.m, q0.get_d());
}

double min_eig_scaled(const Eigen::MatrixXcd &h) {
  int n = (int)h.rows();
  if (n == 0) return 0;
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) {
    double x = std::abs(h(i, i));
    d(i) = x > 0 ? 1.0 / std::sqrt(x) : 1.0;
  }
  Eigen::MatrixXcd s = d.asDiagonal() * h * d.asDiagonal();
  s = 0.5 * (s + s.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PsdReport psd_check(const Matrix &a, const std::vector<mpq_class> &sample_mu, double tol) {
  PsdReport rep;
  for (auto &mu : sample_mu) {
    double q0 = std::sqrt(mu.get_d());
    auto ev = eig_sym_float(a, q0);
    double mn = ev.empty() ? 0 : ev.front();
    rep.sample_mu.push_back(mu.get_d());
    rep.min_eig.push_back(mn);
    if (mn < -tol) rep.pass = false;
  }
  return rep;
}

} // namespace bs
