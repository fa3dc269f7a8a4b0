#include "braidspin/braiding.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bs {

BraidOperator BraidOperator::flip(const Space &v) {
  int d = v.dim();
  Matrix m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1;
  return {v, m};
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Matrix tensor_power_of(const Matrix &a, int n) {
  Matrix r = Matrix::identity(1);
  for (int k = 0; k < n; ++k) r = kron(r, a);
  return r;
}

Matrix StarStructure::on_tensors(int n) const {
  int d = this->d();
  int dim = ipow(d, n);
  Matrix sn = tensor_power_of(s, n);
  // reverse tensor order
  Matrix rev(dim, dim);
  for (int idx = 0; idx < dim; ++idx) {
    int x = idx, r = 0;
    for (int k = 0; k < n; ++k) {
      r = r * d + x % d;
      x /= d;
    }
    rev(r, idx) = 1;
  }
  return rev * sn;
}

std::vector<Scalar> StarStructure::apply(const std::vector<Scalar> &psi, int n) const {
  std::vector<Scalar> c(psi.size());
  for (size_t i = 0; i < psi.size(); ++i) c[i] = psi[i].conj();
  return bs::apply(on_tensors(n), c);
}

Matrix StarStructure::conjugate_op(const Matrix &x, int n) const {
  Matrix m = on_tensors(n);
  return m * x.conj() * m.conj();
}

Matrix lift_adjacent(const BraidOperator &b, int n, int k) {
  if (k < 0 || k + 2 > n) throw std::invalid_argument("adjacent position out of range");
  int d = b.d();
  return kron_id_right(kron_id_left(ipow(d, k), b.m), ipow(d, n - k - 2));
}

int inversions(const Perm &p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

static bool is_identity(const Perm &p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != (int)i) return false;
  return true;
}

// composition p o s_k swaps positions k, k+1
static void rec_words(const Perm &p, std::vector<int> &suffix, std::vector<std::vector<int>> &out) {
  if (is_identity(p)) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (p[k] > p[k + 1]) {
      Perm q = p;
      std::swap(q[k], q[k + 1]);
      suffix.push_back((int)k);
      rec_words(q, suffix, out);
      suffix.pop_back();
    }
}

std::vector<std::vector<int>> reduced_words(const Perm &p) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  rec_words(p, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

// smallest k with value k+1 placed before value k
static int first_left_descent(const Perm &p) {
  std::vector<int> pos(p.size());
  for (size_t i = 0; i < p.size(); ++i) pos[p[i]] = (int)i;
  for (size_t k = 0; k + 1 < p.size(); ++k)
    if (pos[k + 1] < pos[k]) return (int)k;
  return -1;
}

static Perm left_mul(const Perm &p, int k) {
  Perm q = p;
  for (auto &v : q)
    if (v == k) v = k + 1;
    else if (v == k + 1) v = k;
  return q;
}

std::vector<int> lexmin_reduced_word(const Perm &p) {
  std::vector<int> w;
  Perm q = p;
  for (int k; (k = first_left_descent(q)) >= 0;) {
    w.push_back(k);
    q = left_mul(q, k);
  }
  return w;
}

Matrix lift_word(const BraidOperator &b, int n, const std::vector<int> &word) {
  Matrix r = Matrix::identity(ipow(b.d(), n));
  for (int k : word) r = r * lift_adjacent(b, n, k);
  return r;
}

Matrix lift_permutation(const BraidOperator &b, const Perm &p) {
  return lift_word(b, (int)p.size(), lexmin_reduced_word(p));
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool check_yang_baxter(const BraidOperator &b) {
  Matrix b1 = lift_adjacent(b, 3, 0), b2 = lift_adjacent(b, 3, 1);
  return b1 * b2 * b1 == b2 * b1 * b2;
}

bool is_invertible(const BraidOperator &b) { return rank(b.m) == b.m.rows(); }

Matrix antisymmetrizer(const BraidOperator &b, int n) {
  int dim = ipow(b.d(), n);
  if (n <= 1) return Matrix::identity(dim);
  std::vector<Matrix> adj;
  for (int k = 0; k + 1 < n; ++k) adj.push_back(lift_adjacent(b, n, k));
  // lift(p) = B_k lift(s_k p) along the lexicographically minimal word
  std::vector<Perm> perms = all_perms(n);
  std::sort(perms.begin(), perms.end(),
            [](const Perm &x, const Perm &y) { return inversions(x) < inversions(y); });
  std::map<Perm, Matrix> lift;
  Matrix sum(dim, dim);
  for (const auto &p : perms) {
    int k = first_left_descent(p);
    Matrix m = k < 0 ? Matrix::identity(dim) : adj[k] * lift.at(left_mul(p, k));
    if (inversions(p) % 2) sum = sum - m;
    else sum = sum + m;
    lift.emplace(p, std::move(m));
  }
  return sum;
}

// sum_{k=1}^{n} (-1)^(k-1) B_{k-1} ... B_1 on V^{(x)n} (0-based factors B_{k-2} ... B_0),
// and its word-reversed partner
static void y_pair(const BraidOperator &b, int n, Matrix &y, Matrix &ydag) {
  int dim = ipow(b.d(), n);
  y = Matrix(dim, dim);
  ydag = Matrix(dim, dim);
  Matrix fwd = Matrix::identity(dim), bwd = Matrix::identity(dim);
  for (int k = 1; k <= n; ++k) {
    if (k >= 2) {
      Matrix bk = lift_adjacent(b, n, k - 2);
      fwd = bk * fwd;
      bwd = bwd * bk;
    }
    if ((k - 1) % 2) {
      y = y - fwd;
      ydag = ydag - bwd;
    } else {
      y = y + fwd;
      ydag = ydag + bwd;
    }
  }
}

Matrix antisymmetrizer_recursive(const BraidOperator &b, int n) {
  int d = b.d();
  Matrix prev = Matrix::identity(1), cur = Matrix::identity(d); // A^0, A^1
  for (int m = 1; m < n; ++m) {
    Matrix y, ydag;
    y_pair(b, m, y, ydag);
    Matrix next = kron_id_left(d, cur) -
                  kron_id_left(d, y) * kron(b.m, prev) * kron_id_left(d, ydag);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == 0 ? prev : cur;
}

Antisymmetrizers::Antisymmetrizers(const BraidOperator &b, int max_degree) {
  for (int n = 0; n <= max_degree; ++n) a_.push_back(antisymmetrizer(b, n));
}

static Matrix vstack(const std::vector<Matrix> &ms) {
  int rows = 0, cols = ms.empty() ? 0 : ms[0].cols();
  for (auto &m : ms) rows += m.rows();
  Matrix r(rows, cols);
  int off = 0;
  for (auto &m : ms) {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < cols; ++j) r(off + i, j) = m(i, j);
    off += m.rows();
  }
  return r;
}

Matrix tau_antisymmetric(const BraidOperator &tau, int n) {
  int dim = ipow(tau.d(), n);
  if (n < 2) return Matrix::identity(dim);
  std::vector<Matrix> blocks;
  Matrix ip = Matrix::identity(tau.m.rows()) + tau.m;
  BraidOperator tp{tau.space, ip};
  for (int k = 0; k + 1 < n; ++k) blocks.push_back(lift_adjacent(tp, n, k));
  return kernel(vstack(blocks));
}

static Matrix ker_sum_im_tau(const BraidOperator &tau, int n) {
  Matrix ip = Matrix::identity(tau.m.rows()) + tau.m;
  BraidOperator tp{tau.space, ip};
  std::vector<std::vector<Scalar>> cols;
  for (int k = 0; k + 1 < n; ++k) {
    Matrix im = image(lift_adjacent(tp, n, k));
    for (int j = 0; j < im.cols(); ++j) cols.push_back(im.col(j));
  }
  int dim = ipow(tau.d(), n);
  if (cols.empty()) return Matrix(dim, 0);
  return image(hstack(cols, dim));
}

bool PairReport::all_pass() const {
  for (auto &p : items)
    if (!p.pass) return false;
  return true;
}

std::string PairReport::to_json() const {
  nlohmann::ordered_json j;
  for (auto &p : items) {
    j[p.name] = p.pass;
    if (!p.detail.empty()) j["details"][p.name] = p.detail;
  }
  return j.dump(2);
}

PairReport coupled_pair_report(const CoupledPair &p, const std::vector<mpq_class> &sample_mu,
                               int max_n) {
  PairReport rep;
  auto add = [&](std::string name, bool ok, std::string det = "") {
    rep.items.push_back({std::move(name), ok, std::move(det)});
  };
  const Matrix &s = p.sigma.m, &t = p.tau.m;
  int d = p.sigma.d();
  Matrix id2 = Matrix::identity(d * d);
  Matrix im_1ms = image(id2 - s), ker_1pt = kernel(id2 + t);
  Matrix im_1pt = image(id2 + t), ker_1ms = kernel(id2 - s);
  add("im(I-sigma)=ker(I+tau)", same_span(im_1ms, ker_1pt));
  add("im(I+tau)=ker(I-sigma)", same_span(im_1pt, ker_1ms));
  add("sigma_tau_commute", s * t == t * s);

  Matrix s1 = lift_adjacent(p.sigma, 3, 0), s2 = lift_adjacent(p.sigma, 3, 1);
  Matrix t1 = lift_adjacent(p.tau, 3, 0), t2 = lift_adjacent(p.tau, 3, 1);
  add("tau2-sigma line 1", t1 * t2 * s1 == s2 * t1 * t2);
  add("tau2-sigma line 2", s1 * t2 * t1 == t2 * t1 * s2);
  add("braid1-sigma-tau line 1", t1 * s2 * t1 == s2 * t1 * t2);
  add("braid1-sigma-tau line 2", t1 * s2 * t1 == t2 * t1 * s2);
  add("braid2-sigma-tau line 1", t2 * s1 * t2 == s1 * t2 * t1);
  add("braid2-sigma-tau line 2", t2 * s1 * t2 == t1 * t2 * s1);

  bool inv = true, same = true, imok = true, kerok = true;
  std::ostringstream det;
  for (int n = 2; n <= max_n; ++n) {
    Matrix tn = tau_antisymmetric(p.tau, n);
    std::vector<Matrix> tw;
    for (int k = 0; k + 1 < n; ++k) tw.push_back(lift_adjacent(p.sigma, n, k) * tn);
    for (auto &x : tw)
      if (!contains_span(tn, x)) inv = false;
    for (size_t k = 1; k < tw.size(); ++k)
      if (!(tw[k] == tw[0])) same = false;
    Matrix an = antisymmetrizer(p.sigma, n);
    Matrix ia = image(an);
    if (!same_span(ia, tn)) imok = false;
    if (!same_span(kernel(an), ker_sum_im_tau(p.tau, n))) kerok = false;
    det << "n=" << n << ":dim=" << tn.cols() << " ";
  }
  add("sigma-twist invariance of tau-antisymmetric tensors", inv, det.str());
  add("sigma-twists agree on tau-antisymmetric tensors", same);

  // sigma restricted to ker(I+tau)
  bool neg = true;
  std::ostringstream nd;
  if (ker_1pt.cols() > 0) {
    Matrix sk = s * ker_1pt;
    if (!contains_span(ker_1pt, sk)) {
      neg = false;
      nd << "ker(I+tau) not sigma-invariant";
    } else {
      Matrix r = left_inverse(ker_1pt) * sk;
      for (const auto &mu : sample_mu) {
        double q0 = std::sqrt(mu.get_d());
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(r.eval(q0));
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
          auto ev = es.eigenvalues()(i);
          if (!(ev.real() < -1e-12) || std::abs(ev.imag()) > 1e-9) neg = false;
        }
        nd << "mu=" << mu.get_d() << " ";
      }
    }
  }
  add("sigma negative on ker(I+tau)", neg, nd.str());
  add("im(A^n)=tau-antisymmetric tensors", imok);
  add("ker(A^n)=sum of im(I+tau) slots", kerok);
  return rep;
}

} // namespace bs
