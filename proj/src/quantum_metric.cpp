#include "braidspin/quantum_metric.hpp"

#include <functional>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bs {

// ---- SigmaElem ----

SigmaElem SigmaElem::gen(int k, const Scalar &coef) {
  SigmaElem e;
  e.add_term(k, coef);
  return e;
}

void SigmaElem::add_term(int k, const Scalar &s) {
  if (s.is_zero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) c_.erase(it);
}

Scalar SigmaElem::scalar_part() const {
  auto it = c_.find(0);
  return it == c_.end() ? Scalar() : it->second;
}

bool SigmaElem::as_monomial(Scalar &coef, int &k) const {
  if (c_.size() != 1) return false;
  k = c_.begin()->first;
  coef = c_.begin()->second;
  return true;
}

SigmaElem SigmaElem::conj() const {
  SigmaElem r;
  for (auto &[k, s] : c_) r.c_.emplace(k, s.conj());
  return r;
}

SigmaElem SigmaElem::inv() const {
  Scalar c;
  int k;
  if (!as_monomial(c, k)) throw std::domain_error("Sigma element is not invertible: " + str());
  return gen(-k, c.inv());
}

SigmaElem SigmaElem::scale_gen(const Scalar &c) const {
  SigmaElem r;
  for (auto &[k, s] : c_) r.c_.emplace(k, s * c.pow(k));
  return r;
}

std::complex<double> SigmaElem::eval(const Scalar &g_value, double q0) const {
  std::complex<double> gv = g_value.eval(q0), r = 0;
  for (auto &[k, s] : c_) r += s.eval(q0) * std::pow(gv, k);
  return r;
}

std::string SigmaElem::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto &[k, s] : c_) {
    if (!out.empty()) out += " + ";
    out += "(" + s.pretty() + ")";
    if (k == 1) out += "*G";
    else if (k != 0) out += "*G^" + std::to_string(k);
  }
  return out;
}

SigmaElem operator+(const SigmaElem &a, const SigmaElem &b) {
  SigmaElem r = a;
  for (auto &[k, s] : b.c_) r.add_term(k, s);
  return r;
}

SigmaElem operator-(const SigmaElem &a) {
  SigmaElem r;
  for (auto &[k, s] : a.c_) r.c_.emplace(k, -s);
  return r;
}

SigmaElem operator-(const SigmaElem &a, const SigmaElem &b) { return a + (-b); }

SigmaElem operator*(const SigmaElem &a, const SigmaElem &b) {
  SigmaElem r;
  for (auto &[ka, sa] : a.c_)
    for (auto &[kb, sb] : b.c_) r.add_term(ka + kb, sa * sb);
  return r;
}

// ---- SMatrix ----

SMatrix SMatrix::from(const Matrix &m) {
  SMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = SigmaElem(m(i, j));
  return r;
}

SMatrix SMatrix::adjoint() const {
  SMatrix r(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

bool SMatrix::is_zero() const {
  for (auto &x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Eigen::MatrixXcd SMatrix::eval(const Scalar &g_value, double q0) const {
  Eigen::MatrixXcd e(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) e(i, j) = (*this)(i, j).eval(g_value, q0);
  return e;
}

SMatrix operator*(const SMatrix &a, const SMatrix &b) {
  if (a.c_ != b.r_) throw std::invalid_argument("shape mismatch in Sigma matrix product");
  SMatrix r(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

SMatrix operator+(const SMatrix &a, const SMatrix &b) {
  SMatrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

SMatrix operator-(const SMatrix &a, const SMatrix &b) {
  SMatrix r = a;
  for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

bool operator==(const SMatrix &a, const SMatrix &b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
}

SMatrix operator*(const Matrix &a, const SMatrix &b) { return SMatrix::from(a) * b; }
SMatrix operator*(const SMatrix &a, const Matrix &b) { return a * SMatrix::from(b); }

// ---- realizations and instances ----

Realization Realization::spinor() {
  Realization r{"spinor", {Scalar::frac(1, 2), Scalar::frac(1, 2) * Scalar::mu_pow(2)}, {}};
  r.checked = r.characters;
  return r;
}

Realization Realization::l2z(int K, int buffer) {
  Realization r;
  r.name = "l2Z";
  for (int k = -K; k <= K; ++k) {
    Scalar v = Scalar::frac(1, 2) * Scalar::mu_pow(2 * k);
    r.characters.push_back(v);
    if (std::abs(k) <= K - buffer) r.checked.push_back(v);
  }
  return r;
}

Realization Realization::classical() { return {"classical", {Scalar(1)}, {Scalar(1)}}; }

QuantumMetric QuantumMetric::hopf() {
  QuantumMetric g;
  g.space = Space::labeled({"+", "-"});
  g.g = SMatrix(2, 2);
  g.g(0, 1) = SigmaElem::gen(1);
  g.g(1, 0) = SigmaElem::gen(1, Scalar::mu_pow(-2));
  Matrix s(4, 4);
  s(0, 0) = 1;
  s(2, 1) = Scalar::mu_pow(2);
  s(1, 2) = Scalar::mu_pow(-2);
  s(3, 3) = 1;
  g.sigma = {g.space, s};
  Matrix st(2, 2);
  st(1, 0) = Scalar::mu_pow(1);
  st(0, 1) = Scalar::mu_pow(-1);
  g.star = {st};
  return with_twist(g);
}

QuantumMetric QuantumMetric::classical(int d) {
  QuantumMetric g;
  g.space = Space::indexed(d, "e");
  g.g = SMatrix::from(Matrix::identity(d));
  g.sigma = BraidOperator::flip(g.space);
  g.star = {Matrix::identity(d)};
  return with_twist(g);
}

// ---- twist ----

Scalar twist_weight(const QuantumMetric &g, int n, int index) {
  if (g.twist.empty()) throw std::logic_error("metric twist not built");
  int d = g.d();
  Scalar w = 1;
  for (int k = 0; k < n; ++k) {
    w *= g.twist[index % d];
    index /= d;
  }
  return w;
}

SigmaElem move_left(const QuantumMetric &g, int n, int index, const SigmaElem &a) {
  if (a.is_scalar()) return a;
  return a.scale_gen(twist_weight(g, n, index));
}

SigmaElem move_right(const QuantumMetric &g, int n, int index, const SigmaElem &a) {
  if (a.is_scalar()) return a;
  return a.scale_gen(twist_weight(g, n, index).inv());
}

static Matrix inverse_sigma(const QuantumMetric &g) { return inverse(g.sigma.m); }

NuTwist build_nu_twist(const QuantumMetric &g) {
  NuTwist nt;
  int d = g.d();
  // R(x,y,z) = (g (x) id)(id (x) sigma)(sigma^-1 (x) id)(x (x) y (x) z), coefficients on the left
  BraidOperator si{g.space, inverse_sigma(g)};
  Matrix m = lift_adjacent(g.sigma, 3, 1) * lift_adjacent(si, 3, 0);
  int d3 = d * d * d;
  nt.scale.assign(d, Scalar());
  std::vector<bool> fixed(d, false);
  nt.consistent = true;
  std::ostringstream det;
  for (int x = 0; x < d && nt.consistent; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        int col = (x * d + y) * d + z;
        std::vector<SigmaElem> r(d);
        for (int row = 0; row < d3; ++row) {
          if (m(row, col).is_zero()) continue;
          int a = row / (d * d), b = (row / d) % d, c = row % d;
          r[c] += SigmaElem(m(row, col)) * g.g(a, b);
        }
        const SigmaElem &gyz = g.g(y, z);
        for (int w = 0; w < d; ++w)
          if (w != x && !r[w].is_zero()) {
            nt.consistent = false;
            det << "non-diagonal twist at x=" << x << " ";
          }
        if (gyz.is_zero()) {
          if (!r[x].is_zero()) nt.consistent = false;
          continue;
        }
        Scalar c0, c1;
        int k0, k1;
        if (!gyz.as_monomial(c0, k0) || !r[x].as_monomial(c1, k1) || k0 != k1) {
          nt.consistent = false;
          det << "twist of g(" << y << "," << z << ") not a scaling ";
          continue;
        }
        Scalar ratio = c1 / c0, cx;
        if (k0 == 0) {
          if (!ratio.is_one()) nt.consistent = false;
          continue;
        } else if (k0 == 1) {
          cx = ratio;
        } else if (k0 == -1) {
          cx = ratio.inv();
        } else {
          nt.consistent = false;
          continue;
        }
        if (fixed[x] && nt.scale[x] != cx) {
          nt.consistent = false;
          det << "conflicting twist scale for x=" << x << " ";
        }
        nt.scale[x] = cx;
        fixed[x] = true;
      }
  for (int x = 0; x < d; ++x)
    if (!fixed[x]) nt.scale[x] = 1;
  nt.detail = det.str();
  return nt;
}

QuantumMetric with_twist(QuantumMetric g) {
  NuTwist nt = build_nu_twist(g);
  if (!nt.consistent) throw std::invalid_argument("inconsistent twist: " + nt.detail);
  g.twist = nt.scale;
  return g;
}

bool twist_star_compatible(const QuantumMetric &g) {
  // theta_x^* = s theta_xbar; *nu* = nu^-1 reads conj(c_x) c_xbar = 1
  int d = g.d();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (!g.star.s(y, x).is_zero() && !(g.twist[x].conj() * g.twist[y]).is_one()) return false;
  return true;
}

// ---- extended metric ----

SMatrix metric_n(const QuantumMetric &g, int n) {
  int d = g.d();
  if (n == 0) return SMatrix::from(Matrix::identity(1));
  SMatrix prev = metric_n(g, n - 1);
  int dp = ipow(d, n - 1), dn = dp * d;
  SMatrix r(dn, dn);
  // g(psi (x) x, y (x) xi) = g(psi, xi) rho_xi^-1(g(x, y))
  for (int ip = 0; ip < dp; ++ip)
    for (int jp = 0; jp < dp; ++jp) {
      if (prev(ip, jp).is_zero()) continue;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (g.g(i, j).is_zero()) continue;
          r(ip * d + i, j * dp + jp) = prev(ip, jp) * move_right(g, n - 1, jp, g.g(i, j));
        }
    }
  return r;
}

SMatrix gram_n(const QuantumMetric &g, int n) {
  return g.star.on_tensors(n).transpose() * metric_n(g, n);
}

SigmaTensor star_tensor(const QuantumMetric &g, const SigmaTensor &psi) {
  // (theta_K a)^* = a^* theta_K^* = theta_L rho_L^-1(a^*) M(L, K)
  Matrix m = g.star.on_tensors(psi.degree);
  SigmaTensor r{psi.degree, std::vector<SigmaElem>(psi.c.size())};
  for (int k = 0; k < (int)psi.c.size(); ++k) {
    if (psi.c[k].is_zero()) continue;
    SigmaElem ac = psi.c[k].conj();
    for (int l = 0; l < m.rows(); ++l)
      if (!m(l, k).is_zero())
        r.c[l] += SigmaElem(m(l, k)) * move_right(g, psi.degree, l, ac);
  }
  return r;
}

SigmaElem sigma_scalar_product(const QuantumMetric &g, const SigmaTensor &psi,
                               const SigmaTensor &xi) {
  if (psi.degree != xi.degree) return SigmaElem();
  SMatrix gr = gram_n(g, psi.degree);
  SigmaElem r;
  for (size_t k = 0; k < psi.c.size(); ++k) {
    if (psi.c[k].is_zero()) continue;
    SigmaElem ak = psi.c[k].conj();
    for (size_t j = 0; j < xi.c.size(); ++j)
      if (!xi.c[j].is_zero() && !gr(k, j).is_zero()) r += ak * gr(k, j) * xi.c[j];
  }
  return r;
}

bool hermiticity_of_sigma(const QuantumMetric &g) {
  SMatrix gr = gram_n(g, 2);
  return gr * g.sigma.m == g.sigma.m.adjoint() * gr;
}

bool funny_identity(const QuantumMetric &g) {
  int d = g.d();
  Matrix s = g.sigma.m;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        std::vector<SigmaElem> lhs(d), rhs(d);
        // (id (x) g)(sigma (x) id): theta_a g(b, z)
        for (int r = 0; r < d * d; ++r) {
          const Scalar &c = s(r, x * d + y);
          if (c.is_zero()) continue;
          int a = r / d, b = r % d;
          lhs[a] += SigmaElem(c) * g.g(b, z);
        }
        // (g (x) id)(id (x) sigma): g(x, b) theta_c = theta_c rho_c^-1(g(x, b))
        for (int r = 0; r < d * d; ++r) {
          const Scalar &c = s(r, y * d + z);
          if (c.is_zero()) continue;
          int b = r / d, cc = r % d;
          rhs[cc] += SigmaElem(c) * move_right(g, 1, cc, g.g(x, b));
        }
        if (lhs != rhs) return false;
      }
  return true;
}

bool metric_invertible(const QuantumMetric &g, SMatrix *inverse_out) {
  int d = g.d();
  // Sigma is commutative: use the adjugate; the determinant must be a unit (a monomial)
  std::vector<int> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  std::function<SigmaElem(const std::vector<int> &, const std::vector<int> &)> det;
  det = [&](const std::vector<int> &rows, const std::vector<int> &cols) -> SigmaElem {
    if (rows.empty()) return SigmaElem(1);
    SigmaElem r;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (g.g(rows[0], cols[j]).is_zero()) continue;
      std::vector<int> rr(rows.begin() + 1, rows.end()), cc = cols;
      cc.erase(cc.begin() + j);
      SigmaElem t = g.g(rows[0], cols[j]) * det(rr, cc);
      r += (j % 2) ? -t : t;
    }
    return r;
  };
  SigmaElem dt = det(idx, idx);
  Scalar c;
  int k;
  if (!dt.as_monomial(c, k)) return false;
  SigmaElem di = dt.inv();
  SMatrix inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<int> rr, cc;
      for (int a = 0; a < d; ++a)
        if (a != j) rr.push_back(a);
      for (int b = 0; b < d; ++b)
        if (b != i) cc.push_back(b);
      SigmaElem m = det(rr, cc) * di;
      inv(i, j) = ((i + j) % 2) ? -m : m;
    }
  if (!(g.g * inv == SMatrix::from(Matrix::identity(d)))) return false;
  if (inverse_out) *inverse_out = inv;
  return true;
}

// (x^*, y^*) = (y, C x) for the orthonormal auxiliary form
Matrix c_kappa(const StarStructure &s) { return (s.s.adjoint() * s.s).transpose(); }

// ---- report ----

bool AxiomReport::all_pass() const {
  for (auto &p : items)
    if (!p.pass) return false;
  return true;
}

const Predicate *AxiomReport::find(const std::string &name) const {
  for (auto &p : items)
    if (p.name == name) return &p;
  return nullptr;
}

std::string AxiomReport::to_json() const {
  nlohmann::ordered_json j;
  for (auto &p : items) {
    j[p.name] = p.pass;
    if (!p.detail.empty()) j["details"][p.name] = p.detail;
  }
  return j.dump(2);
}

double positivity_margin(const QuantumMetric &g, const Matrix &a, int n, const Realization &r,
                         const std::vector<mpq_class> &sample_mu) {
  SMatrix h = gram_n(g, n) * a;
  double worst = 1e300;
  for (auto &mu : sample_mu) {
    double q0 = std::sqrt(mu.get_d());
    for (auto &ch : r.checked) worst = std::min(worst, min_eig_scaled(h.eval(ch, q0)));
  }
  return worst;
}

static bool generates_sigma(const QuantumMetric &g, const SMatrix &inv) {
  // Sigma = C[G, G^-1] unless the metric is scalar-valued
  bool scalar_only = true, pos = false, neg = false;
  int gcd = 0;
  for (const SMatrix *m : {&g.g, &inv})
    for (int i = 0; i < m->rows(); ++i)
      for (int j = 0; j < m->cols(); ++j)
        for (auto &[k, s] : (*m)(i, j).terms()) {
          if (k != 0) scalar_only = false;
          if (k > 0) pos = true;
          if (k < 0) neg = true;
          gcd = std::gcd(gcd, std::abs(k));
        }
  return scalar_only || (pos && neg && gcd == 1);
}

AxiomReport axiom_report(const QuantumMetric &g, const Realization &r,
                         const std::vector<mpq_class> &sample_mu, int max_antisym) {
  AxiomReport rep;
  auto add = [&](std::string name, bool ok, std::string det = "") {
    rep.items.push_back({std::move(name), ok, std::move(det)});
  };
  int d = g.d();
  const Matrix &s = g.sigma.m;

  // (i)
  bool sym = true;
  for (int c = 0; c < d * d; ++c) {
    SigmaElem v;
    for (int row = 0; row < d * d; ++row)
      if (!s(row, c).is_zero()) v += SigmaElem(s(row, c)) * g.g(row / d, row % d);
    if (v != g.g(c / d, c % d)) sym = false;
  }
  add("(i) braided symmetry", sym);

  // (ii)
  bool real = true;
  const Matrix &st = g.star.s;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      SigmaElem rhs;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          if (!st(a, j).is_zero() && !st(b, i).is_zero())
            rhs += SigmaElem(st(a, j) * st(b, i)) * g.g(a, b);
      if (g.g(i, j).conj() != rhs) real = false;
    }
  add("(ii) reality", real);

  // (iii)
  {
    int d2 = d * d, d4 = d2 * d2;
    std::vector<SigmaElem> gg(d4);
    for (int k = 0; k < d4; ++k) gg[k] = g.g(k / (d2 * d), (k / d2) % d) * g.g((k / d) % d, k % d);
    Matrix si = inverse(s);
    BraidOperator bs_{g.space, s}, bsi{g.space, si};
    Matrix mid = lift_adjacent(bs_, 4, 1), midi = lift_adjacent(bsi, 4, 1);
    Matrix l1 = mid * kron(si, s) * midi, l2 = mid * kron(s, si) * midi;
    for (int line = 0; line < 2; ++line) {
      const Matrix &m = line == 0 ? l1 : l2;
      bool ok = true;
      for (int c = 0; c < d4 && ok; ++c) {
        SigmaElem v;
        for (int row = 0; row < d4; ++row)
          if (!m(row, c).is_zero()) v += SigmaElem(m(row, c)) * gg[row];
        if (v != gg[c]) ok = false;
      }
      add(line == 0 ? "(iii) g-g line 1" : "(iii) g-g line 2", ok);
    }
  }
  add("funny identity", funny_identity(g));

  // (iv), (vii)
  std::ostringstream p1, p2;
  double m1 = positivity_margin(g, Matrix::identity(d), 1, r, sample_mu);
  double m2 = positivity_margin(g, Matrix::identity(d * d), 2, r, sample_mu);
  bool herm1 = gram_n(g, 1) == gram_n(g, 1).adjoint();
  bool herm2 = gram_n(g, 2) == gram_n(g, 2).adjoint();
  p1 << "min scaled eigenvalue " << m1;
  p2 << "min scaled eigenvalues " << m1 << ", " << m2;
  add("(iv) weak positivity", herm1 && m1 >= -1e-10, p1.str());

  // (v)
  SMatrix inv;
  bool invertible = metric_invertible(g, &inv);
  add("(v) invertibility", invertible && generates_sigma(g, inv));

  // (vi)
  NuTwist nt = build_nu_twist(g);
  std::ostringstream tw;
  for (int x = 0; x < d; ++x) tw << g.space.tags[x] << ":" << nt.scale[x].pretty() << " ";
  add("(vi) twist", nt.consistent && twist_star_compatible(g), tw.str());

  add("(vii) strict positivity", herm1 && herm2 && m1 > 1e-10 && m2 > 1e-10, p2.str());

  // (viii)
  bool pos = true;
  std::ostringstream p8;
  for (int n = 2; n <= max_antisym; ++n) {
    Matrix a = antisymmetrizer(g.sigma, n);
    SMatrix h = gram_n(g, n) * a;
    bool herm = h == h.adjoint();
    double mn = positivity_margin(g, a, n, r, sample_mu);
    if (!herm || mn < -1e-10) pos = false;
    p8 << "n=" << n << (herm ? "" : "(non-hermitian)") << ":" << mn << " ";
  }
  add("(viii) antisymmetrizer positivity", pos, p8.str());
  add("sigma hermitian", hermiticity_of_sigma(g));
  return rep;
}

} // namespace bs
