#pragma once

#include "braidspin/braiding.hpp"

#include <map>
#include <string>
#include <vector>

namespace bs {

// Laurent polynomial in the self-adjoint generator G; coefficient of G^k stored at k.
class SigmaElem {
public:
  SigmaElem() = default;
  SigmaElem(const Scalar &s) {
    if (!s.is_zero()) c_[0] = s;
  }
  SigmaElem(long n) : SigmaElem(Scalar(n)) {}
  static SigmaElem gen(int k = 1, const Scalar &coef = 1);

  const std::map<int, Scalar> &terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_scalar() const { return c_.empty() || (c_.size() == 1 && c_.count(0)); }
  Scalar scalar_part() const;
  bool as_monomial(Scalar &coef, int &k) const;

  SigmaElem conj() const;
  SigmaElem inv() const; // only for monomials
  // G -> c G
  SigmaElem scale_gen(const Scalar &c) const;
  std::complex<double> eval(const Scalar &g_value, double q0) const;
  std::string str() const;

  friend SigmaElem operator+(const SigmaElem &a, const SigmaElem &b);
  friend SigmaElem operator-(const SigmaElem &a, const SigmaElem &b);
  friend SigmaElem operator-(const SigmaElem &a);
  friend SigmaElem operator*(const SigmaElem &a, const SigmaElem &b);
  friend bool operator==(const SigmaElem &a, const SigmaElem &b) { return a.c_ == b.c_; }
  SigmaElem &operator+=(const SigmaElem &b) { return *this = *this + b; }
  SigmaElem &operator-=(const SigmaElem &b) { return *this = *this - b; }

private:
  void add_term(int k, const Scalar &s);
  std::map<int, Scalar> c_;
};

inline bool operator!=(const SigmaElem &a, const SigmaElem &b) { return !(a == b); }

class SMatrix {
public:
  SMatrix() = default;
  SMatrix(int r, int c) : r_(r), c_(c), a_((size_t)r * c) {}
  static SMatrix from(const Matrix &m);
  int rows() const { return r_; }
  int cols() const { return c_; }
  SigmaElem &operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
  const SigmaElem &operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }
  SMatrix adjoint() const;
  bool is_zero() const;
  Eigen::MatrixXcd eval(const Scalar &g_value, double q0) const;

  friend SMatrix operator*(const SMatrix &a, const SMatrix &b);
  friend SMatrix operator+(const SMatrix &a, const SMatrix &b);
  friend SMatrix operator-(const SMatrix &a, const SMatrix &b);
  friend bool operator==(const SMatrix &a, const SMatrix &b);

private:
  int r_ = 0, c_ = 0;
  std::vector<SigmaElem> a_;
};

SMatrix operator*(const Matrix &a, const SMatrix &b);
SMatrix operator*(const SMatrix &a, const Matrix &b);

// Sigma realized through *-characters G -> value (diagonal realizations)
struct Realization {
  std::string name;
  std::vector<Scalar> characters;
  // characters used for positivity statements (edge buffer applied)
  std::vector<Scalar> checked;
  static Realization spinor();
  static Realization l2z(int K = 16, int buffer = 2);
  static Realization classical();
};

struct QuantumMetric {
  Space space;
  SMatrix g; // g(i, j) = g(theta_i, theta_j)
  BraidOperator sigma;
  StarStructure star;
  // theta_x G = twist[x] G theta_x; empty until built
  std::vector<Scalar> twist;

  int d() const { return space.dim(); }
  static QuantumMetric hopf();
  static QuantumMetric classical(int d = 2);
};

// theta_J a = rho_J(a) theta_J with rho_J(G) = weight(J) G
Scalar twist_weight(const QuantumMetric &g, int n, int index);
SigmaElem move_left(const QuantumMetric &g, int n, int index, const SigmaElem &a);  // rho_J(a)
SigmaElem move_right(const QuantumMetric &g, int n, int index, const SigmaElem &a); // rho_J^-1(a)

struct NuTwist {
  std::vector<Scalar> scale; // diagonal twist theta_x G = scale[x] G theta_x
  bool consistent = false;
  std::string detail;
};
NuTwist build_nu_twist(const QuantumMetric &g);
bool twist_star_compatible(const QuantumMetric &g);
QuantumMetric with_twist(QuantumMetric g);

// extended metric and the scalar product on n-tensors
SMatrix metric_n(const QuantumMetric &g, int n);
SMatrix gram_n(const QuantumMetric &g, int n);

// tensors over V_Sigma with coefficients on the right
struct SigmaTensor {
  int degree = 0;
  std::vector<SigmaElem> c;
};
SigmaElem sigma_scalar_product(const QuantumMetric &g, const SigmaTensor &psi,
                               const SigmaTensor &xi);
SigmaTensor star_tensor(const QuantumMetric &g, const SigmaTensor &psi);

bool hermiticity_of_sigma(const QuantumMetric &g);
// (id (x) g)(sigma (x) id) = (g (x) id)(id (x) sigma)
bool funny_identity(const QuantumMetric &g);
bool metric_invertible(const QuantumMetric &g, SMatrix *inverse = nullptr);
Matrix c_kappa(const StarStructure &s);

struct AxiomReport {
  std::vector<Predicate> items;
  bool all_pass() const;
  std::string to_json() const;
  const Predicate *find(const std::string &name) const;
};

// minimal scaled eigenvalue of gram_n(g) * A, over the checked characters
double positivity_margin(const QuantumMetric &g, const Matrix &a, int n, const Realization &r,
                         const std::vector<mpq_class> &sample_mu);

AxiomReport axiom_report(const QuantumMetric &g, const Realization &r,
                         const std::vector<mpq_class> &sample_mu, int max_antisym = 5);

} // namespace bs
