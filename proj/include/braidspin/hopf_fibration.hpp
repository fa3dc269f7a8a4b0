#pragma once

#include "braidspin/braiding.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace bs {

// PBW monomial alpha^a gamma^m gamma*^n; a < 0 stands for alpha*^(-a)
struct Mono {
  int a = 0, m = 0, n = 0;
  int degree() const { return std::abs(a) + m + n; }
  // doubled right and left U(1) charges: alpha, gamma carry m = 1/2 as second index
  int charge() const { return a + m - n; }
  int left_charge() const { return a - m + n; }
  std::string word() const;
  std::string str() const;
  // short rendering, e.g. compact("al", "ga") = "al^2 ga ga*"
  std::string compact(const std::string &al, const std::string &ga) const;
  friend bool operator<(const Mono &x, const Mono &y) {
    return std::tie(x.a, x.m, x.n) < std::tie(y.a, y.m, y.n);
  }
  friend bool operator==(const Mono &x, const Mono &y) {
    return x.a == y.a && x.m == y.m && x.n == y.n;
  }
};

class PolyB {
public:
  PolyB() = default;
  PolyB(const Scalar &s) {
    if (!s.is_zero()) t_[Mono{}] = s;
  }
  PolyB(long n) : PolyB(Scalar(n)) {}
  static PolyB mono(const Mono &m, const Scalar &c = 1);
  // letters: a = alpha, A = alpha*, c = gamma, C = gamma*
  static PolyB gen(char letter);

  const std::map<Mono, Scalar> &terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coef(const Mono &m) const;
  int degree() const;
  PolyB star() const;
  Scalar counit() const;
  std::string str() const;
  std::string compact(const std::string &al = "al", const std::string &ga = "ga") const;

  friend PolyB operator+(const PolyB &x, const PolyB &y);
  friend PolyB operator-(const PolyB &x, const PolyB &y);
  friend PolyB operator-(const PolyB &x);
  friend PolyB operator*(const PolyB &x, const PolyB &y);
  friend PolyB operator*(const Scalar &s, const PolyB &x);
  friend bool operator==(const PolyB &x, const PolyB &y) { return x.t_ == y.t_; }
  PolyB &operator+=(const PolyB &y) { return *this = *this + y; }

private:
  void add(const Mono &m, const Scalar &c);
  std::map<Mono, Scalar> t_;
};

inline bool operator!=(const PolyB &x, const PolyB &y) { return !(x == y); }

PolyB mono_product(const Mono &x, const Mono &y);

// Word rewriting with the defining relations; strategy picks the redex.
enum class RewriteStrategy { Leftmost, Rightmost, Random };
PolyB normal_form(const std::string &word, RewriteStrategy strat = RewriteStrategy::Leftmost,
                  std::mt19937 *rng = nullptr);
// parse "a A c C" words, also accepting alpha/al, gamma/ga/g tokens with an optional trailing *
std::string parse_word(const std::string &text);

// fundamental matrix u = [[alpha, -mu gamma*], [gamma, alpha*]]
std::vector<std::vector<PolyB>> fundamental_u();
struct UnitarityReport {
  bool pass = true;
  std::vector<std::string> entries; // reduced entries of u u* and u* u
};
UnitarityReport unitarity_check();

using PolyB2 = std::map<std::pair<Mono, Mono>, Scalar>;
using PolyB3 = std::map<std::tuple<Mono, Mono, Mono>, Scalar>;
PolyB2 coproduct(const PolyB &x);
PolyB3 coproduct_left_twice(const PolyB &x);  // (phi (x) id) phi
PolyB3 coproduct_right_twice(const PolyB &x); // (id (x) phi) phi
bool counit_axioms(const PolyB &x);

std::vector<Mono> monomials_up_to(int degree);

class HaarState {
public:
  // unique bi-invariant normalized functional on monomials of degree <= cap
  explicit HaarState(int degree_cap);
  int cap() const { return cap_; }
  Scalar operator()(const Mono &m) const;
  Scalar operator()(const PolyB &x) const;
  const std::map<Mono, Scalar> &values() const { return h_; }
  bool left_invariant() const { return left_ok_; }
  bool right_invariant() const { return right_ok_; }
  std::string csv() const;

private:
  int cap_;
  std::map<Mono, Scalar> h_;
  bool left_ok_ = false, right_ok_ = false;
};

// closed form h((gamma gamma*)^n) = (1 - mu^2)/(1 - mu^(2n+2))
Scalar haar_zeta_power(int n);

// spin-s corepresentation matrix (s2 = 2s in {0, 1, 2}) with entries in B
// and the diagonal of the metric that makes it unitary.
struct SpinMatrix {
  std::vector<std::vector<PolyB>> u;
  std::vector<Scalar> norm; // squared lengths of the carrier basis vectors
};
SpinMatrix spin_matrix(int s2);

struct OrthogonalityReport {
  int s2 = 0;
  Matrix c;
  bool relations = false, trace_equal = false;
  std::string detail;
  bool pass() const { return relations && trace_equal; }
};
OrthogonalityReport orthogonality_check(int s2, const HaarState &h);

// minimal eigenvalue of h(b_i^* b_j) over normal monomials of degree <= deg at mu0
double haar_gram_min_eig(const HaarState &h, int deg, const mpq_class &mu0);

// ---- Peter-Weyl module ----

struct PWTag {
  int s2, a2, m2; // doubled s, alpha, m
  friend bool operator<(const PWTag &x, const PWTag &y) {
    return std::tie(x.s2, x.a2, x.m2) < std::tie(y.s2, y.a2, y.m2);
  }
  friend bool operator==(const PWTag &x, const PWTag &y) {
    return x.s2 == y.s2 && x.a2 == y.a2 && x.m2 == y.m2;
  }
  int charge() const { return m2; } // 2m
};

class PeterWeylModule {
public:
  explicit PeterWeylModule(int smax2);
  int smax2() const { return smax2_; }
  const std::vector<PWTag> &basis() const { return basis_; }
  int index(const PWTag &t) const;

  // squared ladder coefficients (exact); K+ maps m -> m+1, K- maps m -> m-1
  static Scalar kplus_sq(int s2, int m2);
  static Scalar kminus_sq(int s2, int m2);
  // exact coefficient when the square root is rational
  static std::optional<Scalar> kplus_exact(int s2, int m2);
  static std::optional<Scalar> kminus_exact(int s2, int m2);
  static double kplus(int s2, int m2, double mu);
  static double kminus(int s2, int m2, double mu);
  // (K+ K- - mu^2 K- K+) on psi^m, exact
  static Scalar ladder_defect(int s2, int m2);
  // inner product weight <psi, psi> = [C^-1]_{aa} / tr C with C = diag(mu^{-2 alpha})
  static Scalar weight(int s2, int a2);

  // dense float matrices on the (s, alpha) block, basis m = s, s-1, ..., -s
  static Eigen::MatrixXcd block_K(int s2, bool plus, double mu);
  static Eigen::MatrixXcd block_d(int s2, bool plus, double mu); // d = i K

  // vertical integration: coefficient of the spin zero component
  std::complex<double> integrate(const Eigen::VectorXcd &v) const;

private:
  int smax2_;
  std::vector<PWTag> basis_;
  std::map<PWTag, int> idx_;
};

struct AdjointReport {
  double max_residual = 0;
  bool pass = false;
  bool wpx = false;      // vertical integration kills derivatives
  bool charges = false;  // K+- shift the charge by +-2
  bool annihilate = false;
  std::string detail;
};
// -d_i^dagger = sum_j [C_kappa^{-1/2}]_{ji} d^*_j with d^*_j = sum_y star(y, j) d_y
AdjointReport adjoint_checks(const PeterWeylModule &pw, const std::vector<double> &mus,
                             int s2_max = 9);

} // namespace bs
