#pragma once

#include "braidspin/quantum_metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bs {

// Graded element: per grade, coordinates (right Sigma coefficients) in the grade basis.
struct ExtElem {
  std::vector<std::vector<SigmaElem>> g;
  bool is_zero() const;
  friend ExtElem operator+(const ExtElem &a, const ExtElem &b);
  friend ExtElem operator-(const ExtElem &a, const ExtElem &b);
  friend bool operator==(const ExtElem &a, const ExtElem &b);
};
ExtElem mul_right(const ExtElem &x, const SigmaElem &a);

// Solve sum_u A[e][u] * scale_gen(t[e][u])(c_u) = r[e] for c in Sigma.
struct TwistedSystem {
  std::vector<std::vector<SigmaElem>> a;
  std::vector<std::vector<Scalar>> t;
  std::vector<SigmaElem> r;
};
std::optional<std::vector<SigmaElem>> solve_twisted(const TwistedSystem &sys);

struct CoTerm {
  int gi, u, gj, v; // b_u (grade gi) (x) b_v (grade gj)
  Scalar c;
};

// Right circle action x o U of the structure group, diagonal on V
struct CircleAction {
  std::vector<Scalar> on_v;
  Scalar on_g;
  std::vector<int> charge;
  static CircleAction hopf();
  static CircleAction trivial(int d);
};

class ExteriorAlgebra {
public:
  explicit ExteriorAlgebra(const QuantumMetric &g, int max_degree = 6);

  const QuantumMetric &metric() const { return g_; }
  int top() const { return top_; }
  int dim(int n) const { return n <= top_ ? basis_[n].cols() : 0; }
  std::vector<int> dims() const;
  const Matrix &basis(int n) const { return basis_[n]; }
  const Matrix &antisym(int n) const { return anti_[n]; }
  std::string label(int n, int u) const;
  Scalar weight(int n, int u) const { return weight_[n][u]; }

  ExtElem zero() const;
  ExtElem unit() const { return basis_elem(0, 0); }
  ExtElem basis_elem(int n, int u, const SigmaElem &c = 1) const;
  ExtElem sigma(const SigmaElem &a) const { return basis_elem(0, 0, a); }
  ExtElem from_tensor(int n, const std::vector<SigmaElem> &t) const; // class of a tensor
  std::vector<SigmaElem> rep(int n, const std::vector<SigmaElem> &coords) const;

  ExtElem mul_left(const SigmaElem &a, const ExtElem &x) const;
  ExtElem wedge(const ExtElem &x, const ExtElem &y) const;
  ExtElem clifford(const ExtElem &x, const ExtElem &y) const;
  ExtElem star(const ExtElem &x) const;
  // graded involution: (-1)^{n(n-1)/2} x^* on grade n
  ExtElem graded_star(const ExtElem &x) const;
  SigmaElem g_wedge(const ExtElem &x, const ExtElem &y) const;
  SigmaElem inner(const ExtElem &x, const ExtElem &y) const { return g_wedge(star(x), y); }
  // counit: the grade zero part
  SigmaElem counit(const ExtElem &x) const;
  std::vector<CoTerm> coproduct_basis(int n, int u) const;
  // contraction by a scalar combination of basis vectors of V
  ExtElem contraction(const std::vector<Scalar> &x, const ExtElem &psi) const;
  // g_wedge on raw tensors: g(psi, A xi)
  SigmaElem g_wedge_tensor(int n, const std::vector<SigmaElem> &psi,
                           const std::vector<SigmaElem> &xi) const;

  // volume data
  const ExtElem &volume() const { return w_; }
  Scalar volume_scale() const { return cw_; }
  Scalar s_scale() const { return weight_[top_][0]; } // S(G) = s G
  SigmaElem S(const SigmaElem &a) const { return a.scale_gen(s_scale()); }
  SigmaElem S_inv(const SigmaElem &a) const { return a.scale_gen(s_scale().inv()); }
  SigmaElem j(const ExtElem &x, const ExtElem &y) const;

  // operators given by images of basis elements (graded), right linear up to a twist
  struct GradedOp {
    std::vector<std::vector<ExtElem>> img;
    Scalar twist = 1; // op(x q) = op(x) scale_gen(twist)(q)
  };
  ExtElem apply(const GradedOp &op, const ExtElem &x) const;
  const GradedOp &hodge() const { return hodge_; }
  const GradedOp &lozenge() const { return lozenge_; }
  std::optional<ExtElem> hodge_inverse(const ExtElem &y) const;
  Matrix T() const { return t_; }
  ExtElem apply_T(const ExtElem &x, bool inverse = false) const;

private:
  void build_products();
  void build_volume();
  void build_hodge();
  std::vector<SigmaElem> coords(int n, const std::vector<SigmaElem> &t_in_image) const;

  QuantumMetric g_;
  int top_ = 0;
  std::vector<Matrix> anti_, basis_, linv_;
  std::vector<std::vector<int>> piv_;
  std::vector<std::vector<Scalar>> weight_;
  std::vector<SMatrix> metric_;
  // wedge_[p][r][u][v], cliff_[p][r][u][v]
  std::vector<std::vector<std::vector<std::vector<ExtElem>>>> wedge_, cliff_;
  std::vector<std::vector<SMatrix>> gw_; // gw_[n](u, v)
  std::vector<Matrix> star_;             // b_u^* = sum_v b_v star_[n](v, u)
  ExtElem w_;
  Scalar cw_ = 1;
  GradedOp hodge_, lozenge_;
  Matrix t_;
};

struct SuiteReport {
  std::vector<Predicate> items;
  bool all_pass() const;
  std::string to_json() const;
  const Predicate *find(const std::string &name) const;
  void add(std::string name, bool ok, std::string detail = "");
};

// exterior structure, Clifford product and volume/pairing checks
SuiteReport exterior_report(const ExteriorAlgebra &e, const CircleAction &circ,
                            const std::vector<mpq_class> &sample_mu, const Realization &r);
SuiteReport clifford_report(const ExteriorAlgebra &e, const std::vector<mpq_class> &sample_mu,
                            const Realization &r);
SuiteReport hodge_property_suite(const ExteriorAlgebra &e, const CircleAction &circ);

// CSV rows "grade,basis_in,basis_out,coefficient"
std::string hodge_table_csv(const ExteriorAlgebra &e, const std::optional<mpq_class> &mu);

struct SpinorRep {
  int dim = 0;
  std::vector<Matrix> gamma; // per basis vector of V
  Matrix gamma_g;            // image of the Sigma generator G
  std::vector<int> charge;
  int k = 0;
  Matrix of(const SigmaElem &a) const;
  static SpinorRep hopf(int k = 0);
  static SpinorRep upper_triangular();
};

SuiteReport spinor_rep_check(const SpinorRep &rep, const QuantumMetric &g,
                             const std::vector<int> &v_charge);

} // namespace bs
