#pragma once

#include "braidspin/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace bs {

using Perm = std::vector<int>; // one-line notation, 0-based

struct BraidOperator {
  Space space;
  Matrix m; // on V (x) V, tensor index i*d + j

  int d() const { return space.dim(); }
  static BraidOperator flip(const Space &v);
};

// Antilinear involution on V given by theta_i^* = sum_j s(j, i) theta_j.
struct StarStructure {
  Matrix s;
  int d() const { return s.rows(); }
  // matrix M_n with psi^* = M_n conj(psi) on V^{(x)n}
  Matrix on_tensors(int n) const;
  std::vector<Scalar> apply(const std::vector<Scalar> &psi, int n) const;
  // the operator *X* on V^{(x)n}
  Matrix conjugate_op(const Matrix &x, int n) const;
};

int ipow(int b, int e);

// id^k (x) b (x) id^(n-k-2), k is 0-based
Matrix lift_adjacent(const BraidOperator &b, int n, int k);
Matrix tensor_power_of(const Matrix &a, int n);

int inversions(const Perm &p);
std::vector<std::vector<int>> reduced_words(const Perm &p);
std::vector<int> lexmin_reduced_word(const Perm &p);
Matrix lift_word(const BraidOperator &b, int n, const std::vector<int> &word);
Matrix lift_permutation(const BraidOperator &b, const Perm &p);
std::vector<Perm> all_perms(int n);

bool check_yang_baxter(const BraidOperator &b);
bool is_invertible(const BraidOperator &b);

Matrix antisymmetrizer(const BraidOperator &b, int n);
Matrix antisymmetrizer_recursive(const BraidOperator &b, int n);

// Cache of A^n for n = 0..max
class Antisymmetrizers {
public:
  Antisymmetrizers(const BraidOperator &b, int max_degree);
  const Matrix &operator()(int n) const { return a_.at(n); }
  int max_degree() const { return (int)a_.size() - 1; }

private:
  std::vector<Matrix> a_;
};

// intersection over k of ker(id^k (x) (I + tau) (x) id^(n-k-2))
Matrix tau_antisymmetric(const BraidOperator &tau, int n);

struct CoupledPair {
  BraidOperator sigma, tau;
};

struct Predicate {
  std::string name;
  bool pass;
  std::string detail;
};

struct PairReport {
  std::vector<Predicate> items;
  bool all_pass() const;
  std::string to_json() const;
};

PairReport coupled_pair_report(const CoupledPair &p, const std::vector<mpq_class> &sample_mu,
                               int max_n = 4);

} // namespace bs
