#pragma once

#include "braidspin/exterior_clifford.hpp"
#include "braidspin/hopf_fibration.hpp"

#include <Eigen/Sparse>

#include <string>
#include <vector>

namespace bs {

// psi^m_{s, alpha} (x) |sp>, all doubled; sp = +1 or -1 is the spinor charge
struct SpinorTag {
  int s2, a2, m2, sp;
  int charge() const { return m2 + sp; }
};

class SpinorModule {
public:
  explicit SpinorModule(int smax2);
  int smax2() const { return smax2_; }
  bool empty() const { return inv_.empty(); }
  // charge zero vectors, per (s, alpha) in the order psi^{1/2}|->, psi^{-1/2}|+>
  const std::vector<SpinorTag> &invariant_basis() const { return inv_; }
  int count(int s2) const;
  std::vector<int> spins() const; // s2 values carrying invariant vectors

private:
  int smax2_;
  std::vector<SpinorTag> inv_;
};

// i D = d+ (x) Gamma+ + d- (x) Gamma-, d = i K; the pairing is fixed by charge conservation
struct DiracConvention {
  Matrix gamma_plus, gamma_minus; // spinor matrices on (|+>, |->)
  bool forced = false;            // the alternative pairing kills the invariant module
  std::string detail;
};
DiracConvention dirac_convention(const SpinorRep &rep = SpinorRep::hopf());

// c_s = mu^{1/2 - s} (s + 1/2)_mu
Scalar dirac_coupling(int s2);
// (mu^{s+1/2} - mu^{-s-1/2}) / (mu - mu^-1)
Scalar closed_form_lambda(int s2);

struct DiracBlock {
  int s2;
  Matrix d; // 2x2 exact block on (psi^{1/2}|->, psi^{-1/2}|+>)
};

struct DiracMatrix {
  std::vector<DiracBlock> blocks; // one per half-integer s, shared by all alpha
  const DiracBlock *find(int s2) const;
  // float operator on the invariant basis of the module at mu
  Eigen::SparseMatrix<std::complex<double>> assemble(const SpinorModule &m, double mu) const;
};
DiracMatrix dirac_blocks(const SpinorModule &m);

struct SpectrumEntry {
  int s2;
  int sign;
  Scalar exact;
  double value;
  int multiplicity;
};
std::vector<SpectrumEntry> spectrum_exact(const DiracMatrix &d, double mu);
// eigenvalues of the float operator built from the square-root ladder coefficients,
// sorted ascending by |value|
std::vector<SpectrumEntry> spectrum_float(const SpinorModule &m, double mu);
// rows ordered by (s, sign); the exact column is left empty when exact is false
std::string spectrum_csv(const SpinorModule &m, double mu, bool exact = true);
std::string spectrum_json(const SpinorModule &m, double mu, bool exact = true);

bool closed_form_check(const DiracMatrix &d);
bool recurrence_check(const DiracMatrix &d);
// max relative deviation between float eigenvalues and the exact ones evaluated at mu
double float_exact_deviation(const SpinorModule &m, double mu);

struct AsymptoticsReport {
  double mu0 = 0;
  int smax2 = 0;
  long count = 0;
  double slope = 0, intercept = 0, r2 = 0, expected = 0, ratio = 0;
  double partial_sum = 0, tail = 0;
  bool slope_ok = false, tail_ok = false;
  std::string regressor;
  std::string to_json() const;
};
// mu0 < 1: log a_N against sqrt(N/2); mu0 = 1: a_N against sqrt(N)
AsymptoticsReport asymptotics_fit(double mu0, int smax2);

// operators on the full (s, alpha) block: basis index 2 i + t with m = s - i, t = 0 (|+>), 1 (|->)
struct FullBlock {
  int s2;
  Eigen::MatrixXcd kp, km, dirac, laplacian;
  std::vector<int> invariant; // local indices of the charge zero vectors
};
FullBlock full_block(int s2, double mu, const DiracConvention &c, const SpinorRep &rep);

// exact diagonal values on an invariant vector (m2 = -sp)
Scalar laplacian_value(int s2, int sp, const DiracConvention &c, const SpinorRep &rep);
Scalar rhat_value(int s2, int sp, const DiracConvention &c, const SpinorRep &rep);

struct LichCandidate {
  bool reversed = false; // d_k d_l -> d_l d_k in the defect
  bool swapped = false;  // W_ij -> W_ji
  int sign = 1;
  std::vector<double> residual; // per sampled mu
  double max_residual = 0;
  std::string name() const;
};

struct LichnerowiczReport {
  std::vector<double> mus;
  int smax2 = 0;
  std::vector<LichCandidate> candidates;
  int chosen = -1;   // first candidate under tolerance
  int best = -1;     // smallest residual
  bool block_preserving = false, diagonal = false, alpha_independent = false;
  bool rhat_half = false, rhat_classical = false;
  std::string rhat_detail;
  bool pass() const;
  SuiteReport suite() const;
};
LichnerowiczReport lichnerowicz_check(int smax2, const std::vector<double> &mus);

// max |<psi, X phi> - <X psi, phi>| for X = D and X = Delta_S in the weighted inner product
struct SymmetryReport {
  double dirac = 0, laplacian = 0;
};
SymmetryReport symmetry_check(int smax2, const std::vector<double> &mus);

SuiteReport dirac_report(int smax2, const std::vector<double> &mus);

} // namespace bs
