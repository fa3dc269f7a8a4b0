#pragma once

#include <complex>
#include <stdexcept>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace bs {

// Gaussian rational re + i*im.
struct GQ {
  mpq_class re, im;
  GQ() = default;
  GQ(long r) : re(r), im(0) {}
  GQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GQ conj() const { return GQ(re, -im); }
  GQ inv() const;
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

GQ operator+(const GQ &a, const GQ &b);
GQ operator-(const GQ &a, const GQ &b);
GQ operator-(const GQ &a);
GQ operator*(const GQ &a, const GQ &b);
GQ operator/(const GQ &a, const GQ &b);
bool operator==(const GQ &a, const GQ &b);
inline bool operator!=(const GQ &a, const GQ &b) { return !(a == b); }

// Dense polynomial in q, coefficient k multiplies q^k. Always trimmed.
struct Poly {
  std::vector<GQ> c;
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  int ord() const;
  bool is_monomial() const;
  void trim();
  const GQ &lead() const { return c.back(); }
};

Poly padd(const Poly &a, const Poly &b);
Poly psub(const Poly &a, const Poly &b);
Poly pmul(const Poly &a, const Poly &b);
Poly pscale(const Poly &a, const GQ &s);
Poly pshift(const Poly &a, int k);
void pdivmod(const Poly &a, const Poly &b, Poly &quo, Poly &rem);
Poly pgcd(Poly a, Poly b);
bool operator==(const Poly &a, const Poly &b);

// Exact element of Q(i)(q). mu = q^2.
class Scalar {
public:
  Scalar() : den_{{GQ(1)}} {}
  Scalar(long n);
  Scalar(const GQ &g);
  Scalar(Poly num, Poly den);

  static Scalar q();
  static Scalar q_pow(int k);
  static Scalar mu_pow(int k) { return q_pow(2 * k); }
  static Scalar i();
  static Scalar frac(long a, long b);
  static Scalar from_monomial(const GQ &c, int k);

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // c*q^k form; returns false otherwise
  bool as_monomial(GQ &c, int &k) const;
  bool is_real() const;

  Scalar conj() const;
  Scalar inv() const;
  Scalar pow(int n) const;
  // substitute q -> -q
  Scalar flip_q() const;

  std::complex<double> eval(double q0) const;
  std::complex<double> eval(const mpq_class &q0) const;
  // exact value at a rational point q0
  Scalar at(const mpq_class &q0) const;
  // evaluate with the rational mu0 = q0^2, q0 > 0
  std::complex<double> eval_mu(const mpq_class &mu0) const;

  std::string str() const;
  std::string pretty() const;
  static Scalar parse(const std::string &s);

  friend Scalar operator+(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a, const Scalar &b);
  friend Scalar operator*(const Scalar &a, const Scalar &b);
  friend Scalar operator/(const Scalar &a, const Scalar &b);
  friend Scalar operator-(const Scalar &a);
  friend bool operator==(const Scalar &a, const Scalar &b);

  Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
  Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
  Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
  Scalar &operator/=(const Scalar &b) { return *this = *this / b; }

  // total number of stored terms, used as a pivot cost
  size_t weight() const { return num_.c.size() + den_.c.size(); }

private:
  void canonicalize();
  Poly num_, den_;
};

inline bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

// 1 + mu^2 + ... + mu^(2(n-1))
Scalar q_int(int n);

// exact square root when x is a square in Q(q) with a rational (or negated rational)
// square leading coefficient; the root is chosen positive at q = 1 when it is real there
std::optional<Scalar> sqrt_exact(const Scalar &x);

struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// nearest rational with bounded denominator (Stern-Brocot / continued fractions)
mpq_class nearest_rational(double x, long max_den = 1000000);
// accepts "p/q", "p" or a decimal literal
mpq_class parse_rational(const std::string &s);

} // namespace bs
