#include "braidspin/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bs {

GQ GQ::inv() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  return GQ(re / n, -im / n);
}

GQ operator+(const GQ &a, const GQ &b) { return GQ(a.re + b.re, a.im + b.im); }
GQ operator-(const GQ &a, const GQ &b) { return GQ(a.re - b.re, a.im - b.im); }
GQ operator-(const GQ &a) { return GQ(-a.re, -a.im); }
GQ operator*(const GQ &a, const GQ &b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return GQ(a.re * b.re, 0);
  return GQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
GQ operator/(const GQ &a, const GQ &b) {
  if (sgn(b.im) == 0) {
    if (sgn(b.re) == 0) throw std::domain_error("division by zero");
    return GQ(a.re / b.re, a.im / b.re);
  }
  return a * b.inv();
}
bool operator==(const GQ &a, const GQ &b) { return a.re == b.re && a.im == b.im; }

int Poly::ord() const {
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) return (int)k;
  return -1;
}

bool Poly::is_monomial() const {
  if (c.empty()) return false;
  for (size_t k = 0; k + 1 < c.size(); ++k)
    if (!c[k].is_zero()) return false;
  return true;
}

void Poly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly padd(const Poly &a, const Poly &b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); ++k) {
    if (k < a.c.size() && k < b.c.size()) r.c[k] = a.c[k] + b.c[k];
    else if (k < a.c.size()) r.c[k] = a.c[k];
    else r.c[k] = b.c[k];
  }
  r.trim();
  return r;
}

Poly psub(const Poly &a, const Poly &b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t k = 0; k < r.c.size(); ++k) {
    if (k < a.c.size() && k < b.c.size()) r.c[k] = a.c[k] - b.c[k];
    else if (k < a.c.size()) r.c[k] = a.c[k];
    else r.c[k] = -b.c[k];
  }
  r.trim();
  return r;
}

Poly pmul(const Poly &a, const Poly &b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, GQ(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Poly pscale(const Poly &a, const GQ &s) {
  Poly r;
  if (s.is_zero()) return r;
  r.c.reserve(a.c.size());
  for (auto &x : a.c) r.c.push_back(x * s);
  return r;
}

// multiply by q^k, k may be negative if the low coefficients vanish
Poly pshift(const Poly &a, int k) {
  if (a.is_zero() || k == 0) return a;
  Poly r;
  if (k > 0) {
    r.c.assign(k, GQ(0));
    r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  } else {
    r.c.assign(a.c.begin() + (-k), a.c.end());
  }
  return r;
}

void pdivmod(const Poly &a, const Poly &b, Poly &quo, Poly &rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quo.c.clear();
  int db = b.degree();
  if (rem.degree() < db) return;
  quo.c.assign(rem.degree() - db + 1, GQ(0));
  GQ li = b.lead().inv();
  while (!rem.is_zero() && rem.degree() >= db) {
    int s = rem.degree() - db;
    GQ f = rem.lead() * li;
    quo.c[s] = f;
    for (int j = 0; j <= db; ++j) {
      if (b.c[j].is_zero()) continue;
      rem.c[s + j] = rem.c[s + j] - f * b.c[j];
    }
    rem.c.back() = GQ(0);
    rem.trim();
  }
  quo.trim();
}

Poly pgcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly qq, r;
    pdivmod(a, b, qq, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return pscale(a, a.lead().inv());
}

bool operator==(const Poly &a, const Poly &b) { return a.c == b.c; }

Scalar::Scalar(long n) : den_{{GQ(1)}} {
  if (n != 0) num_.c.push_back(GQ(n));
}

Scalar::Scalar(const GQ &g) : den_{{GQ(1)}} {
  if (!g.is_zero()) num_.c.push_back(g);
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  num_.trim();
  den_.trim();
  if (den_.is_zero()) throw std::domain_error("division by zero");
  canonicalize();
}

Scalar Scalar::from_monomial(const GQ &c, int k) {
  Scalar s;
  if (c.is_zero()) return s;
  if (k >= 0) {
    s.num_.c.assign(k + 1, GQ(0));
    s.num_.c[k] = c;
  } else {
    s.num_.c = {c};
    s.den_.c.assign(-k + 1, GQ(0));
    s.den_.c[-k] = GQ(1);
  }
  return s;
}

Scalar Scalar::q() { return from_monomial(GQ(1), 1); }
Scalar Scalar::q_pow(int k) { return from_monomial(GQ(1), k); }
Scalar Scalar::i() { return Scalar(GQ(0, 1)); }
Scalar Scalar::frac(long a, long b) { return Scalar(GQ(mpq_class(a, b))); }

bool Scalar::is_one() const {
  return num_.c.size() == 1 && num_.c[0].is_one() && den_.c.size() == 1;
}

bool Scalar::as_monomial(GQ &c, int &k) const {
  if (is_zero()) return false;
  if (!num_.is_monomial() || !den_.is_monomial()) return false;
  c = num_.lead() / den_.lead();
  k = num_.degree() - den_.degree();
  return true;
}

bool Scalar::is_real() const {
  for (auto &x : num_.c)
    if (sgn(x.im) != 0) return false;
  for (auto &x : den_.c)
    if (sgn(x.im) != 0) return false;
  return true;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_.c = {GQ(1)};
    return;
  }
  int k = std::min(num_.ord(), den_.ord());
  if (k > 0) {
    num_ = pshift(num_, -k);
    den_ = pshift(den_, -k);
  }
  if (!den_.is_monomial() && num_.degree() > 0) {
    Poly g = pgcd(num_, den_);
    if (g.degree() > 0) {
      Poly r;
      Poly n2, d2;
      pdivmod(num_, g, n2, r);
      pdivmod(den_, g, d2, r);
      num_ = std::move(n2);
      den_ = std::move(d2);
    }
  }
  if (!den_.lead().is_one()) {
    GQ li = den_.lead().inv();
    num_ = pscale(num_, li);
    den_ = pscale(den_, li);
  }
}

Scalar operator+(const Scalar &a, const Scalar &b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.c.size() == 1) {
      Scalar r;
      r.num_ = padd(a.num_, b.num_);
      return r;
    }
    return Scalar(padd(a.num_, b.num_), a.den_);
  }
  return Scalar(padd(pmul(a.num_, b.den_), pmul(b.num_, a.den_)), pmul(a.den_, b.den_));
}

Scalar operator-(const Scalar &a) {
  Scalar r = a;
  for (auto &x : r.num_.c) x = -x;
  return r;
}

Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }

Scalar operator*(const Scalar &a, const Scalar &b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.den_.c.size() == 1 && b.den_.c.size() == 1) {
    Scalar r;
    r.num_ = pmul(a.num_, b.num_);
    return r;
  }
  if (a.num_.is_monomial() && a.den_.is_monomial() && b.num_.is_monomial() &&
      b.den_.is_monomial()) {
    GQ ca, cb;
    int ka, kb;
    a.as_monomial(ca, ka);
    b.as_monomial(cb, kb);
    return Scalar::from_monomial(ca * cb, ka + kb);
  }
  return Scalar(pmul(a.num_, b.num_), pmul(a.den_, b.den_));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Scalar(den_, num_);
}

Scalar operator/(const Scalar &a, const Scalar &b) { return a * b.inv(); }

bool operator==(const Scalar &a, const Scalar &b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  bool touched = false;
  for (auto &x : r.num_.c)
    if (sgn(x.im) != 0) { x = x.conj(); touched = true; }
  for (auto &x : r.den_.c)
    if (sgn(x.im) != 0) { x = x.conj(); touched = true; }
  if (touched) r.canonicalize();
  return r;
}

Scalar Scalar::flip_q() const {
  Scalar r = *this;
  for (size_t k = 1; k < r.num_.c.size(); k += 2) r.num_.c[k] = -r.num_.c[k];
  for (size_t k = 1; k < r.den_.c.size(); k += 2) r.den_.c[k] = -r.den_.c[k];
  r.canonicalize();
  return r;
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inv().pow(-n);
  Scalar r(1), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

namespace {

std::complex<double> horner(const Poly &p, double q0, double &scale) {
  std::complex<double> v = 0;
  scale = 0;
  double aq = std::fabs(q0);
  for (size_t k = p.c.size(); k-- > 0;) {
    auto c = p.c[k].to_complex();
    v = v * q0 + c;
    scale = scale * aq + std::abs(c);
  }
  return v;
}

} // namespace

std::complex<double> Scalar::eval(double q0) const {
  if (q0 == 0 && den_.ord() > 0) throw PoleError("pole at q0 = 0");
  double sn, sd;
  auto n = horner(num_, q0, sn);
  auto d = horner(den_, q0, sd);
  if (std::abs(d) <= 1e-13 * sd) throw PoleError("pole at evaluation point");
  return n / d;
}

std::complex<double> Scalar::eval(const mpq_class &q0) const {
  // exact detection of the pole, then double evaluation
  GQ acc(0);
  GQ x(q0);
  for (size_t k = den_.c.size(); k-- > 0;) acc = acc * x + den_.c[k];
  if (acc.is_zero()) throw PoleError("pole at evaluation point");
  return eval(q0.get_d());
}

Scalar Scalar::at(const mpq_class &q0) const {
  GQ x(q0), n(0), d(0);
  for (size_t k = num_.c.size(); k-- > 0;) n = n * x + num_.c[k];
  for (size_t k = den_.c.size(); k-- > 0;) d = d * x + den_.c[k];
  if (d.is_zero()) throw PoleError("pole at evaluation point");
  return Scalar(n / d);
}

std::complex<double> Scalar::eval_mu(const mpq_class &mu0) const {
  if (sgn(mu0) <= 0) throw std::domain_error("mu must be positive");
  return eval(std::sqrt(mu0.get_d()));
}

namespace {

std::string coef_str(const GQ &c) {
  if (sgn(c.im) == 0) return c.re.get_str();
  return "(" + c.re.get_str() + "," + c.im.get_str() + ")";
}

std::string poly_str(const Poly &p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coef_str(p.c[k]) + "*q^" + std::to_string(k);
  }
  return s;
}

Poly poly_parse(const std::string &s) {
  Poly p;
  if (s == "0") return p;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(" + ", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;
    size_t star = term.rfind("*q^");
    if (star == std::string::npos) throw std::invalid_argument("bad scalar term: " + term);
    std::string cs = term.substr(0, star);
    int k = std::stoi(term.substr(star + 3));
    GQ c;
    if (!cs.empty() && cs[0] == '(') {
      size_t comma = cs.find(',');
      c = GQ(mpq_class(cs.substr(1, comma - 1)), mpq_class(cs.substr(comma + 1, cs.size() - comma - 2)));
    } else {
      c = GQ(mpq_class(cs));
    }
    c.re.canonicalize();
    c.im.canonicalize();
    if ((int)p.c.size() <= k) p.c.resize(k + 1, GQ(0));
    p.c[k] = p.c[k] + c;
  }
  p.trim();
  return p;
}

std::string pretty_coef(const GQ &c, bool &neg) {
  neg = false;
  if (sgn(c.im) == 0) {
    mpq_class r = c.re;
    if (sgn(r) < 0) { neg = true; r = -r; }
    return r.get_str();
  }
  if (sgn(c.re) == 0) {
    mpq_class r = c.im;
    if (sgn(r) < 0) { neg = true; r = -r; }
    return (r == 1 ? std::string() : r.get_str()) + "i";
  }
  return "(" + c.re.get_str() + (sgn(c.im) < 0 ? "" : "+") + c.im.get_str() + "i)";
}

// terms given as exponent -> coefficient
std::string pretty_terms(const std::vector<std::pair<int, GQ>> &terms, bool in_mu) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto &[e, c] : terms) {
    bool neg;
    std::string cs = pretty_coef(c, neg);
    int ee = in_mu ? e / 2 : e;
    std::string var = in_mu ? "mu" : "q";
    std::string mono;
    if (ee != 0) mono = var + (ee == 1 ? std::string() : "^" + std::to_string(ee));
    std::string body;
    if (mono.empty()) body = cs;
    else if (cs == "1") body = mono;
    else body = cs + "*" + mono;
    if (first) s += (neg ? "-" : "") + body;
    else s += (neg ? "-" : "+") + body;
    first = false;
  }
  return s;
}

std::vector<std::pair<int, GQ>> terms_of(const Poly &p, int shift) {
  std::vector<std::pair<int, GQ>> t;
  for (size_t k = 0; k < p.c.size(); ++k)
    if (!p.c[k].is_zero()) t.push_back({(int)k + shift, p.c[k]});
  return t;
}

bool all_even(const std::vector<std::pair<int, GQ>> &t) {
  for (auto &x : t)
    if (x.first % 2 != 0) return false;
  return true;
}

} // namespace

std::string Scalar::str() const { return "[" + poly_str(num_) + "]/[" + poly_str(den_) + "]"; }

Scalar Scalar::parse(const std::string &s) {
  size_t mid = s.find("]/[");
  if (s.size() < 5 || s.front() != '[' || s.back() != ']' || mid == std::string::npos)
    throw std::invalid_argument("bad scalar string: " + s);
  return Scalar(poly_parse(s.substr(1, mid - 1)), poly_parse(s.substr(mid + 3, s.size() - mid - 4)));
}

std::string Scalar::pretty() const {
  if (is_zero()) return "0";
  if (den_.is_monomial()) {
    GQ dl = den_.lead();
    auto t = terms_of(pscale(num_, dl.inv()), -den_.degree());
    return pretty_terms(t, all_even(t));
  }
  auto tn = terms_of(num_, 0), td = terms_of(den_, 0);
  bool mu = all_even(tn) && all_even(td);
  std::string n = pretty_terms(tn, mu), d = pretty_terms(td, mu);
  if (tn.size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

Scalar q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int needs n >= 0");
  Poly p;
  if (n == 0) return Scalar();
  p.c.assign(4 * (n - 1) + 1, GQ(0));
  for (int k = 0; k < n; ++k) p.c[4 * k] = GQ(1);
  return Scalar(p, Poly{{GQ(1)}});
}

mpq_class nearest_rational(double x, long max_den) {
  // best rational approximation via continued fractions
  long sign = x < 0 ? -1 : 1;
  double v = std::fabs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = v;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    mpz_class ai = (long)a;
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) {
      // semiconvergent check
      mpz_class k = (max_den - q0) / q1;
      mpz_class ps = k * p1 + p0, qs = k * q1 + q0;
      mpq_class c1(p1, q1), c2(ps, qs);
      mpq_class xv(v);
      mpq_class d1 = abs(c1 - xv), d2 = abs(c2 - xv);
      mpq_class best = (qs > 0 && d2 < d1) ? c2 : c1;
      best.canonicalize();
      return sign * best;
    }
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  mpq_class res(p1, q1);
  res.canonicalize();
  return sign * res;
}

mpq_class parse_rational(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.find_first_of(".eE") != std::string::npos) {
    size_t used = 0;
    double d = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number: " + s);
    return nearest_rational(d);
  }
  mpq_class r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

} // namespace bs

namespace bs {

static std::optional<GQ> sqrt_gq(const GQ &a) {
  if (sgn(a.im) != 0) return std::nullopt;
  mpq_class r = abs(a.re);
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  mpq_class root(sn, sd);
  root.canonicalize();
  return sgn(a.re) >= 0 ? GQ(root) : GQ(0, root);
}

static std::optional<Poly> sqrt_poly(const Poly &p) {
  if (p.is_zero()) return p;
  int o = p.ord();
  if (o % 2) return std::nullopt;
  Poly x = pshift(p, -o);
  int d = x.degree();
  if (d % 2) return std::nullopt;
  int h = d / 2;
  auto lead = sqrt_gq(x.lead());
  if (!lead) return std::nullopt;
  Poly r;
  r.c.assign(h + 1, GQ(0));
  r.c[h] = *lead;
  GQ two_lead = GQ(2) * *lead;
  for (int k = 1; k <= h; ++k) {
    GQ acc = x.c[d - k];
    for (int i = 1; i < k; ++i) acc = acc - r.c[h - i] * r.c[h - k + i];
    r.c[h - k] = acc / two_lead;
  }
  r.trim();
  if (!(pmul(r, r) == x)) return std::nullopt;
  return pshift(r, o / 2);
}

std::optional<Scalar> sqrt_exact(const Scalar &x) {
  if (x.is_zero()) return Scalar();
  auto n = sqrt_poly(x.num());
  auto d = sqrt_poly(x.den());
  if (!n || !d) return std::nullopt;
  Scalar r(*n, *d);
  std::complex<double> v;
  try {
    v = r.eval(1.0);
  } catch (const PoleError &) {
  }
  if (std::abs(v) < 1e-12) v = r.eval(0.5);
  if (v.real() < 0 || (v.real() == 0 && v.imag() < 0)) r = -r;
  if (r * r != x) return std::nullopt;
  return r;
}

} // namespace bs
