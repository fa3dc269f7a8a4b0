#include "braidspin/hopf_fibration.hpp"

#include "braidspin/hopf_data.hpp"
#include "braidspin/quantum_metric.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bs {

// ---- monomials ----

std::string Mono::word() const {
  std::string w(std::abs(a), a > 0 ? 'a' : 'A');
  w += std::string(m, 'c');
  w += std::string(n, 'C');
  return w;
}

std::string Mono::str() const {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const char *name, int e) {
    if (!e) return;
    if (any) os << " ";
    os << name;
    if (e > 1) os << "^" << e;
    any = true;
  };
  put(a > 0 ? "alpha" : "alpha*", std::abs(a));
  put("gamma", m);
  put("gamma*", n);
  if (!any) os << "1";
  return os.str();
}

std::string Mono::compact(const std::string &al, const std::string &ga) const {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const std::string &name, int e) {
    if (!e) return;
    if (any) os << " ";
    os << name;
    if (e > 1) os << "^" << e;
    any = true;
  };
  put(a > 0 ? al : al + "*", std::abs(a));
  put(ga, m);
  put(ga + "*", n);
  if (!any) os << "1";
  return os.str();
}

// ---- PolyB ----

void PolyB::add(const Mono &m, const Scalar &c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

PolyB PolyB::mono(const Mono &m, const Scalar &c) {
  PolyB p;
  p.add(m, c);
  return p;
}

PolyB PolyB::gen(char letter) {
  switch (letter) {
  case 'a': return mono({1, 0, 0});
  case 'A': return mono({-1, 0, 0});
  case 'c': return mono({0, 1, 0});
  case 'C': return mono({0, 0, 1});
  }
  throw std::invalid_argument(std::string("unknown generator ") + letter);
}

Scalar PolyB::coef(const Mono &m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Scalar() : it->second;
}

int PolyB::degree() const {
  int d = 0;
  for (auto &[m, c] : t_) d = std::max(d, m.degree());
  return d;
}

Scalar PolyB::counit() const {
  Scalar r;
  for (auto &[m, c] : t_)
    if (m.m == 0 && m.n == 0) r += c;
  return r;
}

std::string PolyB::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto &[m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.pretty() << ")";
    if (m.degree()) os << " " << m.str();
  }
  return os.str();
}

// a top-level + or - outside exponents and parentheses
static bool is_sum(const std::string &p) {
  int depth = 0;
  for (size_t k = 1; k < p.size(); ++k) {
    if (p[k] == '(') ++depth;
    else if (p[k] == ')') --depth;
    else if (depth == 0 && (p[k] == '+' || p[k] == '-') && p[k - 1] != '^') return true;
  }
  return false;
}

std::string PolyB::compact(const std::string &al, const std::string &ga) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto &[m, c] : t_) {
    std::string p = c.pretty();
    bool neg = false;
    if (is_sum(p)) p = "(" + p + ")";
    else if (p.size() > 1 && p[0] == '-') neg = true, p = p.substr(1);
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    if (m.degree() == 0) os << p;
    else if (p == "1") os << m.compact(al, ga);
    else os << p << " " << m.compact(al, ga);
  }
  return os.str();
}

PolyB operator+(const PolyB &x, const PolyB &y) {
  PolyB r = x;
  for (auto &[m, c] : y.t_) r.add(m, c);
  return r;
}

PolyB operator-(const PolyB &x, const PolyB &y) {
  PolyB r = x;
  for (auto &[m, c] : y.t_) r.add(m, -c);
  return r;
}

PolyB operator-(const PolyB &x) { return PolyB() - x; }

PolyB operator*(const Scalar &s, const PolyB &x) {
  PolyB r;
  if (s.is_zero()) return r;
  for (auto &[m, c] : x.t_) r.add(m, s * c);
  return r;
}

PolyB mono_product(const Mono &x, const Mono &y) {
  // move gamma^m1 gamma*^n1 to the right of the alpha power of y
  Scalar f = Scalar::mu_pow(-y.a * (x.m + x.n));
  int m = x.m + y.m, n = x.n + y.n;
  // alpha^{x.a} alpha^{y.a} = alpha^r * prod (1 - c_i zeta), zeta = gamma gamma*
  int r = x.a + y.a;
  std::vector<Scalar> zeta_poly = {Scalar(1)};
  auto times = [&](const Scalar &c) {
    std::vector<Scalar> out(zeta_poly.size() + 1);
    for (size_t i = 0; i < zeta_poly.size(); ++i) {
      out[i] += zeta_poly[i];
      out[i + 1] -= c * zeta_poly[i];
    }
    zeta_poly = out;
  };
  if (x.a > 0 && y.a < 0) {
    int k = x.a, j = -y.a, t = std::min(k, j);
    for (int i = j - t + 1; i <= j; ++i) times(Scalar::mu_pow(2 * i));
  } else if (x.a < 0 && y.a > 0) {
    int j = y.a, t = std::min(-x.a, j);
    for (int jj = j; jj > j - t; --jj) times(Scalar::mu_pow(-2 * (jj - 1)));
  }
  PolyB out;
  for (size_t p = 0; p < zeta_poly.size(); ++p)
    if (!zeta_poly[p].is_zero()) out += PolyB::mono({r, m + (int)p, n + (int)p}, f * zeta_poly[p]);
  return out;
}

PolyB operator*(const PolyB &x, const PolyB &y) {
  PolyB r;
  for (auto &[mx, cx] : x.t_)
    for (auto &[my, cy] : y.t_)
      for (auto &[m, c] : mono_product(mx, my).t_) r.add(m, cx * cy * c);
  return r;
}

PolyB PolyB::star() const {
  PolyB r;
  for (auto &[m, c] : t_) r += c.conj() * mono_product({0, m.n, m.m}, {-m.a, 0, 0});
  return r;
}

// ---- rewriting ----

namespace {

struct Rule {
  const char *lhs;
  std::vector<std::pair<std::string, Scalar>> rhs;
};

const std::vector<Rule> &rules() {
  static const std::vector<Rule> r = {
      {"ca", {{"ac", Scalar::mu_pow(-1)}}},
      {"Ca", {{"aC", Scalar::mu_pow(-1)}}},
      {"cA", {{"Ac", Scalar::mu_pow(1)}}},
      {"CA", {{"AC", Scalar::mu_pow(1)}}},
      {"Cc", {{"cC", Scalar(1)}}},
      {"aA", {{"", Scalar(1)}, {"cC", -Scalar::mu_pow(2)}}},
      {"Aa", {{"", Scalar(1)}, {"cC", Scalar(-1)}}},
  };
  return r;
}

int rule_at(const std::string &w, size_t i) {
  const auto &rs = rules();
  for (size_t k = 0; k < rs.size(); ++k)
    if (w[i] == rs[k].lhs[0] && w[i + 1] == rs[k].lhs[1]) return (int)k;
  return -1;
}

Mono word_to_mono(const std::string &w) {
  Mono m;
  for (char ch : w) {
    if (ch == 'a') ++m.a;
    else if (ch == 'A') --m.a;
    else if (ch == 'c') ++m.m;
    else ++m.n;
  }
  return m;
}

} // namespace

PolyB normal_form(const std::string &word, RewriteStrategy strat, std::mt19937 *rng) {
  for (char ch : word)
    if (std::string("aAcC").find(ch) == std::string::npos)
      throw std::invalid_argument(std::string("unknown letter ") + ch);
  std::map<std::string, Scalar> work = {{word, Scalar(1)}};
  PolyB done;
  while (!work.empty()) {
    auto it = work.begin();
    if (strat == RewriteStrategy::Random && rng && work.size() > 1) {
      std::uniform_int_distribution<size_t> pick(0, work.size() - 1);
      std::advance(it, pick(*rng));
    }
    std::string w = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    std::vector<size_t> redex;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (rule_at(w, i) >= 0) redex.push_back(i);
    if (redex.empty()) {
      done += PolyB::mono(word_to_mono(w), c);
      continue;
    }
    size_t pos = redex.front();
    if (strat == RewriteStrategy::Rightmost) pos = redex.back();
    else if (strat == RewriteStrategy::Random && rng) {
      std::uniform_int_distribution<size_t> pick(0, redex.size() - 1);
      pos = redex[pick(*rng)];
    }
    const Rule &r = rules()[rule_at(w, pos)];
    for (auto &[rep, k] : r.rhs) {
      std::string nw = w.substr(0, pos) + rep + w.substr(pos + 2);
      Scalar &slot = work[nw];
      slot += c * k;
    }
  }
  return done;
}

std::string parse_word(const std::string &text) {
  std::string out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool st = tok.size() > 1 && tok.back() == '*';
    std::string base = st ? tok.substr(0, tok.size() - 1) : tok;
    if (base == "alpha" || base == "al" || base == "a") out += st ? 'A' : 'a';
    else if (base == "gamma" || base == "ga" || base == "g" || base == "c") out += st ? 'C' : 'c';
    else {
      for (char ch : tok) {
        if (std::string("aAcC").find(ch) == std::string::npos)
          throw std::invalid_argument("cannot parse word token '" + tok + "'");
        out += ch;
      }
    }
  }
  return out;
}

// ---- unitarity and coproduct ----

std::vector<std::vector<PolyB>> fundamental_u() {
  return {{PolyB::gen('a'), -Scalar::mu_pow(1) * PolyB::gen('C')}, {PolyB::gen('c'), PolyB::gen('A')}};
}

UnitarityReport unitarity_check() {
  auto u = fundamental_u();
  UnitarityReport rep;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        PolyB e;
        for (int k = 0; k < 2; ++k) {
          // pass 0: (u u*)_ij, pass 1: (u* u)_ij
          if (pass == 0) e += u[i][k] * u[j][k].star();
          else e += u[k][i].star() * u[k][j];
        }
        if (e != PolyB(i == j ? 1 : 0)) rep.pass = false;
        rep.entries.push_back(std::string(pass ? "(u*u)" : "(uu*)") + std::to_string(i + 1) +
                              std::to_string(j + 1) + " = " + e.str());
      }
  return rep;
}

static PolyB2 tensor_mul(const PolyB2 &x, const PolyB2 &y) {
  PolyB2 r;
  for (auto &[kx, cx] : x)
    for (auto &[ky, cy] : y) {
      PolyB l = mono_product(kx.first, ky.first), rr = mono_product(kx.second, ky.second);
      for (auto &[ml, cl] : l.terms())
        for (auto &[mr, cr] : rr.terms()) {
          Scalar &s = r[{ml, mr}];
          s += cx * cy * cl * cr;
        }
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

static const PolyB2 &gen_coproduct(char g) {
  static const std::map<char, PolyB2> table = [] {
    Mono a{1, 0, 0}, A{-1, 0, 0}, c{0, 1, 0}, C{0, 0, 1};
    Scalar mu = Scalar::mu_pow(1);
    std::map<char, PolyB2> t;
    t['a'] = {{{a, a}, Scalar(1)}, {{C, c}, -mu}};
    t['c'] = {{{c, a}, Scalar(1)}, {{A, c}, Scalar(1)}};
    t['A'] = {{{A, A}, Scalar(1)}, {{c, C}, -mu}};
    t['C'] = {{{C, A}, Scalar(1)}, {{a, C}, Scalar(1)}};
    return t;
  }();
  return table.at(g);
}

PolyB2 coproduct(const PolyB &x) {
  PolyB2 r;
  for (auto &[m, c] : x.terms()) {
    PolyB2 acc = {{{Mono{}, Mono{}}, Scalar(1)}};
    for (char g : m.word()) acc = tensor_mul(acc, gen_coproduct(g));
    for (auto &[k, v] : acc) {
      Scalar &s = r[k];
      s += c * v;
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

PolyB3 coproduct_left_twice(const PolyB &x) {
  PolyB3 r;
  for (auto &[k, c] : coproduct(x))
    for (auto &[k2, c2] : coproduct(PolyB::mono(k.first))) {
      Scalar &s = r[{k2.first, k2.second, k.second}];
      s += c * c2;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

PolyB3 coproduct_right_twice(const PolyB &x) {
  PolyB3 r;
  for (auto &[k, c] : coproduct(x))
    for (auto &[k2, c2] : coproduct(PolyB::mono(k.second))) {
      Scalar &s = r[{k.first, k2.first, k2.second}];
      s += c * c2;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

bool counit_axioms(const PolyB &x) {
  PolyB l, r;
  for (auto &[k, c] : coproduct(x)) {
    l += (c * PolyB::mono(k.first).counit()) * PolyB::mono(k.second);
    r += (c * PolyB::mono(k.second).counit()) * PolyB::mono(k.first);
  }
  return l == x && r == x;
}

std::vector<Mono> monomials_up_to(int degree) {
  std::vector<Mono> out;
  for (int d = 0; d <= degree; ++d)
    for (int m = 0; m <= d; ++m)
      for (int n = 0; m + n <= d; ++n) {
        int k = d - m - n;
        out.push_back({k, m, n});
        if (k) out.push_back({-k, m, n});
      }
  return out;
}

// ---- Haar state ----

namespace {

// incremental sparse elimination; rows are keyed by their smallest column
class SparseSolver {
public:
  explicit SparseSolver(int n) : n_(n) {}
  // returns false on an inconsistent equation
  bool add(std::map<int, Scalar> row, Scalar rhs) {
    while (true) {
      auto it = std::find_if(row.begin(), row.end(), [&](auto &e) { return piv_.count(e.first); });
      if (it == row.end()) break;
      int col = it->first;
      Scalar f = it->second;
      auto &[prow, prhs] = piv_.at(col);
      for (auto &[c, v] : prow) {
        Scalar &slot = row[c];
        slot -= f * v;
        if (slot.is_zero()) row.erase(c);
      }
      rhs -= f * prhs;
    }
    if (row.empty()) return rhs.is_zero();
    int col = row.begin()->first;
    Scalar inv = row.begin()->second.inv();
    for (auto &[c, v] : row) v *= inv;
    piv_[col] = {row, rhs * inv};
    return true;
  }
  bool complete() const { return (int)piv_.size() == n_; }
  std::vector<Scalar> solve() const {
    std::vector<Scalar> x(n_);
    for (auto it = piv_.rbegin(); it != piv_.rend(); ++it) {
      auto &[row, rhs] = it->second;
      Scalar v = rhs;
      for (auto &[c, a] : row)
        if (c != it->first) v -= a * x[c];
      x[it->first] = v;
    }
    return x;
  }

private:
  int n_;
  std::map<int, std::pair<std::map<int, Scalar>, Scalar>> piv_;
};

} // namespace

HaarState::HaarState(int degree_cap) : cap_(degree_cap) {
  std::vector<Mono> monos = monomials_up_to(degree_cap);
  std::map<Mono, int> id;
  for (size_t i = 0; i < monos.size(); ++i) id[monos[i]] = (int)i;
  SparseSolver sol((int)monos.size());
  if (!sol.add({{id.at(Mono{}), Scalar(1)}}, Scalar(1))) throw std::logic_error("Haar normalization");
  // collect invariance equations: (h (x) id) phi(x) = h(x) 1 and (id (x) h) phi(x) = h(x) 1
  std::vector<std::pair<std::map<int, Scalar>, Scalar>> eqs;
  for (auto &x : monos) {
    PolyB2 ph = coproduct(PolyB::mono(x));
    for (int side = 0; side < 2; ++side) {
      std::map<Mono, std::map<int, Scalar>> by_other;
      for (auto &[k, c] : ph) {
        const Mono &inner = side == 0 ? k.first : k.second;
        const Mono &other = side == 0 ? k.second : k.first;
        Scalar &s = by_other[other][id.at(inner)];
        s += c;
      }
      by_other[Mono{}][id.at(x)] -= Scalar(1);
      for (auto &[other, row] : by_other) {
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (!row.empty()) eqs.push_back({row, Scalar()});
      }
    }
  }
  for (auto &[row, rhs] : eqs)
    if (!sol.add(row, rhs)) throw std::runtime_error("Haar invariance system is inconsistent");
  if (!sol.complete()) throw std::runtime_error("Haar invariance system is singular");
  std::vector<Scalar> x = sol.solve();
  for (size_t i = 0; i < monos.size(); ++i)
    if (!x[i].is_zero()) h_[monos[i]] = x[i];
  // verify both invariances on all monomials
  left_ok_ = right_ok_ = true;
  for (auto &m : monos) {
    PolyB2 ph = coproduct(PolyB::mono(m));
    PolyB l, r;
    for (auto &[k, c] : ph) {
      l += (c * (*this)(k.first)) * PolyB::mono(k.second);
      r += (c * (*this)(k.second)) * PolyB::mono(k.first);
    }
    if (l != PolyB((*this)(m))) left_ok_ = false;
    if (r != PolyB((*this)(m))) right_ok_ = false;
  }
}

Scalar HaarState::operator()(const Mono &m) const {
  if (m.degree() > cap_) throw std::out_of_range("monomial above the Haar degree cap");
  auto it = h_.find(m);
  return it == h_.end() ? Scalar() : it->second;
}

Scalar HaarState::operator()(const PolyB &x) const {
  Scalar r;
  for (auto &[m, c] : x.terms()) r += c * (*this)(m);
  return r;
}

std::string HaarState::csv() const {
  std::ostringstream os;
  os << "monomial,value\n";
  for (auto &m : monomials_up_to(cap_)) os << m.compact("a", "g") << "," << (*this)(m).pretty() << "\n";
  return os.str();
}

Scalar haar_zeta_power(int n) {
  return (Scalar(1) - Scalar::mu_pow(2)) / (Scalar(1) - Scalar::mu_pow(2 * n + 2));
}

// ---- spin matrices and orthogonality ----

SpinMatrix spin_matrix(int s2) {
  if (s2 == 0) return {{{PolyB(1)}}, {Scalar(1)}};
  auto u = fundamental_u();
  if (s2 == 1) return {u, {Scalar(1), Scalar(1)}};
  if (s2 != 2) throw std::invalid_argument("spin matrices are built for s <= 1");
  // U_{(ij),(kl)} = u_ik u_jl on C^2 (x) C^2, restricted to span{e00, e01 + c e10, e11}
  auto U = [&](int row, int col) { return u[row / 2][col / 2] * u[row % 2][col % 2]; };
  // c from gamma alpha = c alpha gamma on the first column
  PolyB r01 = U(1, 0), r10 = U(2, 0);
  Scalar c = r10.terms().begin()->second / r01.terms().begin()->second;
  std::vector<std::vector<Scalar>> w = {{1, 0, 0, 0}, {0, 1, c, 0}, {0, 0, 0, 1}};
  std::vector<std::vector<PolyB>> uw(4, std::vector<PolyB>(3));
  for (int row = 0; row < 4; ++row)
    for (int b = 0; b < 3; ++b)
      for (int col = 0; col < 4; ++col)
        if (!w[b][col].is_zero()) uw[row][b] += w[b][col] * U(row, col);
  for (int b = 0; b < 3; ++b)
    if (uw[2][b] != c * uw[1][b]) throw std::runtime_error("spin-1 subspace is not invariant");
  SpinMatrix sm;
  sm.u = {{uw[0][0], uw[0][1], uw[0][2]}, {uw[1][0], uw[1][1], uw[1][2]}, {uw[3][0], uw[3][1], uw[3][2]}};
  sm.norm = {Scalar(1), Scalar(1) + c * c.conj(), Scalar(1)};
  return sm;
}

OrthogonalityReport orthogonality_check(int s2, const HaarState &h) {
  OrthogonalityReport rep;
  rep.s2 = s2;
  SpinMatrix sm = spin_matrix(s2);
  int n = (int)sm.u.size();
  // unitary normalization: u'_{ab} = sqrt(n_a / n_b) u_{ab}; diagonal products are rational
  auto scale = [&](int k, int i) { return sm.norm[k] / sm.norm[i]; };
  std::vector<Scalar> mdiag(n);
  bool ok = true;
  std::ostringstream det;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
          Scalar v = h(sm.u[k][i].star() * sm.u[l][j]);
          if (k == l && i == j) {
            v *= scale(k, i);
            if (i == 0) mdiag[k] = v;
            else if (v != mdiag[k]) ok = false;
          } else if (!v.is_zero()) {
            ok = false;
          }
        }
  Scalar tr2;
  for (int k = 0; k < n; ++k) {
    if (mdiag[k].is_zero()) {
      rep.detail = "degenerate Haar values";
      return rep;
    }
    tr2 += mdiag[k].inv();
  }
  auto trc = sqrt_exact(tr2);
  if (!trc) {
    rep.detail = "trace of C is not a square";
    return rep;
  }
  rep.c = Matrix(n, n);
  Scalar trinv;
  for (int k = 0; k < n; ++k) {
    rep.c(k, k) = (mdiag[k] * *trc).inv();
    trinv += rep.c(k, k).inv();
  }
  // second relation h[u_ki u*_lj] = delta_kl C_ji / tr C^-1
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j) {
          Scalar v = h(sm.u[k][i] * sm.u[l][j].star());
          if (k == l && i == j) {
            v *= sm.norm[k] / sm.norm[i];
            if (v != rep.c(i, i) / trinv) ok = false;
          } else if (!v.is_zero()) {
            ok = false;
          }
        }
  rep.relations = ok;
  rep.trace_equal = *trc == trinv;
  for (int k = 0; k < n; ++k) det << (k ? ", " : "C = diag(") << rep.c(k, k).pretty();
  det << "), tr C = " << trc->pretty() << ", tr C^-1 = " << trinv.pretty();
  rep.detail = det.str();
  return rep;
}

double haar_gram_min_eig(const HaarState &h, int deg, const mpq_class &mu0) {
  std::vector<Mono> b = monomials_up_to(deg);
  int n = (int)b.size();
  double q0 = std::sqrt(mu0.get_d());
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i) {
    PolyB bi = PolyB::mono(b[i]).star();
    for (int j = 0; j < n; ++j) g(i, j) = h(bi * PolyB::mono(b[j])).eval(q0);
  }
  return min_eig_scaled(g);
}

// ---- Peter-Weyl module ----

PeterWeylModule::PeterWeylModule(int smax2) : smax2_(smax2) {
  for (int s2 = 0; s2 <= smax2; ++s2)
    for (int a2 = s2; a2 >= -s2; a2 -= 2)
      for (int m2 = s2; m2 >= -s2; m2 -= 2) {
        idx_[{s2, a2, m2}] = (int)basis_.size();
        basis_.push_back({s2, a2, m2});
      }
}

int PeterWeylModule::index(const PWTag &t) const {
  auto it = idx_.find(t);
  return it == idx_.end() ? -1 : it->second;
}

static Scalar qn(int n) { return n <= 0 ? Scalar() : q_int(n); }

Scalar PeterWeylModule::kplus_sq(int s2, int m2) {
  int sm = (s2 + m2) / 2, dm = (s2 - m2) / 2;
  return Scalar::mu_pow(-2 * sm) * qn(dm) * qn(sm + 1);
}

Scalar PeterWeylModule::kminus_sq(int s2, int m2) {
  int sm = (s2 + m2) / 2, dm = (s2 - m2) / 2;
  return Scalar::mu_pow(2 - 2 * sm) * qn(dm + 1) * qn(sm);
}

std::optional<Scalar> PeterWeylModule::kplus_exact(int s2, int m2) { return sqrt_exact(kplus_sq(s2, m2)); }
std::optional<Scalar> PeterWeylModule::kminus_exact(int s2, int m2) { return sqrt_exact(kminus_sq(s2, m2)); }

static double qn_f(int n, double mu) {
  if (n <= 0) return 0;
  double r = 0, p = 1;
  for (int k = 0; k < n; ++k, p *= mu * mu) r += p;
  return r;
}

double PeterWeylModule::kplus(int s2, int m2, double mu) {
  int sm = (s2 + m2) / 2, dm = (s2 - m2) / 2;
  return std::pow(mu, -sm) * std::sqrt(qn_f(dm, mu) * qn_f(sm + 1, mu));
}

double PeterWeylModule::kminus(int s2, int m2, double mu) {
  int sm = (s2 + m2) / 2, dm = (s2 - m2) / 2;
  return std::pow(mu, 1 - sm) * std::sqrt(qn_f(dm + 1, mu) * qn_f(sm, mu));
}

Scalar PeterWeylModule::ladder_defect(int s2, int m2) {
  // K+ K- psi^m = k-(m)^2 psi^m and K- K+ psi^m = k+(m)^2 psi^m
  return kminus_sq(s2, m2) - Scalar::mu_pow(2) * kplus_sq(s2, m2);
}

Scalar PeterWeylModule::weight(int s2, int a2) {
  Scalar tr;
  for (int b2 = s2; b2 >= -s2; b2 -= 2) tr += Scalar::mu_pow(-b2);
  return Scalar::mu_pow(a2) / tr;
}

Eigen::MatrixXcd PeterWeylModule::block_K(int s2, bool plus, double mu) {
  int n = s2 + 1;
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int m2 = s2 - 2 * i;
    if (plus && i > 0) k(i - 1, i) = kplus(s2, m2, mu);
    if (!plus && i + 1 < n) k(i + 1, i) = kminus(s2, m2, mu);
  }
  return k;
}

Eigen::MatrixXcd PeterWeylModule::block_d(int s2, bool plus, double mu) {
  return std::complex<double>(0, 1) * block_K(s2, plus, mu);
}

std::complex<double> PeterWeylModule::integrate(const Eigen::VectorXcd &v) const { return v(index({0, 0, 0})); }

AdjointReport adjoint_checks(const PeterWeylModule &pw, const std::vector<double> &mus, int s2_max) {
  AdjointReport rep;
  Matrix st = hopf_star().s;
  Matrix ck = c_kappa(hopf_star());
  bool wpx = true, charges = true, ann = true;
  for (int s2 = 0; s2 <= pw.smax2(); ++s2) {
    if (!PeterWeylModule::kplus_sq(s2, s2).is_zero()) ann = false;
    if (!PeterWeylModule::kminus_sq(s2, -s2).is_zero()) ann = false;
    if (s2 == 0 && (!PeterWeylModule::kplus_sq(0, 0).is_zero() || !PeterWeylModule::kminus_sq(0, 0).is_zero()))
      wpx = false;
  }
  // every K+- image of a tag keeps s and moves m by one; integration reads s = 0 only
  for (double mu : mus) {
    for (auto &t : pw.basis()) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero((Eigen::Index)pw.basis().size());
      for (int sign : {1, -1}) {
        int m2 = t.m2 + 2 * sign;
        double c = sign > 0 ? PeterWeylModule::kplus(t.s2, t.m2, mu) : PeterWeylModule::kminus(t.s2, t.m2, mu);
        if (c == 0) continue;
        int j = pw.index({t.s2, t.a2, m2});
        if (j < 0) {
          charges = false;
          continue;
        }
        if (pw.basis()[j].charge() - t.charge() != 2 * sign) charges = false;
        v(j) += std::complex<double>(0, c);
      }
      if (std::abs(pw.integrate(v)) > 0) wpx = false;
    }
  }
  double worst = 0;
  for (double mu : mus) {
    double q0 = std::sqrt(mu);
    Eigen::MatrixXcd sv = st.eval(q0), cv = ck.eval(q0);
    for (int s2 = 0; s2 <= std::min(s2_max, pw.smax2()); ++s2)
      for (int a2 = s2; a2 >= -s2; a2 -= 2) {
        int n = s2 + 1;
        double w = PeterWeylModule::weight(s2, a2).eval(q0).real();
        Eigen::MatrixXcd W = w * Eigen::MatrixXcd::Identity(n, n);
        Eigen::MatrixXcd d[2] = {PeterWeylModule::block_d(s2, true, mu), PeterWeylModule::block_d(s2, false, mu)};
        for (int i = 0; i < 2; ++i) {
          Eigen::MatrixXcd adj = W.inverse() * d[i].adjoint() * W;
          Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(n, n);
          for (int j = 0; j < 2; ++j) {
            std::complex<double> cinv = 1.0 / std::sqrt(cv(j, j));
            if (j != i) continue; // C_kappa is diagonal
            for (int y = 0; y < 2; ++y) rhs += cinv * sv(y, j) * d[y];
          }
          worst = std::max(worst, (-adj - rhs).cwiseAbs().maxCoeff());
        }
      }
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (i != j && !ck(i, j).is_zero()) worst = 1;
  rep.max_residual = worst;
  rep.pass = worst < 1e-10;
  rep.wpx = wpx;
  rep.charges = charges;
  rep.annihilate = ann;
  std::ostringstream os;
  os << "max residual " << worst;
  rep.detail = os.str();
  return rep;
}

} // namespace bs
