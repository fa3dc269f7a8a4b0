#include "braidspin/braidspin.h"

#include "braidspin/dirac.hpp"
#include "braidspin/hopf_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

using namespace bs;

namespace {

struct Config {
  mpq_class mu{1, 2};
  bool mu_set = false;
  int smax2 = 11;
  std::string mode = "exact";
  std::vector<mpq_class> samples = {mpq_class(1, 4), mpq_class(1, 2), mpq_class(3, 4), mpq_class(1)};
  unsigned long seed = 1;
  std::string format;
  int threads = 0;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string half(int n2) { return n2 % 2 ? std::to_string(n2) + "/2" : std::to_string(n2 / 2); }

int parse_smax2(const std::string &v) {
  mpq_class s = parse_rational(v);
  mpq_class d = 2 * s;
  if (d.get_den() != 1) throw UsageError("smax must be a multiple of 1/2: " + v);
  if (sgn(d) < 0) throw UsageError("smax must be nonnegative: " + v);
  if (d > 400) throw UsageError("smax too large: " + v);
  return (int)d.get_num().get_si();
}

std::vector<mpq_class> parse_samples(const std::string &v) {
  std::vector<mpq_class> r;
  std::stringstream ss(v);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    mpq_class m = parse_rational(tok);
    if (sgn(m) <= 0 || m > 1) throw UsageError("samples must lie in (0, 1]: " + tok);
    r.push_back(m);
  }
  if (r.empty()) throw UsageError("empty sample list");
  return r;
}

double mu_float(const Config &c) {
  if (sgn(c.mu) <= 0 || c.mu > 1) throw UsageError("mu must lie in (0, 1] for float paths");
  return c.mu.get_d();
}

std::vector<double> dirac_mus(const Config &c) {
  std::vector<double> r;
  for (auto &m : c.samples) r.push_back(m.get_d());
  double mu = mu_float(c);
  if (std::find(r.begin(), r.end(), mu) == r.end()) r.push_back(mu);
  return r;
}

// ---- suites ----

struct SuiteResult {
  std::string name;
  std::vector<Predicate> items;
  std::string note;
};

void append(std::vector<Predicate> &out, const std::vector<Predicate> &in, const std::string &prefix = "") {
  for (auto &p : in) out.push_back({prefix + p.name, p.pass, p.detail});
}

// exact rational square root of mu, when there is one
std::optional<mpq_class> rational_q(const mpq_class &mu) {
  mpz_class n = mu.get_num(), d = mu.get_den();
  if (sgn(n) <= 0 || !mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(sn, sd);
}

Matrix specialize(const Matrix &m, const mpq_class &q0) {
  Matrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).at(q0);
  return r;
}

const ExteriorAlgebra &hopf_exterior() {
  static ExteriorAlgebra e(QuantumMetric::hopf());
  return e;
}

SuiteResult suite_braids(const Config &c) {
  SuiteResult s{"braids", {}, ""};
  CoupledPair pair{hopf_sigma(), hopf_tau()};
  if (c.mu_set) {
    if (auto q0 = rational_q(c.mu)) {
      pair.sigma.m = specialize(pair.sigma.m, *q0);
      pair.tau.m = specialize(pair.tau.m, *q0);
      s.note = "hopf pair specialized at mu = " + c.mu.get_str();
    }
  }
  if (s.note.empty()) s.note = "hopf pair over Q(i)(q)";
  auto add = [&](std::string n, bool ok, std::string d = "") { s.items.push_back({std::move(n), ok, std::move(d)}); };
  add("yang-baxter sigma", check_yang_baxter(pair.sigma));
  add("yang-baxter tau", check_yang_baxter(pair.tau));
  add("sigma invertible", is_invertible(pair.sigma));
  add("tau invertible", is_invertible(pair.tau));
  StarStructure st = hopf_star();
  Matrix sm = hopf_sigma().m, tm = hopf_tau().m;
  add("star sigma = sigma", st.conjugate_op(sm, 2) == sm);
  add("star tau = tau^-1", st.conjugate_op(tm, 2) == inverse(tm));
  append(s.items, coupled_pair_report(pair, c.samples).items);
  for (int n = 2; n <= 5; ++n) {
    QuantumMetric g = QuantumMetric::hopf();
    Matrix a = antisymmetrizer(g.sigma, n);
    SMatrix h = gram_n(g, n) * a;
    bool herm = h == h.adjoint();
    double mn = std::min(positivity_margin(g, a, n, Realization::spinor(), c.samples),
                         positivity_margin(g, a, n, Realization::l2z(16), c.samples));
    std::ostringstream d;
    d << "min eig " << mn;
    add("A_sigma^" + std::to_string(n) + " psd", herm && mn >= -1e-10, d.str());
  }
  return s;
}

SuiteResult suite_metric(const Config &c) {
  SuiteResult s{"metric", {}, ""};
  QuantumMetric g = QuantumMetric::hopf();
  append(s.items, axiom_report(g, Realization::spinor(), c.samples).items, "spinor: ");
  append(s.items, axiom_report(g, Realization::l2z(16), c.samples).items, "l2z: ");
  return s;
}

SuiteResult suite_exterior(const Config &c) {
  SuiteResult s{"exterior", {}, ""};
  for (auto r : {Realization::spinor(), Realization::l2z(16)})
    append(s.items, exterior_report(hopf_exterior(), CircleAction::hopf(), c.samples, r).items, r.name + ": ");
  return s;
}

SuiteResult suite_clifford(const Config &c) {
  SuiteResult s{"clifford", {}, ""};
  for (auto r : {Realization::spinor(), Realization::l2z(16)})
    append(s.items, clifford_report(hopf_exterior(), c.samples, r).items, r.name + ": ");
  QuantumMetric g = QuantumMetric::hopf();
  for (int k = -2; k <= 2; ++k)
    append(s.items, spinor_rep_check(SpinorRep::hopf(k), g, {2, -2}).items, "spinor k=" + std::to_string(k) + ": ");
  SuiteReport ut = spinor_rep_check(SpinorRep::upper_triangular(), g, {2, -2});
  s.items.push_back({"upper triangular rep rejected", !ut.all_pass(), ""});
  return s;
}

SuiteResult suite_hodge(const Config &) {
  SuiteResult s{"hodge", {}, ""};
  append(s.items, hodge_property_suite(hopf_exterior(), CircleAction::hopf()).items);
  return s;
}

SuiteResult suite_haar(const Config &c) {
  SuiteResult s{"haar", {}, ""};
  auto add = [&](std::string n, bool ok, std::string d = "") { s.items.push_back({std::move(n), ok, std::move(d)}); };
  HaarState h(6);
  PolyB z = PolyB::gen('c') * PolyB::gen('C');
  add("h(1) = 1", h(PolyB(1)) == Scalar(1));
  add("h(alpha) = 0", h(PolyB::gen('a')).is_zero());
  add("h(gamma gamma*) = 1/(1+mu^2)", h(z) == (Scalar(1) + Scalar::mu_pow(2)).inv(), h(z).pretty());
  bool zeta = true;
  PolyB p(1);
  for (int n = 0; n <= 3; ++n, p = p * z) zeta = zeta && h(p) == haar_zeta_power(n);
  add("h((gamma gamma*)^n) closed form", zeta);
  add("left invariance", h.left_invariant());
  add("right invariance", h.right_invariant());
  for (int s2 = 0; s2 <= 2; ++s2) {
    OrthogonalityReport o = orthogonality_check(s2, h);
    add("orthogonality s=" + half(s2), o.pass(), o.detail);
  }
  double worst = INFINITY;
  for (auto &m : c.samples) worst = std::min(worst, haar_gram_min_eig(h, 3, m));
  std::ostringstream os;
  os << "min eigenvalue " << worst;
  add("gram positive semidefinite (degree <= 3)", worst > -1e-12, os.str());
  add("unitarity of u", unitarity_check().pass);
  bool coassoc = true, counit = true;
  for (auto &m : monomials_up_to(3)) {
    PolyB x = PolyB::mono(m);
    coassoc = coassoc && coproduct_left_twice(x) == coproduct_right_twice(x);
    counit = counit && counit_axioms(x);
  }
  add("coassociativity (degree <= 3)", coassoc);
  add("counit axioms (degree <= 3)", counit);
  std::mt19937 rng((std::mt19937::result_type)c.seed);
  std::uniform_int_distribution<int> len(0, 6), letter(0, 3);
  bool conf = true;
  for (int it = 0; it < 200; ++it) {
    std::string w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w += "aAcC"[letter(rng)];
    PolyB l = normal_form(w, RewriteStrategy::Leftmost);
    conf = conf && normal_form(w, RewriteStrategy::Rightmost) == l && normal_form(w, RewriteStrategy::Random, &rng) == l;
  }
  add("rewriting confluence (200 seeded words)", conf, "seed " + std::to_string(c.seed));
  std::vector<double> mus;
  for (auto &m : c.samples) mus.push_back(m.get_d());
  AdjointReport a = adjoint_checks(PeterWeylModule(std::max(c.smax2, 9)), mus);
  add("peter-weyl adjoint relation", a.pass, a.detail);
  add("vertical integration kills derivatives", a.wpx);
  add("ladder charges", a.charges);
  add("ladder annihilation at the block edges", a.annihilate);
  return s;
}

SuiteResult suite_dirac(const Config &c) {
  SuiteResult s{"dirac", {}, ""};
  append(s.items, dirac_report(c.smax2, dirac_mus(c)).items);
  double mu = mu_float(c);
  double mu0 = mu < 1 ? mu : 0.5;
  AsymptoticsReport a = asymptotics_fit(mu0, 80);
  std::ostringstream os;
  os << "mu " << mu0 << ", smax 40, slope/expected " << a.ratio;
  s.items.push_back({"asymptotic slope", a.slope_ok, os.str()});
  std::ostringstream ot;
  ot << "tail " << a.tail;
  s.items.push_back({"trace class tail", a.tail_ok, ot.str()});
  return s;
}

SuiteResult suite_lichnerowicz(const Config &c) {
  if (c.smax2 < 1) throw UsageError("spinor module is empty for smax = " + half(c.smax2));
  SuiteResult s{"lichnerowicz", {}, ""};
  std::vector<double> mus = {mu_float(c)};
  if (mus[0] != 1.0) mus.push_back(1.0);
  LichnerowiczReport r = lichnerowicz_check(c.smax2, mus);
  append(s.items, r.suite().items);
  return s;
}

using SuiteFn = SuiteResult (*)(const Config &);
const std::vector<std::pair<std::string, SuiteFn>> &suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"braids", suite_braids},   {"metric", suite_metric}, {"exterior", suite_exterior},
      {"clifford", suite_clifford}, {"hodge", suite_hodge},   {"haar", suite_haar},
      {"dirac", suite_dirac},     {"lichnerowicz", suite_lichnerowicz}};
  return s;
}

int thread_count(const Config &c) {
  int n = c.threads;
  if (n <= 0) {
    if (const char *e = std::getenv("BRAIDSPIN_THREADS")) n = std::atoi(e);
  }
  if (n <= 0) n = (int)std::max(1u, std::thread::hardware_concurrency());
  return n;
}

std::string render(const Config &c, const std::string &suite, const std::vector<SuiteResult> &res, bool &all) {
  all = true;
  for (auto &r : res)
    for (auto &p : r.items) all = all && p.pass;
  if (c.format == "table") {
    std::ostringstream os;
    size_t w = 0;
    for (auto &r : res)
      for (auto &p : r.items) w = std::max(w, p.name.size());
    for (auto &r : res) {
      os << "[" << r.name << "] " << r.note << "\n";
      for (auto &p : r.items) {
        os << "  " << (p.pass ? "PASS" : "FAIL") << "  " << p.name << std::string(w - p.name.size(), ' ');
        if (!p.detail.empty()) os << "  " << p.detail;
        os << "\n";
      }
    }
    os << (all ? "PASS" : "FAIL") << " " << suite << "\n";
    return os.str();
  }
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"mu", c.mu.get_str()}, {"smax", half(c.smax2)}, {"seed", c.seed}};
  j["config"]["samples"] = nlohmann::ordered_json::array();
  for (auto &m : c.samples) j["config"]["samples"].push_back(m.get_str());
  j["pass"] = all;
  for (auto &r : res) {
    nlohmann::ordered_json sj;
    bool ok = true;
    sj["predicates"] = nlohmann::ordered_json::array();
    for (auto &p : r.items) {
      ok = ok && p.pass;
      nlohmann::ordered_json pj = {{"name", p.name}, {"pass", p.pass}};
      if (!p.detail.empty()) pj["detail"] = p.detail;
      sj["predicates"].push_back(pj);
    }
    sj["pass"] = ok;
    if (!r.note.empty()) sj["note"] = r.note;
    j["suites"][r.name] = sj;
  }
  return j.dump(2) + "\n";
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

} // namespace

struct bs_context {
  Config cfg;
  std::string error;
  std::map<std::string, std::string> shown;
};

namespace {

template <class F> int guarded(bs_context *ctx, F &&f) {
  if (!ctx) return BS_USAGE;
  ctx->error.clear();
  try {
    return f();
  } catch (const std::invalid_argument &e) {
    ctx->error = e.what();
    return BS_USAGE;
  } catch (const std::domain_error &e) {
    ctx->error = e.what();
    return BS_USAGE;
  } catch (const std::exception &e) {
    ctx->error = e.what();
    return BS_INTERNAL;
  } catch (...) {
    ctx->error = "unknown internal error";
    return BS_INTERNAL;
  }
}

int emit(char **out, const std::string &s) {
  if (!out) return BS_USAGE;
  *out = dup(s);
  return *out ? BS_OK : BS_INTERNAL;
}

} // namespace

extern "C" {

bs_context *bs_context_new(void) {
  try {
    return new bs_context();
  } catch (...) {
    return nullptr;
  }
}

void bs_context_free(bs_context *ctx) { delete ctx; }

int bs_set_option(bs_context *ctx, const char *key, const char *value) {
  return guarded(ctx, [&] {
    if (!key || !value) throw UsageError("null option");
    std::string k = key, v = value;
    Config &c = ctx->cfg;
    if (k == "mu") {
      mpq_class m = parse_rational(v);
      if (sgn(m) <= 0) throw UsageError("mu must be positive: " + v);
      c.mu = m;
      c.mu_set = true;
    } else if (k == "smax") {
      c.smax2 = parse_smax2(v);
    } else if (k == "mode") {
      if (v != "exact" && v != "float") throw UsageError("mode must be exact or float");
      c.mode = v;
    } else if (k == "samples") {
      c.samples = parse_samples(v);
    } else if (k == "seed") {
      size_t used = 0;
      unsigned long s = std::stoul(v, &used);
      if (used != v.size()) throw UsageError("bad seed: " + v);
      c.seed = s;
    } else if (k == "format") {
      if (v != "json" && v != "table" && v != "csv") throw UsageError("format must be csv, json or table");
      c.format = v;
    } else if (k == "threads") {
      c.threads = std::stoi(v);
    } else {
      throw UsageError("unknown option: " + k);
    }
    return BS_OK;
  });
}

const char *bs_get_option(const bs_context *ctx, const char *key) {
  if (!ctx || !key) return nullptr;
  auto *c = const_cast<bs_context *>(ctx);
  std::string k = key, v;
  const Config &cfg = c->cfg;
  if (k == "mu") v = cfg.mu.get_str();
  else if (k == "smax") v = half(cfg.smax2);
  else if (k == "mode") v = cfg.mode;
  else if (k == "seed") v = std::to_string(cfg.seed);
  else if (k == "format") v = cfg.format;
  else if (k == "threads") v = std::to_string(thread_count(cfg));
  else if (k == "samples") {
    for (size_t i = 0; i < cfg.samples.size(); ++i) v += (i ? "," : "") + cfg.samples[i].get_str();
  } else return nullptr;
  c->shown[k] = v;
  return c->shown[k].c_str();
}

int bs_verify(bs_context *ctx, const char *suite, char **report) {
  return guarded(ctx, [&] {
    std::string name = suite ? suite : "";
    const Config &c = ctx->cfg;
    std::vector<std::pair<std::string, SuiteFn>> run;
    for (auto &s : suites())
      if (name == "all" || s.first == name) run.push_back(s);
    if (run.empty()) throw UsageError("unknown suite: " + name);
    if ((name == "dirac" || name == "lichnerowicz" || name == "all") && c.smax2 < 1)
      throw UsageError("spinor module is empty for smax = " + half(c.smax2));
    std::vector<SuiteResult> res(run.size());
    std::vector<std::string> errors(run.size());
    std::vector<bool> usage(run.size(), false);
    int nt = std::min<int>(thread_count(c), (int)run.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (size_t i; (i = next++) < run.size();) {
        try {
          res[i] = run[i].second(c);
        } catch (const std::invalid_argument &e) {
          errors[i] = e.what();
          usage[i] = true;
        } catch (const std::exception &e) {
          errors[i] = e.what();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();
    for (size_t i = 0; i < run.size(); ++i)
      if (!errors[i].empty()) {
        std::string msg = run[i].first + ": " + errors[i];
        if (usage[i]) throw UsageError(msg);
        throw std::runtime_error(msg);
      }
    bool all = false;
    std::string text = render(c, name, res, all);
    int code = emit(report, text);
    return code != BS_OK ? code : all ? BS_OK : BS_FAIL;
  });
}

int bs_spectrum(bs_context *ctx, char **out) {
  return guarded(ctx, [&] {
    const Config &c = ctx->cfg;
    SpinorModule m(c.smax2);
    if (m.empty()) throw UsageError("spinor module is empty for smax = " + half(c.smax2));
    bool exact = c.mode == "exact";
    double mu = mu_float(c);
    std::string s = c.format == "json" ? spectrum_json(m, mu, exact) + "\n" : spectrum_csv(m, mu, exact);
    return emit(out, s);
  });
}

int bs_asymptotics(bs_context *ctx, char **out) {
  return guarded(ctx, [&] {
    const Config &c = ctx->cfg;
    if (c.smax2 < 40) throw UsageError("asymptotics needs smax >= 20");
    AsymptoticsReport r = asymptotics_fit(mu_float(c), c.smax2);
    return emit(out, r.to_json() + "\n");
  });
}

int bs_hodge_table(bs_context *ctx, char **out) {
  return guarded(ctx, [&] {
    const Config &c = ctx->cfg;
    std::optional<mpq_class> mu;
    if (c.mu_set || c.mode == "float") mu = c.mu;
    return emit(out, hodge_table_csv(hopf_exterior(), mu));
  });
}

int bs_algebra_nf(bs_context *ctx, const char *word, char **out) {
  return guarded(ctx, [&] {
    if (!word) throw UsageError("missing word");
    return emit(out, normal_form(parse_word(word)).compact() + "\n");
  });
}

int bs_haar(bs_context *ctx, int degree, char **out) {
  return guarded(ctx, [&] {
    if (degree < 0 || degree > 8) throw UsageError("Haar degree must lie in [0, 8]");
    return emit(out, HaarState(degree).csv());
  });
}

void bs_string_free(char *s) { std::free(s); }

const char *bs_last_error(const bs_context *ctx) { return ctx ? ctx->error.c_str() : "null context"; }

} // extern "C"
