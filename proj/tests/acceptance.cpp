#include "braidspin/braidspin.h"
#include "braidspin/dirac.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

using namespace bs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int n, bool ok, const std::string &what) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Verified {
  int rc = BS_INTERNAL;
  std::string text;
  nlohmann::json json;
  double secs = 0;
};

Verified verify(const char *suite) {
  Verified v;
  bs_context *ctx = bs_context_new();
  char *out = nullptr;
  auto t0 = Clock::now();
  v.rc = bs_verify(ctx, suite, &out);
  v.secs = seconds_since(t0);
  if (out) {
    v.text = out;
    bs_string_free(out);
    v.json = nlohmann::json::parse(v.text);
  } else {
    v.text = bs_last_error(ctx);
  }
  bs_context_free(ctx);
  return v;
}

// failing predicate names, or the error text
std::string failing(const Verified &v) {
  if (v.json.is_null()) return "error: " + v.text;
  std::string r;
  for (auto &[name, s] : v.json["suites"].items())
    for (auto &p : s["predicates"])
      if (!p["pass"].get<bool>()) r += (r.empty() ? "" : "; ") + p["name"].get<std::string>();
  return r.empty() ? "all predicates pass" : "failing: " + r;
}

void suite_criterion(int n, const char *suite, const std::string &what) {
  Verified v = verify(suite);
  report(n, v.rc == BS_OK, what + " (" + failing(v) + ")");
}

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

} // namespace

int main() {
  const std::vector<double> floats = {0.25, 0.5, 0.75};

  {
    auto t0 = Clock::now();
    SpinorModule m(21);
    DiracMatrix d = dirac_blocks(m);
    bool exact = closed_form_check(d);
    double dev = 0;
    for (double mu : floats) dev = std::max(dev, float_exact_deviation(m, mu));
    double t = seconds_since(t0);
    report(1, exact && dev < 1e-10 && t < 5,
           "closed form for s <= 21/2 " + std::string(exact ? "exact" : "differs") + ", float deviation " + num(dev) +
               ", " + num(t) + " s");
  }

  {
    SpinorModule m(21);
    DiracMatrix d = dirac_blocks(m);
    bool ok = true;
    std::string bad;
    for (auto &e : spectrum_exact(d, 1.0)) {
      Scalar at1 = e.exact.at(mpq_class(1));
      bool right = at1 == Scalar(e.sign * e.s2) && e.multiplicity == e.s2 + 1;
      if (!right && bad.size() < 80) bad += " s=" + std::to_string(e.s2) + "/2 gives " + at1.pretty();
      ok = ok && right;
    }
    report(2, ok, "spectrum +-2s at mu = 1" + (ok ? std::string() : ";" + bad));
  }

  {
    SpinorModule m(21);
    bool ok = recurrence_check(dirac_blocks(m));
    report(3, ok, "three term recurrence for interior s <= 19/2");
  }

  {
    auto t0 = Clock::now();
    AsymptoticsReport a = asymptotics_fit(0.5, 80);
    double t = seconds_since(t0);
    report(4, a.slope_ok && a.tail_ok && t < 10,
           "slope ratio " + num(a.ratio) + ", tail " + num(a.tail) + ", " + num(t) + " s");
  }

  suite_criterion(5, "braids", "braiding suite on the symbolic hopf pair");
  suite_criterion(6, "exterior", "exterior dimensions and relations");
  suite_criterion(7, "clifford", "clifford suite");
  suite_criterion(8, "hodge", "hodge suite");
  suite_criterion(9, "metric", "metric axioms in both realizations");
  suite_criterion(10, "haar", "haar oracle");

  {
    LichnerowiczReport l = lichnerowicz_check(7, {0.5, 1.0});
    std::string best = l.best >= 0 ? l.candidates[l.best].name() + " residual " + num(l.candidates[l.best].max_residual)
                                   : "none";
    report(11, l.pass(),
           "convention search for s <= 7/2 at mu in {1/2, 1}: best " + best + "; rhat at s = 1/2 " +
               (l.rhat_half && l.rhat_classical ? "matches" : "differs"));
  }

  {
    SymmetryReport s = symmetry_check(9, {0.25, 0.5, 0.75, 1.0});
    report(12, s.dirac < 1e-10 && s.laplacian < 1e-10,
           "symmetry residuals dirac " + num(s.dirac) + ", laplacian " + num(s.laplacian));
  }

  {
    Verified a = verify("all"), b = verify("all");
    bool ran = (a.rc == BS_OK || a.rc == BS_FAIL) && a.rc == b.rc;
    bool same = ran && a.text == b.text;
    double t = std::max(a.secs, b.secs);
    report(13, same && t < 60,
           std::string("verify all ") + (same ? "byte identical" : "differs") + " across runs, " + num(t) + " s");
  }

  return failures ? 1 : 0;
}
