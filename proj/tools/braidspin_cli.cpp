#include "braidspin/braidspin.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

namespace {

struct Context {
  bs_context *ctx = bs_context_new();
  ~Context() { bs_context_free(ctx); }
};

std::string trim(const std::string &s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

int load_config(bs_context *ctx, const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read config file " << path << "\n";
    return BS_USAGE;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: " << path << ":" << lineno << ": expected key=value\n";
      return BS_USAGE;
    }
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "out") continue;
    if (int rc = bs_set_option(ctx, key.c_str(), value.c_str())) {
      std::cerr << "error: " << path << ":" << lineno << ": " << bs_last_error(ctx) << "\n";
      return rc;
    }
  }
  return BS_OK;
}

int deliver(bs_context *ctx, int rc, char *text, const std::string &out) {
  if (!text) {
    std::cerr << "error: " << bs_last_error(ctx) << "\n";
    return rc == BS_OK ? BS_INTERNAL : rc;
  }
  std::string s = text;
  bs_string_free(text);
  if (out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(out, std::ios::binary);
    f << s;
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return BS_INTERNAL;
    }
  }
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"braided Clifford algebras, Hodge operators and the quantum Dirac operator on the Hopf fibration"};
  app.require_subcommand(1);
  std::map<std::string, std::string> opt;
  std::string out, config;
  auto flag = [&](const std::string &name, const std::string &help) {
    app.add_option("--" + name, opt[name], help);
  };
  flag("mu", "deformation parameter, p/q or a decimal");
  flag("smax", "spin truncation, n/2 or n");
  flag("mode", "exact or float");
  flag("samples", "comma separated sample values of mu");
  flag("seed", "seed of the randomized checks");
  flag("format", "csv, json or table");
  flag("threads", "parallel suites (defaults to BRAIDSPIN_THREADS)");
  app.add_option("--out", out, "output file");
  app.add_option("--config", config, "key=value configuration file");
  app.fallthrough();

  std::string suite;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "braids, metric, exterior, clifford, hodge, haar, dirac, lichnerowicz or all")
      ->required();
  auto *spectrum = app.add_subcommand("spectrum", "Dirac spectrum");
  auto *asym = app.add_subcommand("asymptotics", "eigenvalue growth fit");
  auto *htable = app.add_subcommand("hodge-table", "Hodge star table as CSV");
  std::string what;
  auto *hodge = app.add_subcommand("hodge", "Hodge star queries");
  hodge->add_option("what", what, "table")->required()->check(CLI::IsMember({"table"}));
  auto *algebra = app.add_subcommand("algebra", "quantum group algebra queries");
  algebra->require_subcommand(1);
  std::string word;
  auto *nf = algebra->add_subcommand("nf", "normal form of a word");
  nf->add_option("word", word, "word in al, al*, ga, ga*")->required();
  int degree = 2;
  auto *haar = app.add_subcommand("haar", "Haar state table as CSV");
  haar->add_option("--degree", degree, "maximal monomial degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : BS_USAGE;
  }

  Context c;
  if (!c.ctx) return BS_INTERNAL;
  if (!config.empty())
    if (int rc = load_config(c.ctx, config)) return rc;
  for (auto &[k, v] : opt) {
    if (v.empty()) continue;
    if (int rc = bs_set_option(c.ctx, k.c_str(), v.c_str())) {
      std::cerr << "error: " << bs_last_error(c.ctx) << "\n";
      return rc;
    }
  }
  if (opt["mu"].find_first_of(".eE") != std::string::npos)
    std::cerr << "mu " << opt["mu"] << " read as " << bs_get_option(c.ctx, "mu") << "\n";

  char *text = nullptr;
  int rc = BS_USAGE;
  if (*verify) {
    if (opt["format"].empty()) bs_set_option(c.ctx, "format", "json");
    rc = bs_verify(c.ctx, suite.c_str(), &text);
  } else if (*spectrum) {
    rc = bs_spectrum(c.ctx, &text);
  } else if (*asym) {
    rc = bs_asymptotics(c.ctx, &text);
  } else if (*htable || *hodge) {
    rc = bs_hodge_table(c.ctx, &text);
  } else if (*nf) {
    rc = bs_algebra_nf(c.ctx, word.c_str(), &text);
  } else if (*haar) {
    rc = bs_haar(c.ctx, degree, &text);
  }
  if (rc == BS_USAGE || rc == BS_INTERNAL) {
    if (text) bs_string_free(text);
    std::cerr << "error: " << bs_last_error(c.ctx) << "\n";
    return rc;
  }
  return deliver(c.ctx, rc, text, out);
}
