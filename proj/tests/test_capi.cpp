#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidspin/braidspin.h"

#include <json.hpp>

#include <string>

namespace {

struct Ctx {
  bs_context *c = bs_context_new();
  ~Ctx() { bs_context_free(c); }
};

std::string take(char *s) {
  std::string r = s ? s : "";
  bs_string_free(s);
  return r;
}

} // namespace

TEST_CASE("options") {
  Ctx x;
  REQUIRE(x.c);
  CHECK(std::string(bs_get_option(x.c, "mu")) == "1/2");
  CHECK(std::string(bs_get_option(x.c, "smax")) == "11/2");
  CHECK(bs_set_option(x.c, "mu", "0.25") == BS_OK);
  CHECK(std::string(bs_get_option(x.c, "mu")) == "1/4");
  CHECK(bs_set_option(x.c, "smax", "7/2") == BS_OK);
  CHECK(std::string(bs_get_option(x.c, "smax")) == "7/2");
  CHECK(bs_set_option(x.c, "smax", "1/3") == BS_USAGE);
  CHECK(std::string(bs_last_error(x.c)).find("1/2") != std::string::npos);
  CHECK(bs_set_option(x.c, "mu", "-1") == BS_USAGE);
  CHECK(bs_set_option(x.c, "mode", "symbolic") == BS_USAGE);
  CHECK(bs_set_option(x.c, "samples", "1/4,2") == BS_USAGE);
  CHECK(bs_set_option(x.c, "colour", "red") == BS_USAGE);
  CHECK(bs_get_option(x.c, "colour") == nullptr);
  CHECK(bs_set_option(nullptr, "mu", "1") == BS_USAGE);
}

TEST_CASE("verify codes") {
  Ctx x;
  char *out = nullptr;
  CHECK(bs_verify(x.c, "nonsense", &out) == BS_USAGE);
  CHECK(out == nullptr);
  bs_set_option(x.c, "smax", "0");
  CHECK(bs_verify(x.c, "dirac", &out) == BS_USAGE);
  bs_set_option(x.c, "smax", "7/2");
  CHECK(bs_verify(x.c, "hodge", &out) == BS_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["pass"] == true);
  CHECK(j["suites"]["hodge"]["predicates"].size() > 0);
  CHECK(bs_verify(x.c, "lichnerowicz", &out) == BS_FAIL);
  CHECK(nlohmann::json::parse(take(out))["pass"] == false);
}

TEST_CASE("braids specialized at mu = 1") {
  Ctx x;
  char *out = nullptr;
  bs_set_option(x.c, "mu", "1");
  CHECK(bs_verify(x.c, "braids", &out) == BS_OK);
  take(out);
}

TEST_CASE("deterministic reports") {
  std::string a, b;
  for (std::string *s : {&a, &b}) {
    Ctx x;
    char *out = nullptr;
    bs_set_option(x.c, "smax", "5/2");
    bs_set_option(x.c, "threads", s == &a ? "1" : "4");
    bs_verify(x.c, "all", &out);
    *s = take(out);
  }
  CHECK(!a.empty());
  CHECK(a == b);
}

TEST_CASE("spectrum output") {
  Ctx x;
  char *out = nullptr;
  bs_set_option(x.c, "mu", "1");
  bs_set_option(x.c, "smax", "5/2");
  bs_set_option(x.c, "format", "csv");
  REQUIRE(bs_spectrum(x.c, &out) == BS_OK);
  std::string s = take(out);
  CHECK(s.rfind("s,lambda_exact,lambda_float,multiplicity\n", 0) == 0);
  CHECK(s.find(",3,6\n") != std::string::npos);
  CHECK(s.find("1/2,\"-1\",-1,2") != std::string::npos);
  bs_set_option(x.c, "format", "json");
  REQUIRE(bs_spectrum(x.c, &out) == BS_OK);
  CHECK_NOTHROW(nlohmann::json::parse(take(out)));
}

TEST_CASE("asymptotics needs a long module") {
  Ctx x;
  char *out = nullptr;
  CHECK(bs_asymptotics(x.c, &out) == BS_USAGE);
  bs_set_option(x.c, "smax", "20");
  REQUIRE(bs_asymptotics(x.c, &out) == BS_OK);
  auto j = nlohmann::json::parse(take(out));
  CHECK(j.contains("ratio"));
}

TEST_CASE("algebra and haar") {
  Ctx x;
  char *out = nullptr;
  REQUIRE(bs_algebra_nf(x.c, "ga al", &out) == BS_OK);
  CHECK(take(out) == "mu^-1 al ga\n");
  CHECK(bs_algebra_nf(x.c, "al zz", &out) == BS_USAGE);
  REQUIRE(bs_haar(x.c, 2, &out) == BS_OK);
  CHECK(take(out).find("g g*,1/(1+mu^2)") != std::string::npos);
  CHECK(bs_haar(x.c, 99, &out) == BS_USAGE);
}

TEST_CASE("hodge table") {
  Ctx x;
  char *out = nullptr;
  REQUIRE(bs_hodge_table(x.c, &out) == BS_OK);
  std::string s = take(out);
  CHECK(!s.empty());
}
