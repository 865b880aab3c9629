#include "doctest.h"
#include "hzalg/suites.hpp"

#include <set>
#include <stdexcept>

using namespace hzalg;

namespace {

SuiteOptions small() {
  SuiteOptions o;
  o.truncation = 2;
  o.simplicial_bound = 4;
  return o;
}

std::string failures(const SuiteReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Fail) s += c.name + " [" + c.detail + "]\n";
  return s;
}

}  // namespace

TEST_CASE("every suite passes at L=2, T=4") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    SuiteReport r = run_suite(name, small());
    INFO(failures(r));
    CHECK(r.passed());
    CHECK(r.count(CheckStatus::Fail) == 0);
    CHECK(r.count(CheckStatus::Pass) > 0);
    CHECK(r.documents > 0);
    CHECK(r.suite == name);
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 11);
  std::set<std::string> names(suite_names().begin(), suite_names().end());
  for (const char* n : {"lem-D", "prop-DR", "prop-DR2", "prop-hz-sab", "prop-sab-ch", "prop-extra", "prop-ma-ch",
                        "lem-D-rat", "dold-kan", "eilenberg-zilber", "prop-cof-gen"})
    CHECK(names.count(n) == 1);
  CHECK(is_suite("lem-D"));
  CHECK_FALSE(is_suite("lem-d"));
  CHECK_THROWS_AS(run_suite("no-such-suite", small()), std::invalid_argument);
}

TEST_CASE("reports are deterministic in the seed") {
  SuiteReport a = run_suite("prop-DR2", small()), b = run_suite("prop-DR2", small());
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].status == b.checks[i].status);
  }
  CHECK(a.documents == b.documents);
}

TEST_CASE("report json") {
  SuiteReport r = run_suite("prop-ma-ch", small());
  Json j = r.to_json();
  CHECK(j.at("suite") == "prop-ma-ch");
  CHECK(j.at("passed") == true);
  CHECK(j.contains("checks"));
  CHECK(j.at("checks").size() == r.checks.size());
  CHECK(j.contains("seconds"));
  const std::string text = r.to_text();
  CHECK(text.find("suite prop-ma-ch (L=2, T=4, seed=1)") != std::string::npos);
  CHECK(text.find("0 failed") != std::string::npos);
}

TEST_CASE("lem-D-rat over Z exhibits the sign-action counterexample") {
  SuiteOptions o = small();
  o.ring = Ring::Integers;
  SuiteReport r = run_suite("lem-D-rat", o);
  CHECK(r.passed());
  bool sign = false;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::Counterexample && c.name.find("sign action") != std::string::npos) {
      sign = true;
      CHECK(c.detail.find("Z/2 vs 0") != std::string::npos);
    }
  CHECK(sign);

  o.ring = Ring::Rationals;
  SuiteReport q = run_suite("lem-D-rat", o);
  CHECK(q.passed());
  CHECK(q.count(CheckStatus::Counterexample) == 0);
}

TEST_CASE("status names") {
  CHECK(status_name(CheckStatus::Pass) == "PASS");
  CHECK(status_name(CheckStatus::Fail) == "FAIL");
  CHECK(status_name(CheckStatus::Counterexample) == "COUNTEREXAMPLE");
}
