#include "cli.hpp"
#include "doctest.h"
#include "hzalg/serialize.hpp"

#include <sstream>

using namespace hzalg;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string doc(DocumentObject o) { return emit(Document{std::move(o), std::nullopt}); }

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("homology examples") {
  CHECK(trimmed(invoke({"homology", "--degree", "2"}, doc(disk(3))).out) == "0");
  CHECK(trimmed(invoke({"homology", "-d", "1"}, doc(sphere(1))).out) == "Z");
  CHECK(trimmed(invoke({"homology", "-d", "-1"}, doc(sphere(-1))).out) == "Z");

  Run r = invoke({"apply", "-p", "R"}, doc(sphere(0)));
  REQUIRE(r.code == 0);
  Run h = invoke({"homology", "--level", "2", "--degree", "2"}, r.out);
  CHECK(h.code == 0);
  CHECK(trimmed(h.out) == "Z");
  CHECK(trimmed(invoke({"homology", "--level", "2", "--degree", "1"}, r.out).out) == "0");
}

TEST_CASE("apply examples") {
  Run rd = invoke({"apply", "-p", "R,D"}, doc(sphere(0)));
  REQUIRE(rd.code == 0);
  Document d = parse(rd.out);
  REQUIRE(std::holds_alternative<ChainComplex>(d.object));
  CHECK(same_complex(std::get<ChainComplex>(d.object), sphere(0)));

  ChainSpectrum f = free_spectrum(2, disk(3, Ring::Integers, Grading::NonNegative), 3);
  Run dd = invoke({"apply", "--pipeline", "D"}, doc(f));
  REQUIRE(dd.code == 0);
  Document e = parse(dd.out);
  REQUIRE(std::holds_alternative<ChainComplex>(e.object));
  const ChainComplex& c = std::get<ChainComplex>(e.object);
  CHECK(same_complex(c, disk(1)));
  CHECK(is_acyclic(c));
  REQUIRE(e.exactness_bound);
  CHECK(*e.exactness_bound == 3);

  Run id = invoke({"apply", "-p", ""}, doc(disk(2)));
  REQUIRE(id.code == 0);
  CHECK(emit(parse(id.out)) == doc(disk(2)));
}

TEST_CASE("exit codes") {
  // parse errors
  CHECK(invoke({"homology", "-d", "0"}, "{not json").code == cli::kUsage);
  CHECK(invoke({"homology", "-d", "0"}, R"({"schema_version":1,"kind":"complex"})").code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"apply", "-p", "Q"}, doc(sphere(0))).code == cli::kUsage);

  // dimension mismatch
  Json j = to_json(Document{disk(3), std::nullopt});
  j["payload"]["differentials"][0] = Json{{"rows", 2}, {"cols", 1}, {"entries", {{1}, {0}}}};
  CHECK(invoke({"homology", "-d", "2"}, j.dump()).code == cli::kDimension);

  // category mismatch: D wants a spectrum
  CHECK(invoke({"apply", "-p", "D"}, doc(sphere(0))).code == cli::kCategory);
  CHECK(invoke({"apply", "-p", "R,R"}, doc(sphere(0))).code == cli::kCategory);

  // truncation insufficient
  ChainSpectrum f = free_spectrum(1, sphere(0, Ring::Integers, Grading::NonNegative), 3);
  CHECK(invoke({"apply", "-p", "D", "-L", "4"}, doc(f)).code == cli::kTruncation);
  CHECK(invoke({"apply", "-p", "D", "-L", "2"}, doc(f)).code == cli::kOk);
  CHECK(invoke({"homology", "--level", "7", "-d", "0"}, doc(f)).code == cli::kTruncation);
}

TEST_CASE("verify") {
  Run ok = invoke({"verify", "prop-ma-ch", "-L", "2", "-T", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("0 failed") != std::string::npos);

  Run unknown = invoke({"verify", "lemma-Q"});
  CHECK(unknown.code == cli::kUsage);
  CHECK(unknown.err.find("lem-D") != std::string::npos);
  CHECK(invoke({"verify", "lem-D", "-L", "5"}).code == cli::kUsage);
  CHECK(invoke({"verify", "lem-D", "-T", "7"}).code == cli::kUsage);

  Run z = invoke({"verify", "lem-D-rat", "--ring", "Z", "-L", "2", "-T", "4"});
  CHECK(z.code == 0);
  CHECK(z.out.find("COUNTEREXAMPLE  H(C_Sigma) = H(C)_Sigma over Z, sign action") != std::string::npos);

  Run d = invoke({"verify", "dold-kan", "-L", "2", "-T", "4", "--format", "doc"});
  CHECK(d.code == 0);
  Json reports = Json::parse(d.out);
  REQUIRE(reports.is_array());
  CHECK(reports[0].at("suite") == "dold-kan");
}

TEST_CASE("show and file input") {
  Run s = invoke({"show"}, doc(disk(3)));
  CHECK(s.code == 0);
  CHECK(s.out.find("complex over Z") != std::string::npos);
  CHECK(invoke({"show", "/nonexistent/input.json"}).code == cli::kUsage);
}

TEST_CASE("ring flag") {
  Run q = invoke({"apply", "-p", "", "--ring", "Q"}, doc(sphere(0)));
  REQUIRE(q.code == 0);
  CHECK(document_ring(parse(q.out).object) == Ring::Rationals);
  CHECK(invoke({"apply", "-p", "", "--ring", "Z"}, q.out).code == cli::kCategory);
  CHECK(trimmed(invoke({"homology", "-d", "0"}, q.out).out) == "Q");
}
