#include "doctest.h"
#include "hzalg/corpus.hpp"
#include "hzalg/serialize.hpp"

using namespace hzalg;

namespace {

int error_code(const std::string& text) {
  try {
    parse(text);
  } catch (const DocumentError& e) {
    return e.code();
  }
  return 0;
}

}  // namespace

TEST_CASE("documents round-trip") {
  Rng rng(6);
  const std::size_t l = 2, t = 3;
  ChainComplex c = random_complex(rng, Ring::Integers, -1, 2, true);
  ChainComplex q = base_change_Q(random_complex(rng, Ring::Integers, 0, 2, false));
  std::vector<Document> docs = {
      {c, std::nullopt},
      {q, std::nullopt},
      {random_chain_map(rng, c, random_complex(rng, Ring::Integers, -1, 2, true)), std::nullopt},
      {simplicial_sphere(2, t), std::nullopt},
      {random_simplicial_group(rng, Ring::Integers, t, true), std::nullopt},
      {sym_sequence(sphere(1, Ring::Integers, Grading::NonNegative), l), std::nullopt},
      {random_two_cell(rng, l), std::nullopt},
      {sym_sab(l, t), std::nullopt},
      {sphere_sset(l, t), std::nullopt},
      {free_sset(1, boundary_inclusion(1, t), l), std::nullopt},
      {free_abelian(lambda_map(0, l, t)), std::nullopt},
      {free_abelian(boundary_inclusion(1, t)), std::nullopt},
      {boundary_inclusion(2, t), std::nullopt},
      {random_level_equivalence(rng, l, 0), std::nullopt},
      {functor_D(free_spectrum(1, random_small_complex(rng), l)).result, l},
  };
  for (const auto& d : docs) {
    CHECK(round_trips(d));
    CHECK(document_kind(parse(emit(d)).object) == document_kind(d.object));
  }
  Document half{ChainComplex(Ring::Rationals, 0, {FpGroup(Ring::Rationals, 1)}, {}), std::nullopt};
  ChainMap h(std::get<ChainComplex>(half.object), std::get<ChainComplex>(half.object), {{0, Matrix::scalar(1, Scalar(1, 2))}});
  std::string text = emit({h, std::nullopt});
  CHECK(text.find("\"1/2\"") != std::string::npos);
  CHECK(std::get<ChainMap>(parse(text).object).component(0)(0, 0) == Scalar(1, 2));
}

TEST_CASE("document errors") {
  CHECK(error_code("{") == 2);
  CHECK(error_code(R"({"schema_version": 1, "kind": "banana", "ring": "Z", "payload": {}})") == 2);
  CHECK(error_code(R"({"schema_version": 7, "kind": "complex", "ring": "Z", "payload": {}})") == 2);
  CHECK(error_code(R"({"schema_version": 1, "kind": "complex", "ring": "Z", "payload": {"grading": "unbounded", "lo": 0,
      "groups": [{"generators": 1, "relations": {"rows": 1, "cols": 0, "entries": [[]]}},
                 {"generators": 2, "relations": {"rows": 2, "cols": 0, "entries": [[], []]}}],
      "differentials": [{"rows": 1, "cols": 3, "entries": [[1, 0, 0]]}]}})") == 3);
  CHECK(error_code(R"({"schema_version": 1, "kind": "complex", "ring": "Z", "payload": {"grading": "unbounded", "lo": 0,
      "groups": [{"generators": 1, "relations": {"rows": 1, "cols": 0, "entries": [[]]}}], "differentials": []}})") == 0);
}
